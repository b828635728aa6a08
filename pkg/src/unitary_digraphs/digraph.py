"""Multidigraphs, 0/1 patterns, line digraphs and permutation machinery.

Vertices are dense indices ``0..n-1``. A :class:`Digraph` keeps an ordered
tuple of arcs, and the position of an arc in that tuple is its id; loops and
parallel arcs are allowed. Patterns are square ``uint8`` numpy arrays with
entries in ``{0, 1}``; multiplicities collapse when a digraph is turned into
its pattern.
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .errors import PreconditionError, SearchLimitExceeded

__all__ = [
    "Digraph",
    "ArcLabel",
    "as_pattern",
    "is_well_formed_pattern",
    "pattern_offenders",
    "out_neighborhood",
    "in_neighborhood",
    "degrees",
    "is_degree_balanced",
    "unbalanced_vertices",
    "is_strongly_connected",
    "strong_components",
    "well_formed",
    "line_digraph",
    "pattern_of",
    "digraph_of",
    "support_of",
    "as_permutation",
    "invert_permutation",
    "permutation_matrix",
    "apply_permutations",
    "permute_pattern",
    "is_permutation_equivalent",
    "complement",
    "from_edges",
]


@dataclass(frozen=True)
class Digraph:
    """Labeled multidigraph ``D = (V, A)`` with ``V = {0, ..., n-1}``."""

    n: int
    arcs: tuple[tuple[int, int], ...] = field(default=())

    def __post_init__(self):
        arcs = tuple((int(t), int(h)) for t, h in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        if self.n < 1:
            raise PreconditionError(f"a digraph needs at least one vertex, got n={self.n}")
        for k, (t, h) in enumerate(arcs):
            if not (0 <= t < self.n and 0 <= h < self.n):
                raise PreconditionError(f"arc {k} = ({t}, {h}) out of range for n={self.n}")

    @property
    def m(self) -> int:
        return len(self.arcs)

    def tails(self) -> np.ndarray:
        return np.fromiter((t for t, _ in self.arcs), dtype=np.intp, count=self.m)

    def heads(self) -> np.ndarray:
        return np.fromiter((h for _, h in self.arcs), dtype=np.intp, count=self.m)

    def in_arcs(self, v: int) -> list[int]:
        """Ids of arcs with head ``v``, ascending."""
        return [k for k, (_, h) in enumerate(self.arcs) if h == v]

    def out_arcs(self, v: int) -> list[int]:
        """Ids of arcs with tail ``v``, ascending."""
        return [k for k, (t, _) in enumerate(self.arcs) if t == v]

    def is_simple(self) -> bool:
        """True when there are no parallel arcs (loops are fine)."""
        return len(set(self.arcs)) == len(self.arcs)

    def reversed(self) -> Digraph:
        return Digraph(self.n, tuple((h, t) for t, h in self.arcs))


@dataclass(frozen=True)
class ArcLabel:
    """Origin of a line-digraph vertex: arc ``arc_id = (tail, head)`` of the base digraph."""

    tail: int
    head: int
    arc_id: int


def _check_vertex(D: Digraph, v: int) -> None:
    if not 0 <= v < D.n:
        raise PreconditionError(f"vertex {v} out of range for n={D.n}")


# --------------------------------------------------------------------------
# patterns


def as_pattern(P) -> np.ndarray:
    """Validate and return a read-only square 0/1 ``uint8`` array."""
    if isinstance(P, Digraph):
        return pattern_of(P)
    arr = np.asarray(P)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise PreconditionError(f"pattern must be square, got shape {arr.shape}")
    if arr.shape[0] == 0:
        raise PreconditionError("pattern must be non-empty")
    if not np.isin(arr, (0, 1)).all():
        raise PreconditionError("pattern entries must be 0 or 1")
    out = arr.astype(np.uint8, copy=True)
    out.flags.writeable = False
    return out


def pattern_offenders(P) -> tuple[list[int], list[int]]:
    """Indices of zero rows and zero columns."""
    P = as_pattern(P)
    return (np.flatnonzero(P.sum(axis=1) == 0).tolist(),
            np.flatnonzero(P.sum(axis=0) == 0).tolist())


def is_well_formed_pattern(P) -> bool:
    rows, cols = pattern_offenders(P)
    return not rows and not cols


def pattern_of(D: Digraph) -> np.ndarray:
    """Adjacency pattern of ``D``; parallel arcs collapse to a single 1."""
    P = np.zeros((D.n, D.n), dtype=np.uint8)
    for t, h in D.arcs:
        P[t, h] = 1
    P.flags.writeable = False
    return P


def digraph_of(P) -> Digraph:
    """One arc per 1-entry, arc ids in row-major order."""
    P = as_pattern(P)
    rows, cols = np.nonzero(P)
    return Digraph(P.shape[0], tuple(zip(rows.tolist(), cols.tolist())))


def support_of(M, zero_tol: float = 1e-12) -> np.ndarray:
    """0/1 pattern marking entries with modulus strictly above ``zero_tol``."""
    M = np.asarray(M)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise PreconditionError(f"matrix must be square, got shape {M.shape}")
    if zero_tol < 0:
        raise PreconditionError("zero_tol must be non-negative")
    S = (np.abs(M) > zero_tol).astype(np.uint8)
    S.flags.writeable = False
    return S


# --------------------------------------------------------------------------
# neighborhoods, degrees, connectivity


def out_neighborhood(D: Digraph, v: int) -> set[int]:
    _check_vertex(D, v)
    return {h for t, h in D.arcs if t == v}


def in_neighborhood(D: Digraph, v: int) -> set[int]:
    _check_vertex(D, v)
    return {t for t, h in D.arcs if h == v}


def degrees(D: Digraph, v: int) -> tuple[int, int]:
    """``(invalency, outvalency)`` of ``v``, counting parallel arcs separately."""
    _check_vertex(D, v)
    indeg = sum(1 for _, h in D.arcs if h == v)
    outdeg = sum(1 for t, _ in D.arcs if t == v)
    return indeg, outdeg


def _degree_arrays(D: Digraph) -> tuple[np.ndarray, np.ndarray]:
    indeg = np.bincount(D.heads(), minlength=D.n)
    outdeg = np.bincount(D.tails(), minlength=D.n)
    return indeg, outdeg


def unbalanced_vertices(D: Digraph) -> list[int]:
    indeg, outdeg = _degree_arrays(D)
    return np.flatnonzero(indeg != outdeg).tolist()


def is_degree_balanced(D: Digraph) -> bool:
    """Every vertex has invalency equal to outvalency (no connectivity required)."""
    return not unbalanced_vertices(D)


def strong_components(D: Digraph) -> list[list[int]]:
    """Strongly connected components, each sorted, ordered by smallest member.

    Iterative Tarjan, so deep digraphs do not hit the recursion limit.
    """
    succ = [sorted(out_neighborhood(D, v)) for v in range(D.n)]
    index = [-1] * D.n
    low = [0] * D.n
    on_stack = [False] * D.n
    stack: list[int] = []
    comps: list[list[int]] = []
    counter = 0
    for root in range(D.n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, i = work.pop()
            if i == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            while i < len(succ[v]):
                w = succ[v][i]
                i += 1
                if index[w] == -1:
                    work.append((v, i))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps.sort(key=lambda c: c[0])
    return comps


def is_strongly_connected(D: Digraph) -> bool:
    return len(strong_components(D)) == 1


def well_formed(D: Digraph) -> tuple[bool, list[int]]:
    """Check for sources and sinks.

    Returns ``(ok, offenders)`` where offenders are the vertices with no
    incoming or no outgoing arc.
    """
    indeg, outdeg = _degree_arrays(D)
    offenders = np.flatnonzero((indeg == 0) | (outdeg == 0)).tolist()
    return not offenders, offenders


# --------------------------------------------------------------------------
# line digraph


def line_digraph(D: Digraph) -> tuple[Digraph, list[ArcLabel]]:
    """Line digraph of ``D`` and the label of each of its vertices.

    Vertex ``k`` of the result is arc ``k`` of ``D``. There is an arc from
    ``a`` to ``b`` exactly when ``head(a) == tail(b)``; the result never has
    parallel arcs even when ``D`` does.
    """
    if D.m == 0:
        raise PreconditionError("line digraph of a digraph with no arcs is empty")
    out_by_vertex = [D.out_arcs(v) for v in range(D.n)]
    arcs = [(a, b) for a, (_, h) in enumerate(D.arcs) for b in out_by_vertex[h]]
    labels = [ArcLabel(t, h, k) for k, (t, h) in enumerate(D.arcs)]
    return Digraph(D.m, tuple(arcs)), labels


# --------------------------------------------------------------------------
# permutations


def as_permutation(p, n: int | None = None) -> np.ndarray:
    """Validate an image array (``p[i]`` is where ``i`` goes)."""
    arr = np.asarray(p, dtype=np.intp)
    if arr.ndim != 1:
        raise PreconditionError("permutation must be a 1-d image array")
    if n is not None and arr.size != n:
        raise PreconditionError(f"permutation has size {arr.size}, expected {n}")
    if not np.array_equal(np.sort(arr), np.arange(arr.size)):
        raise PreconditionError(f"not a permutation of 0..{arr.size - 1}: {arr.tolist()}")
    return arr


def invert_permutation(p) -> np.ndarray:
    p = as_permutation(p)
    inv = np.empty_like(p)
    inv[p] = np.arange(p.size)
    return inv


def permutation_matrix(p) -> np.ndarray:
    """Matrix ``Pm`` with ``(Pm @ M)[p[i]] == M[i]``."""
    p = as_permutation(p)
    Pm = np.zeros((p.size, p.size), dtype=np.uint8)
    Pm[p, np.arange(p.size)] = 1
    return Pm


def apply_permutations(D: Digraph, P, Q) -> Digraph:
    """Relabel tails by ``P`` and heads by ``Q``: arc ``(i, j)`` becomes ``(P[i], Q[j])``.

    The pattern of the result is ``Pm @ pattern_of(D) @ Qm`` with ``Qm`` the
    matrix that sends column ``j`` to column ``Q[j]``.
    """
    P = as_permutation(P, D.n)
    Q = as_permutation(Q, D.n)
    return Digraph(D.n, tuple((int(P[t]), int(Q[h])) for t, h in D.arcs))


def permute_pattern(P, row_perm, col_perm) -> np.ndarray:
    """Pattern counterpart of :func:`apply_permutations`."""
    P = as_pattern(P)
    n = P.shape[0]
    r = as_permutation(row_perm, n)
    c = as_permutation(col_perm, n)
    out = np.zeros_like(P)
    out[np.ix_(r, c)] = P
    out.flags.writeable = False
    return out


def is_permutation_equivalent(P1, P2, max_n: int = 8):
    """Search for ``(P, Q)`` with ``permute_pattern(P1, P, Q) == P2``.

    Backtracks over row assignments; after each assignment the multiset of
    partial column vectors must agree on both sides, which prunes most
    branches. Returns ``(True, (P, Q))`` or ``(False, None)``.

    Raises :class:`SearchLimitExceeded` for ``n > max_n`` rather than guess.
    """
    A = as_pattern(P1)
    B = as_pattern(P2)
    if A.shape != B.shape:
        return False, None
    n = A.shape[0]
    if n > max_n:
        raise SearchLimitExceeded(f"permutation equivalence limited to n <= {max_n}, got {n}")
    if A.sum() != B.sum():
        return False, None
    if sorted(A.sum(axis=1)) != sorted(B.sum(axis=1)):
        return False, None
    if sorted(A.sum(axis=0)) != sorted(B.sum(axis=0)):
        return False, None

    # rows of A are assigned in order 0..n-1; assign[i] = row of B
    assign: list[int] = []
    used = [False] * n
    A_rows = [tuple(r) for r in A.tolist()]
    B_rows = [tuple(r) for r in B.tolist()]
    A_rowsum = A.sum(axis=1)
    B_rowsum = B.sum(axis=1)

    def columns_compatible(depth: int) -> bool:
        a_cols = sorted(tuple(A_rows[i][j] for i in range(depth)) for j in range(n))
        b_cols = sorted(tuple(B_rows[assign[i]][j] for i in range(depth)) for j in range(n))
        return a_cols == b_cols

    def backtrack(depth: int) -> bool:
        if depth == n:
            return True
        for k in range(n):
            if used[k] or B_rowsum[k] != A_rowsum[depth]:
                continue
            used[k] = True
            assign.append(k)
            if columns_compatible(depth + 1) and backtrack(depth + 1):
                return True
            assign.pop()
            used[k] = False
        return False

    if not backtrack(0):
        return False, None

    row_perm = np.array(assign, dtype=np.intp)
    # match columns with identical full vectors
    A_perm_rows = np.zeros_like(A)
    A_perm_rows[row_perm] = A
    col_perm = np.empty(n, dtype=np.intp)
    taken = [False] * n
    for j in range(n):
        for k in range(n):
            if not taken[k] and np.array_equal(A_perm_rows[:, j], B[:, k]):
                col_perm[j] = k
                taken[k] = True
                break
    assert np.array_equal(permute_pattern(A, row_perm, col_perm), B)
    return True, (row_perm, col_perm)


# --------------------------------------------------------------------------
# complement


def complement(D: Digraph) -> Digraph:
    """Flip every pattern entry, diagonal included.

    Including loops is what makes the triangle ``J - I`` complement to the
    identity pattern.
    """
    if not D.is_simple():
        raise PreconditionError("complement is defined for digraphs without parallel arcs")
    present = set(D.arcs)
    arcs = tuple((i, j) for i, j in product(range(D.n), repeat=2) if (i, j) not in present)
    return Digraph(D.n, arcs)


def from_edges(n: int, edges: Iterable[Sequence[int]]) -> Digraph:
    """Bidirected digraph: both ``(u, v)`` and ``(v, u)`` for every edge."""
    arcs = []
    for u, v in edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(n, tuple(arcs))
