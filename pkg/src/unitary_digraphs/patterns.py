"""Combinatorial conditions on 0/1 patterns.

Rows of a pattern are out-neighbourhoods and columns are in-neighbourhoods
of the corresponding digraph, so every condition here is checked on the
rows of ``P`` and on the rows of ``P.T``.

Strong quadrangularity is decided exactly. A set ``S`` of rows (at least
two) is a *violating set* when every row of ``S`` shares a column with some
other row of ``S`` and the columns covered by two or more rows of ``S`` number
fewer than ``|S|``. Rows of a unitary matrix indexed by such an ``S`` would be
orthonormal vectors that interact only inside too few coordinates, so no
unitary matrix has a pattern with a violating set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .digraph import as_pattern, pattern_offenders
from .errors import NotWellFormedError, SearchLimitExceeded

__all__ = [
    "ROWS",
    "COLUMNS",
    "SqWitness",
    "SpecularBlocks",
    "check_witness",
    "is_quadrangular",
    "is_strongly_quadrangular",
    "is_specular",
    "is_line_digraph",
    "square_blocks",
    "DEFAULT_SQ_CAP",
]

ROWS = "rows"
COLUMNS = "columns"
DEFAULT_SQ_CAP = 20


@dataclass(frozen=True)
class SqWitness:
    """A violating row or column set ``S`` and the indices ``shared`` it crowds into."""

    side: str
    S: tuple[int, ...]
    shared: tuple[int, ...]

    def to_dict(self) -> dict:
        return {"side": self.side, "S": list(self.S), "shared": list(self.shared)}

    @classmethod
    def from_dict(cls, d: dict) -> SqWitness:
        return cls(d["side"], tuple(d["S"]), tuple(d["shared"]))


@dataclass(frozen=True)
class SpecularBlocks:
    """Independent all-ones blocks of a specular pattern.

    ``blocks[k] = (rows, cols)``; ordered by smallest row index.
    ``independent`` records that the pattern is exactly the union of the
    blocks, checked when the decomposition was built.
    """

    blocks: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]
    independent: bool = True

    def __iter__(self):
        return iter(self.blocks)

    def __len__(self):
        return len(self.blocks)

    def to_dict(self) -> dict:
        return {"blocks": [[list(r), list(c)] for r, c in self.blocks],
                "independent": self.independent}


def _require_well_formed(P: np.ndarray) -> None:
    rows, cols = pattern_offenders(P)
    if rows or cols:
        raise NotWellFormedError(
            f"pattern has zero rows {rows} and zero columns {cols}", rows + cols
        )


def _side_matrix(P: np.ndarray, side: str) -> np.ndarray:
    return P if side == ROWS else P.T


def _masks(M: np.ndarray) -> list[int]:
    return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in M]


def _bits(mask: int) -> tuple[int, ...]:
    out = []
    j = 0
    while mask:
        if mask & 1:
            out.append(j)
        mask >>= 1
        j += 1
    return tuple(out)


def check_witness(P, w: SqWitness) -> bool:
    """Re-derive ``w`` from ``P`` with plain set arithmetic."""
    P = as_pattern(P)
    if w.side not in (ROWS, COLUMNS):
        return False
    M = _side_matrix(P, w.side)
    n = M.shape[0]
    S = list(w.S)
    if len(S) < 2 or len(set(S)) != len(S) or not all(0 <= i < n for i in S):
        return False
    supp = {i: set(np.flatnonzero(M[i]).tolist()) for i in S}
    cover_count: dict[int, int] = {}
    for i in S:
        for j in supp[i]:
            cover_count[j] = cover_count.get(j, 0) + 1
    shared = {j for j, c in cover_count.items() if c >= 2}
    if shared != set(w.shared):
        return False
    for i in S:
        if not any(supp[i] & supp[k] for k in S if k != i):
            return False
    return len(shared) < len(S)


def is_quadrangular(P):
    """No two distinct rows, and no two distinct columns, share exactly one index.

    Returns ``(True, None)`` or ``(False, (i, j, side))`` for the first
    offending pair, rows scanned before columns.
    """
    P = as_pattern(P)
    _require_well_formed(P)
    for side in (ROWS, COLUMNS):
        M = _side_matrix(P, side).astype(np.int64)
        overlap = M @ M.T
        n = overlap.shape[0]
        for i in range(n):
            for j in range(i + 1, n):
                if overlap[i, j] == 1:
                    return False, (i, j, side)
    return True, None


def _overlap_components(masks: list[int]) -> list[list[int]]:
    n = len(masks)
    seen = [False] * n
    comps = []
    for start in range(n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        frontier = [start]
        while frontier:
            i = frontier.pop()
            for k in range(n):
                if not seen[k] and masks[i] & masks[k]:
                    seen[k] = True
                    comp.append(k)
                    frontier.append(k)
        comps.append(sorted(comp))
    return comps


def _search_size(masks: list[int], comp: list[int], k: int):
    """Lexicographically first violating set of size ``k`` inside ``comp``."""
    chosen: list[int] = []

    def dfs(start: int, covered: int, shared: int):
        if len(chosen) == k:
            if all(masks[i] & shared for i in chosen):
                return tuple(chosen), shared
            return None
        for idx in range(start, len(comp) - (k - len(chosen)) + 1):
            i = comp[idx]
            new_shared = shared | (covered & masks[i])
            # shared columns only grow as rows are added
            if new_shared.bit_count() >= k:
                continue
            chosen.append(i)
            found = dfs(idx + 1, covered | masks[i], new_shared)
            chosen.pop()
            if found is not None:
                return found
        return None

    return dfs(0, 0, 0)


def is_strongly_quadrangular(P, cap: int = DEFAULT_SQ_CAP, *, require_well_formed: bool = True):
    """Exact strong-quadrangularity test with a minimum-size witness.

    Candidate sets are searched by increasing size, rows before columns at
    each size, and only inside connected components of the overlap graph
    (a minimal violating set never straddles two components). Returns
    ``(True, None)`` or ``(False, SqWitness)``.

    Raises :class:`SearchLimitExceeded` if an overlap component has more than
    ``cap`` members.
    """
    P = as_pattern(P)
    if require_well_formed:
        _require_well_formed(P)
    sides = {}
    for side in (ROWS, COLUMNS):
        masks = _masks(_side_matrix(P, side))
        comps = [c for c in _overlap_components(masks) if len(c) >= 2]
        for c in comps:
            if len(c) > cap:
                raise SearchLimitExceeded(
                    f"undecided: {side} overlap component of size {len(c)} exceeds cap {cap}"
                )
        sides[side] = (masks, comps)

    largest = max((len(c) for _, comps in sides.values() for c in comps), default=0)
    for k in range(2, largest + 1):
        for side in (ROWS, COLUMNS):
            masks, comps = sides[side]
            hits = [h for c in comps if len(c) >= k and (h := _search_size(masks, c, k))]
            if hits:
                S, shared = min(hits)
                return False, SqWitness(side, S, _bits(shared))
    return True, None


def _classes(M: np.ndarray):
    """Group equal rows; None if two distinct rows overlap."""
    masks = _masks(M)
    for i, j in combinations(range(len(masks)), 2):
        if masks[i] & masks[j] and masks[i] != masks[j]:
            return None, (i, j)
    groups: dict[int, list[int]] = {}
    for i, m in enumerate(masks):
        groups.setdefault(m, []).append(i)
    return groups, None


def is_specular(P, *, require_well_formed: bool = True):
    """Row supports pairwise equal or disjoint, and likewise for columns.

    Returns ``(True, SpecularBlocks)`` or ``(False, (i, j, side))``. Zero rows
    and columns, when allowed, belong to no block.
    """
    P = as_pattern(P)
    if require_well_formed:
        _require_well_formed(P)
    row_groups, bad = _classes(P)
    if bad is not None:
        return False, (*bad, ROWS)
    _, bad = _classes(P.T)
    if bad is not None:
        return False, (*bad, COLUMNS)
    blocks = sorted((tuple(rows), _bits(mask)) for mask, rows in row_groups.items() if mask)
    rebuilt = np.zeros_like(P)
    for rows, cols in blocks:
        rebuilt[np.ix_(rows, cols)] = 1
    return True, SpecularBlocks(tuple(blocks), bool(np.array_equal(rebuilt, P)))


def is_line_digraph(P) -> bool:
    """A pattern is the pattern of a line digraph exactly when it is specular."""
    return is_specular(P)[0]


def square_blocks(blocks: SpecularBlocks) -> bool:
    return all(len(rows) == len(cols) for rows, cols in blocks)
