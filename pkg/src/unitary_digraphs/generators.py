"""Named digraph families.

Labeling conventions (all 0-based):

* ``n_path``: vertices ``0..n-1`` in path order; arcs ``(i, i+1), (i+1, i)``
  for ``i = 0..n-2``.
* ``n_path_loops``: loops ``(i, i)`` for every vertex first, then the
  ``n_path`` arcs.
* ``cycle``: bidirected cycle on ``n`` distinct vertices, ``n_path`` arcs
  followed by ``(n-1, 0), (0, n-1)``.
* ``directed_cycle``: ``(i, i+1 mod n)``.
* ``complete``: all ``n**2`` arcs including loops, row-major.
* ``complete_loopless``: all arcs ``(i, j)`` with ``i != j``, row-major.
* ``petersen``: outer 5-cycle ``0..4``, inner pentagram ``5..9`` with
  ``5+i -- 5+(i+2)%5``, spokes ``i -- 5+i``. Bidirected.
* ``ladder``: ``n/2`` disjoint copies of ``K_2`` on ``(2k, 2k+1)``.
* ``random_balanced``: union of random directed cycles (seeded).
* ``random_strongly_connected_balanced``: as above plus a spanning directed
  cycle, so the result is strongly connected.
* ``random_digraph``: uniformly random arcs with repetition (seeded).
* ``random_tree`` / ``random_directed_tree``: random labeled tree from a
  Pruefer sequence, bidirected or with each edge oriented at random.
"""

from __future__ import annotations

import numpy as np

from .digraph import Digraph, from_edges
from .errors import PreconditionError

__all__ = ["FAMILIES", "generate"]

_MIN_N = {
    "n_path": 2,
    "n_path_loops": 2,
    "cycle": 3,
    "directed_cycle": 2,
    "complete": 1,
    "complete_loopless": 2,
    "petersen": 10,
    "ladder": 4,
    "random_balanced": 1,
    "random_strongly_connected_balanced": 1,
    "random_digraph": 1,
    "random_tree": 2,
    "random_directed_tree": 2,
}

FAMILIES = tuple(_MIN_N)


def _path_edges(n):
    return [(i, i + 1) for i in range(n - 1)]


def _petersen():
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


def _random_cycle_arcs(rng, n, length):
    verts = rng.choice(n, size=length, replace=False).tolist()
    return [(verts[k], verts[(k + 1) % length]) for k in range(length)]


def _random_balanced(rng, n, max_arcs, spanning):
    arcs = _random_cycle_arcs(rng, n, n) if spanning else []
    budget = max_arcs - len(arcs)
    while budget > 0:
        length = int(rng.integers(1, min(n, budget) + 1))
        arcs += _random_cycle_arcs(rng, n, length)
        budget -= length
        if rng.random() < 0.25:
            break
    return arcs


def _random_tree_edges(rng, n):
    if n == 2:
        return [(0, 1)]
    prufer = rng.integers(0, n, size=n - 2).tolist()
    degree = [1] * n
    for v in prufer:
        degree[v] += 1
    edges = []
    for v in prufer:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return edges


def generate(family: str, n: int | None = None, *, seed: int | None = None,
             max_arcs: int | None = None) -> Digraph:
    """Build a member of a named digraph family (see the module docstring).

    ``seed`` and ``max_arcs`` only matter for the random families; the arc
    budget defaults to ``2 * n``.
    """
    if family not in _MIN_N:
        raise PreconditionError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if family == "petersen":
        if n not in (None, 10):
            raise PreconditionError("the Petersen graph has exactly 10 vertices")
        return _petersen()
    if n is None:
        raise PreconditionError(f"family {family!r} needs a size")
    if n < _MIN_N[family]:
        raise PreconditionError(f"family {family!r} needs n >= {_MIN_N[family]}, got {n}")

    if family == "n_path":
        return from_edges(n, _path_edges(n))
    if family == "n_path_loops":
        loops = tuple((i, i) for i in range(n))
        return Digraph(n, loops + from_edges(n, _path_edges(n)).arcs)
    if family == "cycle":
        return from_edges(n, _path_edges(n) + [(n - 1, 0)])
    if family == "directed_cycle":
        return Digraph(n, tuple((i, (i + 1) % n) for i in range(n)))
    if family == "complete":
        return Digraph(n, tuple((i, j) for i in range(n) for j in range(n)))
    if family == "complete_loopless":
        return Digraph(n, tuple((i, j) for i in range(n) for j in range(n) if i != j))
    if family == "ladder":
        if n % 2:
            raise PreconditionError("ladder graph needs an even number of vertices")
        return from_edges(n, [(2 * k, 2 * k + 1) for k in range(n // 2)])

    rng = np.random.default_rng(seed)
    budget = 2 * n if max_arcs is None else max_arcs
    if family == "random_balanced":
        return Digraph(n, tuple(_random_balanced(rng, n, max(budget, 1), spanning=False)))
    if family == "random_strongly_connected_balanced":
        if budget < n:
            raise PreconditionError(f"a spanning cycle needs max_arcs >= n = {n}")
        return Digraph(n, tuple(_random_balanced(rng, n, budget, spanning=True)))
    if family == "random_digraph":
        m = int(rng.integers(1, max(budget, 1) + 1))
        ends = rng.integers(0, n, size=(m, 2))
        return Digraph(n, tuple(map(tuple, ends.tolist())))
    edges = _random_tree_edges(rng, n)
    if family == "random_tree":
        return from_edges(n, edges)
    # random_directed_tree
    flips = rng.random(len(edges)) < 0.5
    return Digraph(n, tuple((v, u) if f else (u, v) for (u, v), f in zip(edges, flips)))
