"""Euler circuits (Hierholzer) and their lift to Hamiltonian cycles of line digraphs.

An Euler circuit of ``D`` is a cyclic order on its arcs in which each arc's
head is the next arc's tail. Read as a sequence of line-digraph vertices, the
same list is a Hamiltonian cycle of ``L(D)``.
"""

from __future__ import annotations

from .digraph import Digraph, strong_components, unbalanced_vertices
from .errors import NotDegreeBalancedError, NotStronglyConnectedError, PreconditionError

__all__ = [
    "euler_circuit",
    "euler_circuits_per_component",
    "hamiltonian_cycle_in_line_digraph",
    "verify_euler_circuit",
    "verify_hamiltonian_cycle",
]


def _check_balanced(D: Digraph) -> None:
    if D.m == 0:
        raise PreconditionError("digraph has no arcs")
    bad = unbalanced_vertices(D)
    if bad:
        v = bad[0]
        raise NotDegreeBalancedError(v, len(D.in_arcs(v)), len(D.out_arcs(v)))


def _hierholzer(D: Digraph, start: int, allowed: set[int] | None = None) -> list[int]:
    out = [[] for _ in range(D.n)]
    for k, (t, _) in enumerate(D.arcs):
        if allowed is None or k in allowed:
            out[t].append(k)
    ptr = [0] * D.n
    stack: list[tuple[int, int | None]] = [(start, None)]
    circuit: list[int] = []
    while stack:
        v, via = stack[-1]
        if ptr[v] < len(out[v]):
            k = out[v][ptr[v]]
            ptr[v] += 1
            stack.append((D.arcs[k][1], k))
        else:
            stack.pop()
            if via is not None:
                circuit.append(via)
    circuit.reverse()
    return circuit


def euler_circuit(D: Digraph) -> list[int]:
    """Arc ids of an Euler circuit of a strongly connected, degree-balanced ``D``.

    Starts at the smallest vertex with an outgoing arc and always leaves a
    vertex by its smallest unused arc id, so the result is reproducible.
    """
    _check_balanced(D)
    comps = strong_components(D)
    if len(comps) != 1:
        raise NotStronglyConnectedError(
            f"digraph has {len(comps)} strong components; use euler_circuits_per_component"
        )
    start = min(t for t, _ in D.arcs)
    return _hierholzer(D, start)


def euler_circuits_per_component(D: Digraph) -> list[list[int]]:
    """One Euler circuit per strong component that contains arcs.

    In a degree-balanced digraph every arc lies on a cycle, hence inside a
    single strong component.
    """
    _check_balanced(D)
    comp_of = {}
    for c, comp in enumerate(strong_components(D)):
        for v in comp:
            comp_of[v] = c
    by_comp: dict[int, set[int]] = {}
    for k, (t, h) in enumerate(D.arcs):
        assert comp_of[t] == comp_of[h]
        by_comp.setdefault(comp_of[t], set()).add(k)
    circuits = []
    for c in sorted(by_comp):
        arcs = by_comp[c]
        start = min(D.arcs[k][0] for k in arcs)
        circuits.append(_hierholzer(D, start, arcs))
    return circuits


def hamiltonian_cycle_in_line_digraph(D: Digraph) -> list[int]:
    """Hamiltonian cycle of ``line_digraph(D)``, given as line-digraph vertex ids."""
    return euler_circuit(D)


def verify_euler_circuit(D: Digraph, circuit) -> bool:
    circuit = list(circuit)
    if sorted(circuit) != list(range(D.m)):
        return False
    return all(D.arcs[a][1] == D.arcs[b][0]
               for a, b in zip(circuit, circuit[1:] + circuit[:1]))


def verify_hamiltonian_cycle(LD: Digraph, cycle) -> bool:
    """Every vertex exactly once, and consecutive vertices (cyclically) joined by an arc."""
    cycle = [int(v) for v in cycle]
    if sorted(cycle) != list(range(LD.n)):
        return False
    arcs = set(LD.arcs)
    return all((a, b) in arcs for a, b in zip(cycle, cycle[1:] + cycle[:1]))
