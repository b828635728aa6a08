"""Coined quantum walk on the line digraph of a degree-balanced digraph.

The walker's state is a complex amplitude per arc of ``D``. The coined
matrix ``U`` from :func:`synthesize_coined` has ``U[a, b] != 0`` exactly when
arc ``b`` leaves the vertex arc ``a`` enters, so amplitudes are propagated as
a row vector, ``psi <- psi @ U``: amplitude on arc ``a`` flows to the arcs
leaving ``head(a)``.
"""

from __future__ import annotations

import numpy as np

from .digraph import Digraph, unbalanced_vertices
from .errors import NotDegreeBalancedError, PreconditionError
from .synthesis import synthesize_coined

__all__ = ["init_state", "step", "vertex_distribution", "run"]


def init_state(D: Digraph, mode: str = "uniform", arc: int | None = None) -> np.ndarray:
    """Initial amplitudes: ``"uniform"`` over all arcs, or ``"delta"`` on ``arc``.

    ``mode`` may also be given as ``"arc:k"``.
    """
    bad = unbalanced_vertices(D)
    if bad:
        v = bad[0]
        raise NotDegreeBalancedError(v, len(D.in_arcs(v)), len(D.out_arcs(v)))
    if D.m == 0:
        raise PreconditionError("walk needs at least one arc")
    if mode.startswith("arc:"):
        mode, arc = "delta", int(mode[4:])
    if mode == "uniform":
        return np.full(D.m, 1 / np.sqrt(D.m), dtype=complex)
    if mode == "delta":
        if arc is None or not 0 <= arc < D.m:
            raise PreconditionError(f"arc id {arc} out of range 0..{D.m - 1}")
        psi = np.zeros(D.m, dtype=complex)
        psi[arc] = 1
        return psi
    raise PreconditionError(f"unknown start mode {mode!r}")


def step(U, psi) -> np.ndarray:
    U = np.asarray(U)
    psi = np.asarray(psi)
    if U.shape != (psi.size, psi.size):
        raise PreconditionError(f"state of size {psi.size} does not fit matrix {U.shape}")
    return psi @ U


def vertex_distribution(psi, D: Digraph, group: str = "head") -> np.ndarray:
    """Probability of each vertex: squared moduli summed over arcs grouped by head (or tail)."""
    psi = np.asarray(psi)
    if psi.size != D.m:
        raise PreconditionError(f"state of size {psi.size} does not match {D.m} arcs")
    if group == "head":
        idx = D.heads()
    elif group == "tail":
        idx = D.tails()
    else:
        raise PreconditionError(f"group must be 'head' or 'tail', got {group!r}")
    return np.bincount(idx, weights=np.abs(psi) ** 2, minlength=D.n)


def run(D: Digraph, steps: int, mode: str = "uniform", arc: int | None = None,
        coins=None, group: str = "head", return_states: bool = False):
    """Distributions after ``0..steps`` steps of the coined walk.

    With ``return_states=True`` the amplitude vectors are returned as a
    second ``(steps + 1, m)`` array.
    """
    if steps < 0:
        raise PreconditionError("steps must be non-negative")
    psi = init_state(D, mode, arc)
    cert, _ = synthesize_coined(D, coins)
    U = cert.matrix
    states = [psi]
    for _ in range(steps):
        psi = step(U, psi)
        states.append(psi)
    dists = [vertex_distribution(s, D, group) for s in states]
    if return_states:
        return dists, np.array(states)
    return dists
