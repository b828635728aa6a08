"""Explicit unitary matrices with a prescribed zero pattern.

Two constructions are provided. A specular pattern whose independent blocks
are all square gets a Fourier matrix on every block. The line digraph of a
degree-balanced digraph gets a "coined" matrix: for each vertex ``v`` with
``d`` incoming and ``d`` outgoing arcs, a zero-free ``d x d`` coin sits on
the block (in-arcs of ``v``) x (out-arcs of ``v``).
"""

from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass

import numpy as np

from .digraph import (
    ArcLabel,
    Digraph,
    as_pattern,
    as_permutation,
    line_digraph,
    pattern_of,
    unbalanced_vertices,
)
from .errors import NotDegreeBalancedError, PreconditionError, SynthesisError
from .patterns import is_specular

__all__ = [
    "UNITARY_TOL",
    "ZERO_TOL",
    "UnitaryCertificate",
    "fourier_matrix",
    "verify",
    "synthesize_specular",
    "synthesize_coined",
    "transport",
    "check_coin",
]

UNITARY_TOL = 1e-10
ZERO_TOL = 1e-12


@dataclass(frozen=True, eq=False)
class UnitaryCertificate:
    """A matrix together with measurements of how well it fits ``target``.

    ``support_exact`` holds when every 1-position of ``target`` has modulus
    above ``zero_tol`` and every 0-position has modulus at most ``zero_tol``.
    """

    matrix: np.ndarray
    target: np.ndarray
    unitarity_residual: float
    support_exact: bool
    min_on_support: float
    unitary_tol: float = UNITARY_TOL
    zero_tol: float = ZERO_TOL

    @property
    def n(self) -> int:
        return self.matrix.shape[0]

    @property
    def valid(self) -> bool:
        return self.support_exact and self.unitarity_residual <= self.unitary_tol

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "entries": [[float(z.real), float(z.imag)] for z in self.matrix.ravel()],
            "target_pattern": ["".join(map(str, row)) for row in self.target.tolist()],
            "unitarity_residual": float(self.unitarity_residual),
            "support_exact": bool(self.support_exact),
            "min_on_support": float(self.min_on_support),
        }

    @classmethod
    def from_dict(cls, d: dict, unitary_tol: float = UNITARY_TOL,
                  zero_tol: float = ZERO_TOL) -> UnitaryCertificate:
        """Rebuild from JSON and re-measure; stored measurements are not trusted."""
        n = int(d["n"])
        entries = np.array(d["entries"], dtype=float)
        M = (entries[:, 0] + 1j * entries[:, 1]).reshape(n, n)
        target = [[int(c) for c in row] for row in d["target_pattern"]]
        return verify(M, target, unitary_tol, zero_tol)


def fourier_matrix(n: int) -> np.ndarray:
    """``F[j, k] = exp(2 pi i j k / n) / sqrt(n)``."""
    if n < 1:
        raise PreconditionError(f"Fourier matrix needs n >= 1, got {n}")
    jk = np.outer(np.arange(n), np.arange(n)) % n
    return np.exp(2j * np.pi * jk / n) / np.sqrt(n)


def verify(M, target, unitary_tol: float = UNITARY_TOL,
           zero_tol: float = ZERO_TOL) -> UnitaryCertificate:
    """Measure unitarity and support agreement of ``M`` against ``target``."""
    M = np.array(M, dtype=complex)
    T = as_pattern(target)
    if M.shape != T.shape:
        raise PreconditionError(f"matrix shape {M.shape} does not match pattern shape {T.shape}")
    n = M.shape[0]
    residual = float(np.max(np.abs(M.conj().T @ M - np.eye(n))))
    mod = np.abs(M)
    on = T.astype(bool)
    support_exact = bool(np.all(mod[on] > zero_tol) and np.all(mod[~on] <= zero_tol))
    min_on = float(mod[on].min()) if on.any() else 0.0
    M.flags.writeable = False
    return UnitaryCertificate(M, T, residual, support_exact, min_on, unitary_tol, zero_tol)


def synthesize_specular(P, unitary_tol: float = UNITARY_TOL,
                        zero_tol: float = ZERO_TOL) -> UnitaryCertificate:
    """Fourier block on each independent block of a specular pattern.

    Rows and columns inside a block are taken in ascending order, so block
    ``(rows, cols)`` of size ``d`` satisfies ``U[rows[a], cols[b]] = F_d[a, b]``.
    """
    P = as_pattern(P)
    ok, info = is_specular(P)
    if not ok:
        i, j, side = info
        raise SynthesisError(f"pattern is not specular: {side} {i} and {j} overlap but differ")
    U = np.zeros(P.shape, dtype=complex)
    for rows, cols in info:
        if len(rows) != len(cols):
            raise SynthesisError(
                f"block rows {list(rows)} x columns {list(cols)} is not square"
            )
        U[np.ix_(rows, cols)] = fourier_matrix(len(rows))
    return verify(U, P, unitary_tol, zero_tol)


def check_coin(C, d: int, unitary_tol: float = UNITARY_TOL, zero_tol: float = ZERO_TOL) -> np.ndarray:
    """Validate a ``d x d`` coin: unitary within tolerance and with no zero entry."""
    C = np.asarray(C, dtype=complex)
    if C.shape != (d, d):
        raise PreconditionError(f"coin for degree {d} has shape {C.shape}")
    if np.max(np.abs(C.conj().T @ C - np.eye(d))) > unitary_tol:
        raise PreconditionError(f"coin for degree {d} is not unitary")
    if np.min(np.abs(C)) <= zero_tol:
        raise PreconditionError(f"coin for degree {d} has a zero entry")
    return C


CoinSource = Mapping[int, np.ndarray] | Callable[[int], np.ndarray] | None


def _coin(coins: CoinSource, d: int, unitary_tol, zero_tol) -> np.ndarray:
    if coins is None:
        return fourier_matrix(d)
    if callable(coins):
        C = coins(d)
    elif d in coins:
        C = coins[d]
    else:
        return fourier_matrix(d)
    return check_coin(C, d, unitary_tol, zero_tol)


def synthesize_coined(D: Digraph, coins: CoinSource = None, unitary_tol: float = UNITARY_TOL,
                      zero_tol: float = ZERO_TOL) -> tuple[UnitaryCertificate, list[ArcLabel]]:
    """Unitary with the pattern of the line digraph of a degree-balanced ``D``.

    ``coins`` may map a degree to a matrix or be a callable ``d -> matrix``;
    missing degrees fall back to the Fourier matrix.
    """
    bad = unbalanced_vertices(D)
    if bad:
        v = bad[0]
        raise NotDegreeBalancedError(v, len(D.in_arcs(v)), len(D.out_arcs(v)))
    L, labels = line_digraph(D)
    U = np.zeros((D.m, D.m), dtype=complex)
    for v in range(D.n):
        ins, outs = D.in_arcs(v), D.out_arcs(v)
        if ins:
            U[np.ix_(ins, outs)] = _coin(coins, len(ins), unitary_tol, zero_tol)
    return verify(U, pattern_of(L), unitary_tol, zero_tol), labels


def transport(U, P, Q) -> np.ndarray:
    """Move entry ``(i, j)`` to ``(P[i], Q[j])``; unitarity is preserved exactly."""
    U = np.asarray(U)
    if U.ndim != 2 or U.shape[0] != U.shape[1]:
        raise PreconditionError(f"matrix must be square, got shape {U.shape}")
    n = U.shape[0]
    P = as_permutation(P, n)
    Q = as_permutation(Q, n)
    out = np.empty_like(U)
    out[np.ix_(P, Q)] = U
    return out
