"""Numerical decision procedure for "is this pattern the support of a unitary?".

Negative answers are only ever given with a violating set from the
strong-quadrangularity search. Positive answers come from alternating
projections between the unitary group (polar factor) and the set of
matrices supported on the pattern, and always carry a certificate that can
be re-verified. Everything else is reported as :class:`Unknown`.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass, field

import numpy as np

from .digraph import as_pattern, pattern_offenders
from .errors import NotWellFormedError, PreconditionError, RankDeficientError
from .patterns import DEFAULT_SQ_CAP, SqWitness, is_strongly_quadrangular
from .synthesis import UnitaryCertificate, verify

__all__ = [
    "OracleParams",
    "Infeasible",
    "Feasible",
    "Unknown",
    "nearest_unitary",
    "pattern_projection",
    "random_unitary",
    "decide",
    "verdict_from_dict",
]


@dataclass(frozen=True)
class OracleParams:
    restarts: int = 32
    max_iters: int = 2000
    unitary_tol: float = 1e-10
    support_floor: float = 1e-3
    zero_tol: float = 1e-8
    seed: int = 0
    sq_cap: int = DEFAULT_SQ_CAP

    def __post_init__(self):
        if min(self.unitary_tol, self.support_floor, self.zero_tol) <= 0:
            raise PreconditionError("oracle tolerances must be positive")
        if self.support_floor <= self.zero_tol:
            raise PreconditionError("support_floor must exceed zero_tol")
        if self.restarts < 1 or self.max_iters < 1:
            raise PreconditionError("restarts and max_iters must be positive")


@dataclass(frozen=True)
class Infeasible:
    witness: SqWitness
    kind: str = field(default="infeasible", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "witness": self.witness.to_dict()}


@dataclass(frozen=True)
class Feasible:
    certificate: UnitaryCertificate
    restart: int
    iterations: int
    kind: str = field(default="feasible", init=False)

    def to_dict(self) -> dict:
        return {"kind": self.kind, "restart": self.restart, "iterations": self.iterations,
                "certificate": self.certificate.to_dict()}


@dataclass(frozen=True)
class Unknown:
    best_residual: float
    best_min_on_support: float
    kind: str = field(default="unknown", init=False)

    def to_dict(self) -> dict:
        return asdict(self)


Verdict = Infeasible | Feasible | Unknown


def verdict_from_dict(d: dict, params: OracleParams | None = None) -> Verdict:
    params = params or OracleParams()
    kind = d["kind"]
    if kind == "infeasible":
        return Infeasible(SqWitness.from_dict(d["witness"]))
    if kind == "feasible":
        cert = UnitaryCertificate.from_dict(d["certificate"], params.unitary_tol, params.zero_tol)
        return Feasible(cert, int(d["restart"]), int(d["iterations"]))
    if kind == "unknown":
        return Unknown(float(d["best_residual"]), float(d["best_min_on_support"]))
    raise ValueError(f"unknown verdict kind {kind!r}")


def nearest_unitary(M) -> np.ndarray:
    """Unitary polar factor of ``M``, the closest unitary in Frobenius norm.

    Raises :class:`RankDeficientError` when the smallest singular value is
    below ``1e-14`` (the factor is then not unique).
    """
    M = np.asarray(M, dtype=complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise PreconditionError(f"matrix must be square, got shape {M.shape}")
    W, s, Vh = np.linalg.svd(M)
    if s[-1] <= 1e-14:
        raise RankDeficientError(f"smallest singular value {s[-1]:.3e} is too small")
    return W @ Vh


def pattern_projection(M, P, floor: float, rng: np.random.Generator | None = None) -> np.ndarray:
    """Zero the entries outside ``P`` and lift small entries on ``P`` to ``floor``.

    Phases are kept; exact zeros on the pattern get a random phase drawn from
    ``rng`` (a fixed-seed generator when omitted).
    """
    M = np.array(M, dtype=complex)
    P = as_pattern(P)
    if M.shape != P.shape:
        raise PreconditionError(f"matrix shape {M.shape} does not match pattern shape {P.shape}")
    on = P.astype(bool)
    M[~on] = 0
    mod = np.abs(M)
    low = on & (mod < floor)
    if low.any():
        zero = low & (mod == 0)
        if zero.any():
            rng = rng if rng is not None else np.random.default_rng(0)
            M[zero] = np.exp(2j * np.pi * rng.random(int(zero.sum())))
            mod = np.abs(M)
        M[low] *= floor / mod[low]
    return M


def random_unitary(n: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Ginibre matrix."""
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def _run_restart(P: np.ndarray, params: OracleParams, r: int):
    """One alternating-projection run; restart ``r`` uses the stream ``(seed, r)``."""
    rng = np.random.default_rng([params.seed, r])
    U = random_unitary(P.shape[0], rng)
    best = None
    for it in range(1, params.max_iters + 1):
        M = pattern_projection(U, P, params.support_floor, rng)
        cert = verify(M, P, params.unitary_tol, params.zero_tol)
        if cert.valid:
            return cert, it, cert
        if best is None or cert.unitarity_residual < best.unitarity_residual:
            best = cert
        try:
            U = nearest_unitary(M)
        except RankDeficientError:
            # perturb within the pattern and keep going
            M = M + params.support_floor * P * np.exp(2j * np.pi * rng.random(P.shape))
            U = nearest_unitary(M)
    return None, params.max_iters, best


def decide(P, params: OracleParams | None = None):
    """Classify ``P`` as :class:`Infeasible`, :class:`Feasible` or :class:`Unknown`.

    The strong-quadrangularity search runs first and is sound for any
    pattern, so a violating set is reported even when ``P`` has a zero row or
    column. Without one, a pattern with a zero row or column is rejected
    with :class:`NotWellFormedError`. Deterministic given ``params.seed``.
    """
    params = params or OracleParams()
    P = as_pattern(P)
    ok, witness = is_strongly_quadrangular(P, params.sq_cap, require_well_formed=False)
    if not ok:
        return Infeasible(witness)
    rows, cols = pattern_offenders(P)
    if rows or cols:
        raise NotWellFormedError(
            f"pattern has zero rows {rows} and zero columns {cols}", rows + cols
        )
    best = None
    for r in range(params.restarts):
        cert, iters, run_best = _run_restart(P, params, r)
        if cert is not None:
            return Feasible(cert, r, iters)
        if best is None or run_best.unitarity_residual < best.unitarity_residual:
            best = run_best
    return Unknown(best.unitarity_residual, best.min_on_support)
