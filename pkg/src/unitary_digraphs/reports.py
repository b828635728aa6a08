"""Analysis reports and the exhaustive small-pattern census."""

from __future__ import annotations

import csv
import io
from collections import Counter

import numpy as np

from .digraph import (
    Digraph,
    as_pattern,
    digraph_of,
    is_degree_balanced,
    is_strongly_connected,
    is_well_formed_pattern,
    pattern_of,
    pattern_offenders,
)
from .errors import PreconditionError, SynthesisError, UnitaryDigraphError
from .fileio import pattern_rows
from .oracle import Feasible, Infeasible, OracleParams, decide
from .patterns import (
    is_quadrangular,
    is_specular,
    is_strongly_quadrangular,
    square_blocks,
)
from .synthesis import synthesize_specular

__all__ = [
    "CensusInvariantError",
    "analyze",
    "census",
    "census_csv",
    "pattern_from_code",
    "pattern_code",
    "CENSUS_FIELDS",
]


class CensusInvariantError(UnitaryDigraphError):
    """A census row contradicts a proven statement; indicates a bug."""


def pattern_code(P) -> int:
    """Row-major bits read as a binary number, first entry most significant."""
    bits = as_pattern(P).ravel().tolist()
    return int("".join(map(str, bits)), 2)


def pattern_from_code(code: int, n: int) -> np.ndarray:
    bits = [(code >> (n * n - 1 - k)) & 1 for k in range(n * n)]
    return as_pattern(np.array(bits).reshape(n, n))


def analyze(P, params: OracleParams | None = None, with_oracle: bool = False) -> dict:
    """All combinatorial flags of ``P`` plus, optionally, an oracle verdict.

    ``P`` may be a :class:`Digraph`; degree balance and connectivity are then
    measured on it directly, parallel arcs included.
    """
    if isinstance(P, Digraph):
        D, P = P, pattern_of(P)
    else:
        P = as_pattern(P)
        D = digraph_of(P)
    zero_rows, zero_cols = pattern_offenders(P)
    report = {
        "n": int(P.shape[0]),
        "pattern": pattern_rows(P),
        "well_formed": not zero_rows and not zero_cols,
        "zero_rows": zero_rows,
        "zero_columns": zero_cols,
        "degree_balanced": is_degree_balanced(D),
        "strongly_connected": is_strongly_connected(D),
    }
    if not report["well_formed"]:
        return report
    q, q_pair = is_quadrangular(P)
    report["quadrangular"] = q
    report["quadrangular_witness"] = (
        None if q else {"i": q_pair[0], "j": q_pair[1], "side": q_pair[2]}
    )
    sq, w = is_strongly_quadrangular(P, (params or OracleParams()).sq_cap)
    report["strongly_quadrangular"] = sq
    report["sq_witness"] = None if sq else w.to_dict()
    specular, info = is_specular(P)
    report["specular"] = specular
    report["line_digraph"] = specular
    if specular:
        report["specular_blocks"] = info.to_dict()["blocks"]
        report["square_blocks"] = square_blocks(info)
    else:
        report["specular_witness"] = {"i": info[0], "j": info[1], "side": info[2]}
        report["square_blocks"] = None
    if with_oracle:
        report["verdict"] = decide(P, params).to_dict()
    if sq and not q:
        raise CensusInvariantError("strongly quadrangular pattern reported non-quadrangular")
    return report


CENSUS_FIELDS = (
    "code",
    "pattern",
    "quadrangular",
    "strongly_quadrangular",
    "specular",
    "square_blocks",
    "line_digraph",
    "degree_balanced",
    "strongly_connected",
    "specular_certificate",
    "verdict",
)


def _census_row(code: int, n: int, params: OracleParams) -> dict:
    P = pattern_from_code(code, n)
    D = digraph_of(P)
    q, _ = is_quadrangular(P)
    sq, _ = is_strongly_quadrangular(P, params.sq_cap)
    specular, info = is_specular(P)
    sb = bool(specular and square_blocks(info))
    cert_ok = None
    if sb:
        try:
            cert_ok = synthesize_specular(P).valid
        except SynthesisError:
            cert_ok = False
    verdict = decide(P, params)
    return {
        "code": code,
        "pattern": "/".join(pattern_rows(P)),
        "quadrangular": q,
        "strongly_quadrangular": sq,
        "specular": specular,
        "square_blocks": sb,
        "line_digraph": specular,
        "degree_balanced": is_degree_balanced(D),
        "strongly_connected": is_strongly_connected(D),
        "specular_certificate": cert_ok,
        "verdict": verdict.kind,
        "_verdict": verdict,
    }


def _violations(row: dict) -> list[str]:
    out = []
    if row["verdict"] == Feasible.kind and not row["strongly_quadrangular"]:
        out.append("feasible pattern is not strongly quadrangular")
    if row["strongly_quadrangular"] and not row["quadrangular"]:
        out.append("strongly quadrangular pattern is not quadrangular")
    if row["square_blocks"] and row["verdict"] == Infeasible.kind:
        out.append("specular pattern with square blocks judged infeasible")
    if row["square_blocks"] and row["specular_certificate"] is not True:
        out.append("specular synthesis failed on square blocks")
    if row["specular"] != row["line_digraph"]:
        out.append("specular and line-digraph flags disagree")
    return out


def census(n: int, params: OracleParams | None = None, sample: int | None = None,
           sample_seed: int = 0, strict: bool = True):
    """Classify every well-formed ``n x n`` pattern (or a seeded sample for ``n = 4``).

    Returns ``(rows, summary)``; rows are sorted by numeric code. With
    ``strict`` a violated invariant raises :class:`CensusInvariantError`
    after the whole census has run.
    """
    params = params or OracleParams()
    total = 1 << (n * n)
    if n < 1:
        raise PreconditionError("census needs n >= 1")
    if sample is None:
        if n > 3:
            raise PreconditionError(f"exhaustive census limited to n <= 3; use sample for n={n}")
        codes = range(total)
    else:
        if n > 4:
            raise PreconditionError("sampled census limited to n <= 4")
        rng = np.random.default_rng(sample_seed)
        codes = sorted(rng.choice(total, size=min(sample, total), replace=False).tolist())
    rows = []
    for code in codes:
        if is_well_formed_pattern(pattern_from_code(code, n)):
            rows.append(_census_row(code, n, params))

    combos = Counter()
    problems = []
    for row in rows:
        key = ",".join(
            f"{k}={int(bool(row[k]))}"
            for k in ("quadrangular", "strongly_quadrangular", "specular", "square_blocks")
        ) + f",verdict={row['verdict']}"
        combos[key] += 1
        for msg in _violations(row):
            problems.append({"code": row["code"], "pattern": row["pattern"], "violation": msg})
    summary = {
        "n": n,
        "candidates": len(codes),
        "well_formed": len(rows),
        "verdicts": dict(sorted(Counter(r["verdict"] for r in rows).items())),
        "combinations": dict(sorted(combos.items())),
        "sq_but_unknown": [r["pattern"] for r in rows
                           if r["strongly_quadrangular"] and r["verdict"] == "unknown"],
        "violations": problems,
        "oracle_seed": params.seed,
    }
    if strict and problems:
        raise CensusInvariantError(f"{len(problems)} census invariant violations: {problems[:3]}")
    return rows, summary


def census_csv(rows) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CENSUS_FIELDS)
    for row in rows:
        vals = []
        for k in CENSUS_FIELDS:
            v = row[k]
            vals.append("" if v is None else int(v) if isinstance(v, bool) else v)
        writer.writerow(vals)
    return buf.getvalue()
