"""Text formats: edge lists, pattern files, CSV time series.

Edge list::

    # comment
    n m
    tail head      (m lines, 0-based; repeated lines are parallel arcs)

Pattern file: ``n`` lines of ``n`` characters, each ``0`` or ``1``.
"""

from __future__ import annotations

import io
import json
import re

import numpy as np

from .digraph import Digraph, as_pattern
from .errors import ParseError, PreconditionError

__all__ = [
    "parse_edge_list",
    "parse_pattern",
    "parse_input",
    "read_input",
    "format_edge_list",
    "format_pattern",
    "pattern_rows",
    "dumps",
    "distributions_csv",
]

_HEADER = re.compile(r"^\s*(\d+)\s+(\d+)\s*$")


def _content_lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def parse_edge_list(text: str) -> Digraph:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty edge list")
    lineno, header = lines[0]
    m_header = _HEADER.match(header)
    if not m_header:
        raise ParseError(f"expected header 'n m', got {header!r}", lineno)
    n, m = int(m_header[1]), int(m_header[2])
    body = lines[1:]
    if len(body) != m:
        where = body[m][0] if len(body) > m else (body[-1][0] if body else lineno)
        raise ParseError(f"header declares {m} arcs, found {len(body)}", where)
    arcs = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 2 or not all(p.isdigit() for p in parts):
            raise ParseError(f"expected 'tail head', got {line!r}", lineno)
        t, h = int(parts[0]), int(parts[1])
        if t >= n or h >= n:
            raise ParseError(f"arc ({t}, {h}) out of range for n={n}", lineno)
        arcs.append((t, h))
    try:
        return Digraph(n, tuple(arcs))
    except PreconditionError as exc:
        raise ParseError(str(exc), lines[0][0]) from exc


def parse_pattern(text: str) -> np.ndarray:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty pattern")
    n = len(lines)
    rows = []
    for lineno, line in lines:
        if len(line) != n or set(line) - {"0", "1"}:
            raise ParseError(f"expected {n} characters from {{0,1}}, got {line!r}", lineno)
        rows.append([int(c) for c in line])
    return as_pattern(rows)


def parse_input(text: str, fmt: str = "auto"):
    """Parse either format; returns ``("edges", Digraph)`` or ``("pattern", array)``.

    ``auto`` picks the edge-list format when the first content line looks like
    ``n m``.
    """
    if fmt == "auto":
        first = next(_content_lines(text), (0, ""))[1]
        fmt = "edges" if _HEADER.match(first) else "pattern"
    if fmt == "edges":
        return "edges", parse_edge_list(text)
    if fmt == "pattern":
        return "pattern", parse_pattern(text)
    raise ValueError(f"unknown format {fmt!r}")


def read_input(path, fmt: str = "auto"):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_input(text, fmt)


def format_edge_list(D: Digraph) -> str:
    lines = [f"{D.n} {D.m}"] + [f"{t} {h}" for t, h in D.arcs]
    return "\n".join(lines) + "\n"


def pattern_rows(P) -> list[str]:
    return ["".join(map(str, row)) for row in as_pattern(P).tolist()]


def format_pattern(P) -> str:
    return "\n".join(pattern_rows(P)) + "\n"


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, so equal inputs give byte-identical output."""
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def distributions_csv(dists) -> str:
    """``step,v0,v1,...`` header then one row per step, 12 significant digits."""
    dists = [np.asarray(d, dtype=float) for d in dists]
    n = dists[0].size if dists else 0
    buf = io.StringIO()
    buf.write(",".join(["step"] + [f"v{i}" for i in range(n)]) + "\n")
    for t, d in enumerate(dists):
        buf.write(",".join([str(t)] + [f"{p:.12g}" for p in d]) + "\n")
    return buf.getvalue()
