"""Command-line interface: ``unitary-digraphs <command> [options] FILE``.

Exit codes: 0 ok, 2 parse error, 3 precondition violated, 4 no synthesis
method applies, 5 census invariant breached.
"""

from __future__ import annotations

import argparse
import sys

from . import __version__
from .digraph import Digraph, digraph_of, line_digraph, pattern_of
from .errors import ParseError, PreconditionError, SynthesisError
from .euler import euler_circuit, euler_circuits_per_component
from .fileio import distributions_csv, dumps, format_edge_list, read_input
from .oracle import OracleParams, decide
from .patterns import is_strongly_quadrangular
from .reports import CensusInvariantError, analyze, census, census_csv
from .synthesis import UNITARY_TOL, ZERO_TOL, synthesize_coined, synthesize_specular
from .walk import run

EXIT_OK, EXIT_PARSE, EXIT_PRECONDITION, EXIT_NO_METHOD, EXIT_INVARIANT = 0, 2, 3, 4, 5


def _oracle_params(args) -> OracleParams:
    kw = {"seed": args.seed}
    for name in ("restarts", "max_iters", "support_floor"):
        if getattr(args, name, None) is not None:
            kw[name] = getattr(args, name)
    if args.unitary_tol is not None:
        kw["unitary_tol"] = args.unitary_tol
    if args.zero_tol is not None:
        kw["zero_tol"] = args.zero_tol
    return OracleParams(**kw)


def _tols(args):
    return (UNITARY_TOL if args.unitary_tol is None else args.unitary_tol,
            ZERO_TOL if args.zero_tol is None else args.zero_tol)


def _load(args):
    kind, obj = read_input(args.input, args.format)
    D = obj if kind == "edges" else digraph_of(obj)
    P = pattern_of(obj) if kind == "edges" else obj
    return kind, D, P


def _emit(text: str) -> None:
    sys.stdout.write(text)


def cmd_analyze(args) -> int:
    kind, D, P = _load(args)
    report = analyze(D if kind == "edges" else P, _oracle_params(args), with_oracle=args.oracle)
    _emit(dumps(report))
    return EXIT_OK if report["well_formed"] else EXIT_PRECONDITION


def cmd_synthesize(args) -> int:
    kind, D, P = _load(args)
    unitary_tol, zero_tol = _tols(args)
    method = args.method
    if method == "auto":
        method = "coined" if args.line else "specular"
    try:
        if method == "coined":
            cert, labels = synthesize_coined(D, unitary_tol=unitary_tol, zero_tol=zero_tol)
            out = {"method": "coined", "certificate": cert.to_dict(),
                   "arc_labels": [[lab.tail, lab.head] for lab in labels]}
        else:
            cert = synthesize_specular(P, unitary_tol, zero_tol)
            out = {"method": "specular", "certificate": cert.to_dict()}
    except (SynthesisError, PreconditionError) as exc:
        out = {"error": str(exc), "method": method}
        target = pattern_of(line_digraph(D)[0]) if method == "coined" and D.m else P
        try:
            sq, w = is_strongly_quadrangular(target, require_well_formed=False)
            out["sq_witness"] = None if sq else w.to_dict()
        except PreconditionError:
            pass
        _emit(dumps(out))
        return EXIT_NO_METHOD
    _emit(dumps(out))
    return EXIT_OK


def cmd_oracle(args) -> int:
    _, _, P = _load(args)
    _emit(dumps(decide(P, _oracle_params(args)).to_dict()))
    return EXIT_OK


def cmd_linedigraph(args) -> int:
    _, D, _ = _load(args)
    L, labels = line_digraph(D)
    if args.json:
        _emit(dumps({"n": L.n, "arcs": [list(a) for a in L.arcs],
                     "labels": [[lab.tail, lab.head] for lab in labels]}))
    else:
        _emit(format_edge_list(L))
    return EXIT_OK


def cmd_euler(args) -> int:
    _, D, _ = _load(args)
    if args.per_component:
        _emit(dumps(euler_circuits_per_component(D)))
    else:
        _emit(dumps(euler_circuit(D)))
    return EXIT_OK


def cmd_walk(args) -> int:
    _, D, _ = _load(args)
    dists = run(D, args.steps, mode=args.start, group=args.group)
    if args.json:
        _emit(dumps([[float(p) for p in d] for d in dists]))
    else:
        _emit(distributions_csv(dists))
    return EXIT_OK


def cmd_census(args) -> int:
    rows, summary = census(args.n, _oracle_params(args), sample=args.sample,
                           sample_seed=args.seed, strict=False)
    if args.json:
        public = [{k: v for k, v in r.items() if not k.startswith("_")} for r in rows]
        _emit(dumps({"rows": public, "summary": summary}))
    else:
        _emit(census_csv(rows))
        summary_text = dumps(summary)
        if args.summary:
            with open(args.summary, "w", encoding="utf-8") as fh:
                fh.write(summary_text)
        else:
            sys.stderr.write(summary_text)
    return EXIT_INVARIANT if summary["violations"] else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--unitary-tol", type=float, default=None)
    common.add_argument("--zero-tol", type=float, default=None)
    common.add_argument("--json", action="store_true", help="emit JSON instead of text/CSV")

    with_input = argparse.ArgumentParser(add_help=False)
    with_input.add_argument("input", help="edge-list or pattern file")
    with_input.add_argument("--format", choices=("auto", "edges", "pattern"), default="auto")

    oracle_opts = argparse.ArgumentParser(add_help=False)
    oracle_opts.add_argument("--restarts", type=int)
    oracle_opts.add_argument("--max-iters", type=int)
    oracle_opts.add_argument("--support-floor", type=float)

    parser = argparse.ArgumentParser(prog="unitary-digraphs", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common, with_input, oracle_opts])
    p.add_argument("--oracle", action="store_true", help="add a numerical verdict")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("synthesize", parents=[common, with_input])
    p.add_argument("--method", choices=("auto", "specular", "coined"), default="auto")
    p.add_argument("--line", action="store_true",
                   help="synthesize for the line digraph of the input")
    p.set_defaults(func=cmd_synthesize)

    p = sub.add_parser("oracle", parents=[common, with_input, oracle_opts])
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("linedigraph", parents=[common, with_input])
    p.set_defaults(func=cmd_linedigraph)

    p = sub.add_parser("euler", parents=[common, with_input])
    p.add_argument("--per-component", action="store_true")
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("walk", parents=[common, with_input])
    p.add_argument("--steps", type=int, default=10)
    p.add_argument("--start", default="uniform", help="'uniform' or 'arc:K'")
    p.add_argument("--group", choices=("head", "tail"), default="head")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("census", parents=[common, oracle_opts])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--sample", type=int, default=None, help="seeded sample size (n = 4)")
    p.add_argument("--summary", default=None, help="write summary JSON here instead of stderr")
    p.set_defaults(func=cmd_census)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except CensusInvariantError as exc:
        print(f"invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION


if __name__ == "__main__":
    sys.exit(main())
