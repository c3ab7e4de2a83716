"""Command line: ``predist analyze | census | selftest``.

Exit codes: 0 success (whatever the verdicts), 1 other analysis error,
2 unreadable input, 3 parse error, 4 disconnected graph, 5 irregular graph
with ``--kind adjacency``.
"""

import argparse
import json
import sys

from . import __version__
from .characterize import CensusIOError, CensusSummary, analyze, census_scan
from .checks import run_invariants
from .config import (
    AnalysisError,
    DisconnectedGraphError,
    IrregularGraphError,
    ParseError,
    Tolerances,
)
from .corpus import DRG_NAMES, builtin_corpus
from .graph import degree_stats, parse_edge_list, parse_graph6
from .report import build_report, dumps, dumps_record, render_text
from .spectral import ADJACENCY, LAPLACIAN

EXIT_OK, EXIT_ERROR, EXIT_UNREADABLE, EXIT_PARSE, EXIT_DISCONNECTED, EXIT_IRREGULAR = 0, 1, 2, 3, 4, 5

KIND_CHOICES = {"adjacency": (ADJACENCY,), "laplacian": (LAPLACIAN,), "both": (ADJACENCY, LAPLACIAN)}


def _tolerances(args):
    return Tolerances(group=args.tol_group, eq=args.tol_eq, matrix=args.tol_matrix)


def _add_tolerance_args(p):
    defaults = Tolerances()
    p.add_argument("--tol-group", type=float, default=defaults.group,
                   help="eigenvalue grouping tolerance, relative to max(1, spectral radius)")
    p.add_argument("--tol-eq", type=float, default=defaults.eq,
                   help="relative tolerance for HM = target")
    p.add_argument("--tol-matrix", type=float, default=defaults.matrix,
                   help="entrywise tolerance for matrix identities")


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, encoding="ascii") as fh:
        return fh.read()


def _load_graph(text, fmt):
    if fmt == "edgelist":
        return parse_edge_list(text)
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("graph6: empty input")
    return parse_graph6(lines[0])


def cmd_analyze(args, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    try:
        tol = _tolerances(args)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    try:
        text = _read_text(args.input)
    except (OSError, UnicodeDecodeError) as exc:
        print(f"error: cannot read {args.input}: {exc}", file=err)
        return EXIT_UNREADABLE
    try:
        g = _load_graph(text, args.format)
    except ParseError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_PARSE
    kinds = KIND_CHOICES[args.kind]
    if args.kind == "adjacency" and not degree_stats(g).is_regular:
        print("error: graph is not regular; the adjacency path needs a regular graph. "
              "Try --kind laplacian.", file=err)
        return EXIT_IRREGULAR
    try:
        result = analyze(g, kinds=kinds, tol=tol)
    except DisconnectedGraphError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_DISCONNECTED
    except IrregularGraphError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_IRREGULAR
    except AnalysisError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    report = build_report(result, tol)
    out.write(dumps(report) if args.json else render_text(report))
    return EXIT_OK


def cmd_census(args, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    try:
        tol = _tolerances(args)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    summary = CensusSummary()
    try:
        fh = sys.stdin if args.input == "-" else open(args.input, encoding="ascii")
    except OSError as exc:
        print(f"error: cannot read {args.input}: {exc}", file=err)
        return EXIT_UNREADABLE
    try:
        for record in census_scan(fh, kind=args.kind, flt=args.filter, workers=args.workers,
                                  tol=tol, summary=summary):
            out.write(dumps_record(record) + "\n")
    except CensusIOError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_UNREADABLE
    finally:
        if fh is not sys.stdin:
            fh.close()
    print(json.dumps({"summary": summary.as_dict()}), file=err)
    return EXIT_OK


def cmd_selftest(args, out=None, err=None):
    out, err = out or sys.stdout, err or sys.stderr
    try:
        tol = _tolerances(args)
    except ValueError as exc:
        print(f"error: {exc}", file=err)
        return EXIT_ERROR
    analyses = {}
    verdict_failures = []
    corpus = builtin_corpus()
    for name, g in corpus.items():
        try:
            a = analyze(g, tol=tol)
        except AnalysisError as exc:
            verdict_failures.append(f"{name}: analysis failed: {exc}")
            continue
        analyses[name] = a
        for kind, gate in a.gates.items():
            if gate.drg_verdict != (name in DRG_NAMES):
                verdict_failures.append(f"{name}: {kind} drg verdict {gate.drg_verdict}")
    tally = run_invariants(analyses, tol)
    width = max(map(len, tally.total))
    for inv in tally.total:
        status = "ok  " if tally.passed[inv] == tally.total[inv] else "FAIL"
        out.write(f"{status} {inv:<{width}}  {tally.passed[inv]}/{tally.total[inv]}\n")
    drg_ok = not verdict_failures
    failed_names = {f.split(":")[0] for f in verdict_failures}
    out.write(f"{'ok  ' if drg_ok else 'FAIL'} {'drg verdicts':<{width}}  "
              f"{len(corpus) - len(failed_names)}/{len(corpus)}\n")
    for inv, name, detail in tally.failures:
        out.write(f"  {inv} / {name}: {detail}\n")
    for line in verdict_failures:
        out.write(f"  drg verdicts / {line}\n")
    if tally.ok and drg_ok:
        out.write("selftest passed\n")
        return EXIT_OK
    out.write("selftest FAILED\n")
    return EXIT_ERROR


def build_parser():
    parser = argparse.ArgumentParser(
        prog="predist",
        description="Predistance polynomials and harmonic-mean distance-regularity gates.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="analyze one graph")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--kind", choices=tuple(KIND_CHOICES), default="both")
    _add_tolerance_args(p)
    p.add_argument("--json", action="store_true", help="emit a JSON report")
    p.add_argument("input", help="file path, or - for standard input")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("census", help="scan graph6 lines for graphs attaining equality")
    p.add_argument("--kind", choices=tuple(KIND_CHOICES), default="adjacency")
    p.add_argument("--filter", choices=("d-gt-D", "all"), default="all")
    p.add_argument("--workers", type=int, default=1)
    _add_tolerance_args(p)
    p.add_argument("input", help="graph6 file, one graph per line, or -")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("selftest", help="check all invariants on the built-in corpus")
    _add_tolerance_args(p)
    p.set_defaults(func=cmd_selftest)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
