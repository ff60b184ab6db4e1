"""Command-line entry point: ``geomon compute | construct | verify | sweep | enumerate``.

Exit codes: 0 on success or pass, 1 when a verification fails, 2 for usage
and parse errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from collections import Counter
from pathlib import Path

from .constructions import Feasibility, Quadruple, feasibility, realize
from .errors import GeomonError, InfeasibleQuadruple, ParseError
from .formats import (
    construction_document,
    dumps,
    export_dot,
    export_edge_list,
    parse_edge_list,
    result_document,
    sweep_document,
    validate,
)
from .harness import (
    LEMMA_IDS,
    chain_holds,
    connected_graph_count,
    enumerate_connected_graphs,
    lemma_suite,
    sweep,
    verify_quadruple,
)
from .solvers import KINDS, ParamKind, Solver

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _params(text: str) -> list[ParamKind]:
    try:
        kinds = [ParamKind.parse(p) for p in text.split(",") if p.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown parameter in {text!r}; use g,eg,seg,meg")
    if not kinds:
        raise argparse.ArgumentTypeError("no parameters given")
    return kinds


def _parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geomon", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="exact parameters of a graph in edge-list format")
    c.add_argument("file", help="edge-list file, or - for stdin")
    c.add_argument("--params", type=_params, default=list(KINDS),
                   help="comma-separated subset of g,eg,seg,meg (default: all)")
    c.add_argument("--certificate", action="store_true", help="also print the optimal sets")
    c.add_argument("--json", action="store_true", help="print a JSON result document")

    k = sub.add_parser("construct", help="build a graph realizing a b c d")
    k.add_argument("q", nargs=4, type=int, metavar="N")
    k.add_argument("--format", choices=("edgelist", "dot", "json"), default="edgelist")
    k.add_argument("--out", type=Path, help="write here instead of stdout")
    k.add_argument("--no-verify", action="store_true", help="skip the solver check")

    v = sub.add_parser("verify", help="build a b c d and check it with the solvers")
    v.add_argument("q", nargs=4, type=int, metavar="N")
    v.add_argument("--json", action="store_true")

    s = sub.add_parser("sweep", help="verify every quadruple with d <= D")
    s.add_argument("--max-d", type=int, required=True, metavar="D")
    s.add_argument("--json", type=Path, metavar="PATH", help="write the sweep report here")

    e = sub.add_parser("enumerate", help="enumerate connected graphs on n vertices")
    e.add_argument("--vertices", type=int, required=True, metavar="N")
    e.add_argument("--lemmas", action="store_true", help="run the lemma suite on each graph")
    e.add_argument("--chain", action="store_true", help="check g <= eg <= seg <= meg on each graph")
    return p


def _emit(text: str, out: Path | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def _cmd_compute(args) -> int:
    try:
        text = sys.stdin.read() if args.file == "-" else Path(args.file).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {args.file}: {exc.strerror}")
    g = parse_edge_list(text)
    start = time.perf_counter()
    solver = Solver(g)
    if list(args.params) == list(KINDS):
        certs = solver.quadruple().certificates
    else:
        certs = {kind: solver.minimum(kind) for kind in args.params}
    seconds = time.perf_counter() - start
    if args.json:
        doc = result_document(g, certs, seconds)
        validate(doc, "result")
        sys.stdout.write(dumps(doc))
        return EXIT_OK
    print(" ".join(str(certs[kind].size) for kind in args.params))
    if args.certificate:
        for kind in args.params:
            labels = ", ".join(g.label(x) for x in certs[kind].vertices)
            print(f"{kind.value}: {{{labels}}}")
    return EXIT_OK


def _cmd_construct(args) -> int:
    q = Quadruple(*args.q)
    try:
        g, plan = realize(q)
    except InfeasibleQuadruple as exc:
        raise _UsageError(f"{tuple(q)} cannot be built: {exc.status.reason}")
    solved = None
    if not args.no_verify:
        solved = Solver(g).quadruple().values
        if solved != tuple(q):
            print(f"verification failed: built graph has {solved}", file=sys.stderr)
            return EXIT_FAIL
    if args.format == "edgelist":
        text = f"# {plan.family.value} {tuple(q)}\n" + export_edge_list(g)
    elif args.format == "dot":
        text = export_dot(g, plan)
    else:
        doc = construction_document(g, plan, solved)
        validate(doc, "construction")
        text = dumps(doc)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_verify(args) -> int:
    q = Quadruple(*args.q)
    status = feasibility(q)
    if status is Feasibility.INVALID_ORDER:
        raise _UsageError(f"{tuple(q)}: {status.reason}")
    rec = verify_quadruple(q)
    if args.json:
        doc = {
            "quadruple": list(q),
            "feasibility": rec.status.value,
            "passed": rec.passed,
            "size": rec.size,
            "family": rec.family,
            "solved": list(rec.solved) if rec.solved else None,
            "cause": rec.cause,
        }
        sys.stdout.write(dumps(doc))
    elif rec.rejected:
        print(status.reason)
    elif rec.passed:
        print(f"pass {tuple(q)} n={rec.size} {rec.family}")
    else:
        print(f"FAIL {tuple(q)}: {rec.cause}")
    return EXIT_OK if rec.passed else EXIT_FAIL


def _cmd_sweep(args) -> int:
    if args.max_d < 2:
        raise _UsageError("--max-d must be at least 2")

    def show(rec):
        tag = "reject" if rec.rejected and rec.passed else "pass" if rec.passed else "FAIL"
        detail = f"n={rec.size} {rec.family}" if tag == "pass" else rec.cause
        print(f"{tag:6} {tuple(rec.quadruple)} {detail} ({rec.seconds:.2f}s)", flush=True)

    report = sweep(args.max_d, progress=show)
    s = report.summary
    print(f"total {s['total']}: {s['passed']} passed, {s['rejected']} rejected, "
          f"{s['failed']} failed")
    if args.json is not None:
        doc = sweep_document(report)
        validate(doc, "sweep")
        args.json.write_text(dumps(doc))
    return EXIT_OK if report.ok else EXIT_FAIL


def _cmd_enumerate(args) -> int:
    n = args.vertices
    count, failures, chain_bad = 0, Counter(), 0
    for g in enumerate_connected_graphs(n):
        count += 1
        if args.lemmas:
            for lid, ok in lemma_suite(g):
                failures[lid] += not ok
        if args.chain:
            chain_bad += not chain_holds(g)[0]
    expected = connected_graph_count(n)
    ok = count == expected
    print(f"n={n}: {count} connected labelled graphs (expected {expected})")
    if args.lemmas:
        for lid in LEMMA_IDS:
            print(f"{lid}: {'pass' if not failures[lid] else f'FAIL on {failures[lid]} graphs'}")
        ok = ok and not any(failures.values())
    if args.chain:
        print(f"chain: {'pass' if not chain_bad else f'FAIL on {chain_bad} graphs'}")
        ok = ok and not chain_bad
    return EXIT_OK if ok else EXIT_FAIL


_COMMANDS = {
    "compute": _cmd_compute,
    "construct": _cmd_construct,
    "verify": _cmd_verify,
    "sweep": _cmd_sweep,
    "enumerate": _cmd_enumerate,
}


def cli_main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return _COMMANDS[args.command](args)
    except (_UsageError, ParseError) as exc:
        print(f"geomon: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GeomonError as exc:
        print(f"geomon: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(cli_main())


if __name__ == "__main__":
    main()
