"""Command-line entry point: ``subcubic-packing <subcommand> ...``.

Graph arguments are resolved as a fixture name, then a literal graph6
string, then a file path (graph6 on the first non-blank line, or the
``n m`` edge-list format).  Exit codes: 0 completed (whatever the
verdict), 1 usage or input error, 2 an internal CONSTRUCTION_FAILED.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import __version__, kernels
from .classify import in_class, parse_tag, profile
from .errors import ConstructionFailed, MalformedGraph6, PackingError
from .graph import Graph, average_degree, emit_graph6, parse_edge_list, parse_graph6
from .solver import (decide_colorable, format_certificate, parse_certificate, parse_sequence,
                     verify_coloring)

EXIT_OK, EXIT_USAGE, EXIT_FINDING = 0, 1, 2

TAGS = [f"sat{i}" for i in range(4)] + [f"hsat{i}" for i in range(4)] + ["cubic", "any"]


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(arg: str) -> Graph:
    from .fixtures import FIXTURE_NAMES, fixture
    if arg in FIXTURE_NAMES:
        return fixture(arg).graph
    try:
        return parse_graph6(arg)
    except MalformedGraph6:
        pass
    path = Path(arg)
    if not path.is_file():
        raise PackingError(f"{arg!r} is not a fixture name, graph6 string or file", "BAD_GRAPH")
    text = path.read_text(encoding="ascii")
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if lines and len(lines[0].split()) == 2:
        return parse_edge_list(text)
    if not lines:
        raise PackingError(f"{arg}: empty file", "BAD_GRAPH")
    return parse_graph6(lines[0])


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, sort_keys=True))


def _rationals(text: str) -> list[Fraction]:
    return [Fraction(x) for x in text.split(",") if x.strip()]


# -- subcommands -------------------------------------------------------------------

def cmd_classify(args) -> int:
    g = load_graph(args.graph)
    facts = profile(g).as_dict()
    facts.update({"graph6": emit_graph6(g), "m": g.m, "connected": g.is_connected(),
                  "average_degree": str(average_degree(g)) if g.n else None,
                  "classes": [t for t in TAGS if in_class(g, parse_tag(t))]})
    _emit(facts)
    return EXIT_OK


def cmd_solve(args) -> int:
    g = load_graph(args.graph)
    seq = parse_sequence(args.seq)
    res = decide_colorable(g, seq, args.budget)
    verdict = "budget" if res.status == "budget_exhausted" else res.status
    out = {"verdict": verdict, "sequence": str(seq), "graph6": emit_graph6(g),
           "nodes": res.nodes, "backend": kernels.BACKEND}
    if res.feasible:
        out["certificate"] = format_certificate(res.coloring)
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    g = load_graph(args.graph)
    seq = parse_sequence(args.seq)
    text = Path(args.coloring).read_text(encoding="ascii").strip()
    if ":" in text:
        coloring = parse_certificate(text, g.n)
    else:
        coloring = [int(x) for x in text.replace(",", " ").split()]
    bad = verify_coloring(g, seq, coloring)
    _emit({"ok": not bad, "sequence": str(seq),
           "violations": [{"x": v.x, "y": v.y, "class": v.cls, "dist": v.dist} for v in bad]})
    return EXIT_OK


def cmd_construct(args) -> int:
    from .harness import PIPELINES, run_pipeline
    g = load_graph(args.graph)
    seq = PIPELINES[args.method][1]
    try:
        res = run_pipeline(args.method, g)
    except ConstructionFailed as exc:
        print(f"{exc}\n{exc.trace}", file=sys.stderr)
        return EXIT_FINDING
    _emit({"method": args.method, "sequence": str(parse_sequence(seq)),
           "graph6": emit_graph6(g), "certificate": format_certificate(res.coloring),
           "verified": not verify_coloring(g, parse_sequence(seq), res.coloring),
           "claim_check_failures": res.claim_failures,
           "repairs": getattr(res, "repairs", [])})
    return EXIT_OK


def cmd_fixtures(args) -> int:
    from .fixtures import all_fixtures
    if args.action == "export":
        for fx in all_fixtures():
            print(json.dumps({
                "name": fx.name, "graph6": emit_graph6(fx.graph), "names": list(fx.names),
                "facts": fx.facts, "provenance": fx.provenance,
                "sequence": str(fx.sequence) if fx.sequence else None,
                "coloring": format_certificate(fx.coloring) if fx.coloring else None,
                "negative": list(fx.negative)}, sort_keys=True))
        return EXIT_OK
    rows = []
    for fx in all_fixtures():
        facts = profile(fx.graph).as_dict()
        facts["m"] = fx.graph.m
        row = {"name": fx.name, "facts_match": facts == fx.facts}
        if fx.coloring:
            row["coloring_ok"] = not verify_coloring(fx.graph, fx.sequence, list(fx.coloring))
        row["negative"] = {s: decide_colorable(fx.graph, parse_sequence(s), args.budget).status
                           for s in fx.negative}
        row["ok"] = (row["facts_match"] and row.get("coloring_ok", True)
                     and all(v == "infeasible" for v in row["negative"].values()))
        rows.append(row)
    _emit({"ok": all(r["ok"] for r in rows), "fixtures": rows})
    return EXIT_OK


def _graphs_for(args):
    from .enumeration import enumerate_upto, ingest_graph6
    if args.corpus:
        return list(ingest_graph6(args.corpus))
    return list(enumerate_upto(args.nmax, args.nmin))


def cmd_sweep(args) -> int:
    from .harness import sweep
    s = sweep(_graphs_for(args), args.cls, args.seq, args.budget, ledger=args.ledger,
              pipeline=args.pipeline, workers=args.workers,
              config={"nmax": args.nmax, "nmin": args.nmin, "corpus": args.corpus})
    out = s.as_dict()
    out["pipeline_failures"] = [r.graph6 for r in s.pipeline_failures]
    _emit(out)
    return EXIT_FINDING if any("CONSTRUCTION_FAILED" in (r.pipeline or "") for r in s.records) else EXIT_OK


def cmd_claims(args) -> int:
    from .harness import check_paper_claims
    rep = check_paper_claims(args.nmax, args.budget, args.workers)
    print(rep.to_text())
    if args.json:
        Path(args.json).write_text(json.dumps(rep.as_dict(), indent=2, sort_keys=True) + "\n")
    failed = [r for r in rep.results if r.kind == "constructive" and not r.passed]
    return EXIT_FINDING if failed else EXIT_OK


def cmd_hunt(args) -> int:
    from .harness import search_counterexample
    res = search_counterexample(args.cls, args.seq, args.nmax, args.budget,
                                exclude=args.exclude, ledger=args.ledger, workers=args.workers)
    out = res.as_dict()
    out.update({"class": args.cls, "sequence": str(parse_sequence(args.seq)), "nmax": args.nmax})
    _emit(out)
    return EXIT_OK


def cmd_weights(args) -> int:
    from .harness import phi_weight_experiment
    rows = phi_weight_experiment(_rationals(args.alpha), _rationals(args.beta), args.seq, args.nmax)
    _emit({"rows": rows})
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    from .harness import DEFAULT_BUDGET, default_workers
    p = _Parser(prog="subcubic-packing", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph(sp):
        sp.add_argument("graph", help="fixture name, graph6 string, or file")

    def budget(sp):
        sp.add_argument("--budget", type=int, default=DEFAULT_BUDGET, help="search node limit")

    def workers(sp):
        sp.add_argument("--workers", type=int, default=default_workers())

    sp = sub.add_parser("classify", help="saturation facts as JSON")
    graph(sp)
    sp.set_defaults(fn=cmd_classify)

    sp = sub.add_parser("solve", help="decide S-packing colourability")
    sp.add_argument("--seq", required=True)
    graph(sp)
    budget(sp)
    sp.set_defaults(fn=cmd_solve)

    sp = sub.add_parser("verify", help="check a colouring")
    sp.add_argument("--seq", required=True)
    sp.add_argument("--coloring", required=True, help="file with 'v:class' pairs or a class list")
    graph(sp)
    sp.set_defaults(fn=cmd_verify)

    sp = sub.add_parser("construct", help="run a constructive pipeline")
    sp.add_argument("--method", required=True, choices=["1133", "1sat-12e4", "30sat-12e5"])
    graph(sp)
    sp.set_defaults(fn=cmd_construct)

    sp = sub.add_parser("fixtures", help="export or re-check the named graphs")
    sp.add_argument("action", nargs="?", default="check", choices=["export", "check"])
    budget(sp)
    sp.set_defaults(fn=cmd_fixtures)

    sp = sub.add_parser("sweep", help="decide every in-class graph")
    sp.add_argument("--class", dest="cls", required=True, choices=TAGS)
    sp.add_argument("--seq", required=True)
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--nmin", type=int, default=1)
    sp.add_argument("--corpus", help="graph6 file instead of enumeration")
    sp.add_argument("--ledger", required=True)
    sp.add_argument("--pipeline", choices=["1133", "1sat-12e4", "30sat-12e5"])
    budget(sp)
    workers(sp)
    sp.set_defaults(fn=cmd_sweep)

    sp = sub.add_parser("claims", help="re-verify the known positive and negative results")
    sp.add_argument("--nmax", type=int, default=8)
    sp.add_argument("--json", help="also write the report as JSON here")
    budget(sp)
    workers(sp)
    sp.set_defaults(fn=cmd_claims)

    sp = sub.add_parser("hunt", help="search for a counterexample")
    sp.add_argument("--class", dest="cls", required=True, choices=TAGS)
    sp.add_argument("--seq", required=True)
    sp.add_argument("--nmax", type=int, required=True)
    sp.add_argument("--exclude", nargs="*", default=[], help="fixture names or graph6 strings")
    sp.add_argument("--ledger")
    budget(sp)
    workers(sp)
    sp.set_defaults(fn=cmd_hunt)

    sp = sub.add_parser("weights", help="weight experiment for the partition method")
    sp.add_argument("--alpha", required=True, help="comma list, e.g. 0.7,3/4")
    sp.add_argument("--beta", required=True)
    sp.add_argument("--seq", default="1,1,3,4")
    sp.add_argument("--nmax", type=int, default=8)
    sp.set_defaults(fn=cmd_weights)
    return p


def main(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # usage errors, --help, --version
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.fn(args)
    except ConstructionFailed as exc:
        print(f"{exc}\n{exc.trace}", file=sys.stderr)
        return EXIT_FINDING
    except (PackingError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
