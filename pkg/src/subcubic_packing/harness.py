"""Sweeps, claim re-verification and counterexample hunts over small graphs.

Every decided graph can be written to a JSON-lines ledger: one header line
with the engine version and configuration, then one self-contained record
per graph.  Ledgers are only ever appended to.  Records appear in input
order (the worker pool uses an ordered map), so two runs over the same
inputs produce the same ledger apart from wall times and the header
timestamp.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import asdict, dataclass, field
from multiprocessing import Pool
from pathlib import Path
from typing import Callable, Iterable

from . import __version__, kernels
from .canonical import canonical_code
from .classify import in_class, parse_tag, profile
from .errors import ConstructionFailed, PackingError
from .graph import Graph, emit_graph6, parse_graph6, subdivide
from .solver import decide_colorable, parse_sequence

DEFAULT_BUDGET = 10**8


@dataclass
class SweepRecord:
    graph6: str
    n: int
    facts: dict
    sequence: str
    verdict: str  # feasible | infeasible | budget | skip | error
    pipeline: str | None
    nodes: int
    wall_time: float
    engine_version: str = __version__

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


class Ledger:
    """Append-only JSON-lines file with a header per run."""

    def __init__(self, path: str | Path):
        self.path = Path(path)

    def open_run(self, config: dict) -> None:
        header = {"header": True, "engine_version": __version__, "backend": kernels.BACKEND,
                  "config": config, "started": time.strftime("%Y-%m-%dT%H:%M:%S")}
        self._write(json.dumps(header, sort_keys=True))

    def append(self, record: SweepRecord) -> None:
        self._write(record.to_json())

    def _write(self, line: str) -> None:
        with open(self.path, "a", encoding="utf-8") as fh:
            fh.write(line + "\n")


def read_ledger(path: str | Path) -> list[dict]:
    with open(path, encoding="utf-8") as fh:
        return [json.loads(line) for line in fh if line.strip()]


def ledger_signature(path: str | Path) -> list[dict]:
    """Ledger content with the run-dependent fields (times) removed."""
    out = []
    for row in read_ledger(path):
        row = {k: v for k, v in row.items() if k not in ("wall_time", "started")}
        out.append(row)
    return out


# -- sweeps ---------------------------------------------------------------------

PIPELINES = {
    "1133": ("sat1", "1,1,3,3"),
    "1sat-12e4": ("sat1", "1,2^4"),
    "30sat-12e5": ("hsat0", "1,2^5"),
}


def run_pipeline(method: str, g: Graph):
    """Run a constructive pipeline by CLI name; returns its result object."""
    from .constructive.partition import run_partition_1133
    from .constructive.twos import run_1sat_12e4, run_30sat_12e5
    fn = {"1133": run_partition_1133, "1sat-12e4": run_1sat_12e4,
          "30sat-12e5": run_30sat_12e5}.get(method)
    if fn is None:
        raise PackingError(f"unknown construction method {method!r}", "USAGE")
    return fn(g)


def _facts(g: Graph) -> dict:
    if not g.is_subcubic():
        return {"n": g.n, "subcubic": False}
    return profile(g).as_dict()


def _decide_item(args) -> SweepRecord:
    text, tag, seq, budget, pipeline = args
    g = parse_graph6(text)
    start = time.perf_counter()
    facts = _facts(g)
    if not in_class(g, parse_tag(tag)):
        return SweepRecord(text, g.n, facts, seq, "skip", None, 0, 0.0)
    try:
        res = decide_colorable(g, parse_sequence(seq), budget)
        verdict = "budget" if res.status == "budget_exhausted" else res.status
        nodes = res.nodes
    except PackingError as exc:
        verdict, nodes = f"error: {exc}", 0
    pipe = None
    if pipeline:
        try:
            out = run_pipeline(pipeline, g)
            pipe = "ok" if not out.claim_failures else f"ok; claim checks: {len(out.claim_failures)}"
        except ConstructionFailed as exc:
            pipe = f"CONSTRUCTION_FAILED: {exc}"
        except PackingError as exc:
            pipe = f"error: {exc}"
    return SweepRecord(text, g.n, facts, seq, verdict, pipe, nodes,
                       round(time.perf_counter() - start, 6))


def _map(fn: Callable, items: list, workers: int):
    if workers <= 1 or len(items) < 2:
        return map(fn, items)
    pool = Pool(workers)
    try:
        return list(pool.imap(fn, items, chunksize=8))
    finally:
        pool.close()
        pool.join()


def default_workers() -> int:
    return len(os.sched_getaffinity(0)) if hasattr(os, "sched_getaffinity") else (os.cpu_count() or 1)


@dataclass
class SweepSummary:
    tag: str
    sequence: str
    records: list[SweepRecord]

    def count(self, verdict: str) -> int:
        return sum(1 for r in self.records if r.verdict == verdict)

    @property
    def decided(self) -> list[SweepRecord]:
        return [r for r in self.records if r.verdict != "skip"]

    @property
    def infeasible(self) -> list[SweepRecord]:
        return [r for r in self.records if r.verdict == "infeasible"]

    @property
    def pipeline_failures(self) -> list[SweepRecord]:
        return [r for r in self.records if r.pipeline and not r.pipeline.startswith("ok")]

    def as_dict(self) -> dict:
        return {"class": self.tag, "sequence": self.sequence, "graphs": len(self.records),
                "decided": len(self.decided), "feasible": self.count("feasible"),
                "infeasible": self.count("infeasible"), "budget": self.count("budget"),
                "skipped": self.count("skip"),
                "infeasible_graph6": [r.graph6 for r in self.infeasible]}


def sweep(graphs: Iterable[Graph], tag: str, sequence: str, budget: int = DEFAULT_BUDGET,
          ledger: str | Path | None = None, pipeline: str | None = None,
          workers: int = 1, config: dict | None = None) -> SweepSummary:
    """Decide every in-class graph for ``sequence``; skip the rest with a record."""
    parse_tag(tag)
    seq = str(parse_sequence(sequence))
    items = [(emit_graph6(g), tag, seq, budget, pipeline) for g in graphs]
    book = Ledger(ledger) if ledger else None
    if book:
        book.open_run({"op": "sweep", "class": tag, "sequence": seq, "budget": budget,
                       "pipeline": pipeline, **(config or {})})
    records = []
    for rec in _map(_decide_item, items, workers):
        records.append(rec)
        if book:
            book.append(rec)
    return SweepSummary(tag, seq, records)


# -- counterexample search ---------------------------------------------------------

@dataclass
class HuntResult:
    status: str  # exhausted | found | budget
    graph6: str | None
    decided: int
    budget_hits: list[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        return asdict(self)


def resolve_exclusions(items: Iterable[str]) -> set[bytes]:
    """Canonical codes from fixture names or graph6 strings."""
    from .fixtures import FIXTURE_NAMES, fixture
    out = set()
    for it in items:
        g = fixture(it).graph if it in FIXTURE_NAMES else parse_graph6(it)
        out.add(canonical_code(g))
    return out


def search_counterexample(tag: str, sequence: str, nmax: int, budget: int = DEFAULT_BUDGET,
                          exclude: Iterable[str] = (), ledger: str | Path | None = None,
                          workers: int = 1) -> HuntResult:
    """First in-class graph (by n, then canonical order) that is not S-colourable."""
    from .enumeration import enumerate_subcubic
    codes = resolve_exclusions(exclude)
    tg = parse_tag(tag)
    seq = str(parse_sequence(sequence))
    book = Ledger(ledger) if ledger else None
    if book:
        book.open_run({"op": "hunt", "class": tag, "sequence": seq, "nmax": nmax,
                       "budget": budget, "exclude": sorted(c.decode() for c in codes)})
    decided = 0
    hits = []
    for n in range(1, nmax + 1):
        graphs = [g for g in enumerate_subcubic(n)
                  if in_class(g, tg) and canonical_code(g) not in codes]
        items = [(emit_graph6(g), tag, seq, budget, None) for g in graphs]
        for rec in _map(_decide_item, items, workers):
            decided += 1
            if book:
                book.append(rec)
            if rec.verdict == "infeasible":
                return HuntResult("found", rec.graph6, decided, hits)
            if rec.verdict == "budget":
                hits.append(rec.graph6)
    return HuntResult("budget" if hits else "exhausted", None, decided, hits)


# -- other reports ------------------------------------------------------------------

def packing_chromatic(g: Graph, cap: int = 12, budget: int = DEFAULT_BUDGET) -> int | None:
    """Least k with a (1,2,...,k)-packing colouring, or None when above ``cap``."""
    for k in range(1, cap + 1):
        res = decide_colorable(g, parse_sequence(list(range(1, k + 1))), budget)
        if res.feasible:
            return k
        if res.status == "budget_exhausted":
            raise PackingError(f"budget exhausted at k={k}", "BUDGET")
    return None


def subdivision_check(nmax: int, budget: int = DEFAULT_BUDGET) -> dict:
    """(1,1,2,2)-colourable G must give (1,2,3,4,5)-colourable S(G)."""
    from .enumeration import enumerate_upto
    checked, failures, skipped = 0, [], 0
    for g in enumerate_upto(nmax):
        if not decide_colorable(g, parse_sequence("1,1,2,2"), budget).feasible:
            skipped += 1
            continue
        checked += 1
        if not decide_colorable(subdivide(g), parse_sequence("1,2,3,4,5"), budget).feasible:
            failures.append(emit_graph6(g))
    return {"nmax": nmax, "checked": checked, "not_1122": skipped, "failures": failures,
            "passed": not failures}


def phi_weight_experiment(alphas, betas, sequence: str = "1,1,3,4", nmax: int = 8,
                          class_maps=((3, 4, 2, 1), (4, 3, 2, 1))) -> list[dict]:
    """Rerun the partition pipeline with weights (1, α, β) against ``sequence``.

    ``class_maps`` lists the classes given to C1..C4; the defaults try both
    ways of sending C1/C2 to the two large classes.  Only records outcomes.
    """
    from fractions import Fraction
    from .constructive.partition import run_partition_1133
    from .constructive.weighted_is import scaled_weights
    from .enumeration import enumerate_upto
    tag = parse_tag("sat1")
    graphs = [g for g in enumerate_upto(nmax) if in_class(g, tag)]
    rows = []
    for a in alphas:
        for b in betas:
            w = scaled_weights(Fraction(a), Fraction(b))
            for cmap in class_maps:
                ok, failures = 0, []
                for g in graphs:
                    try:
                        run_partition_1133(g, weights=w, sequence=sequence, class_map=cmap,
                                           repair=False)
                        ok += 1
                    except PackingError as exc:
                        failures.append({"graph6": emit_graph6(g), "error": str(exc)})
                rows.append({"alpha": str(Fraction(a)), "beta": str(Fraction(b)),
                             "weights": list(w), "class_map": list(cmap), "sequence": sequence,
                             "graphs": len(graphs), "success": ok, "failed": len(failures),
                             "failures": failures[:10]})
    return rows


# -- known results ------------------------------------------------------------------

# (class tag, sequence) known positive results
POSITIVE_ROWS = (
    ("any", "1,1,2,2,3"), ("any", "1,2^6"),
    ("hsat0", "1,1,2,2"), ("hsat0", "1,2^5"),
    ("sat2", "1,1,2,3"), ("sat2", "1,2^5"),
    ("sat1", "1,1,2"), ("sat1", "1,1,3,3"), ("sat1", "1,2^4"),
    ("sat0", "1,1,3"), ("sat0", "1,2^3"),
)

# (fixture, class tag it witnesses, sequence) known negative results
NEGATIVE_ENTRIES = (
    ("petersen", "any", "1,1,2,3"),
    ("petersen", "any", "1,2^5"),
    ("three_triangle_gadget", "hsat2", "1,1,3,3"),
    ("c12_three_chords", "sat1", "1,1,4,4"),
    ("hex_wheel_left", "hsat0", "1,2^3"),
    ("hex_wheel_left", "sat2", "1,2^3"),
    ("thirteen_vertex_right", "hsat0", "1,2^3"),
    ("c8_two_chords", "sat1", "1,2^3"),
    ("two_k3_star", "sat0", "1,1,4"),
    ("sk4", "sat0", "1,2,2"),
)


@dataclass
class ClaimResult:
    name: str
    kind: str
    passed: bool
    detail: dict


@dataclass
class ClaimsReport:
    nmax: int
    results: list[ClaimResult]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_text(self) -> str:
        lines = [f"known results, enumerated graphs n <= {self.nmax}"]
        for r in self.results:
            lines.append(f"{'PASS' if r.passed else 'FAIL'}  {r.kind:<12} {r.name}")
        lines.append(f"overall: {'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)

    def as_dict(self) -> dict:
        return {"nmax": self.nmax, "passed": self.passed,
                "results": [asdict(r) for r in self.results]}


def pipeline_agreement(nmax: int) -> dict:
    """Run each pipeline on every in-class enumerated graph; tally failures and checks."""
    from .enumeration import enumerate_upto
    graphs = list(enumerate_upto(nmax))
    out = {}
    for method, (tag, seq) in PIPELINES.items():
        tg = parse_tag(tag)
        runs, failed, checks, examples = 0, [], {}, {}
        for g in graphs:
            if not in_class(g, tg):
                continue
            runs += 1
            try:
                res = run_pipeline(method, g)
            except PackingError as exc:
                failed.append({"graph6": emit_graph6(g), "error": str(exc)})
                continue
            for f in res.claim_failures:
                key = f.split()[0]
                checks[key] = checks.get(key, 0) + 1
                examples.setdefault(key, emit_graph6(g))
        out[method] = {"class": tag, "sequence": seq, "runs": runs, "failed": failed,
                       "claim_check_failures": checks, "claim_check_examples": examples}
    return out


def check_paper_claims(nmax: int, budget: int = DEFAULT_BUDGET, workers: int = 1) -> ClaimsReport:
    from .enumeration import enumerate_upto
    from .fixtures import fixture
    graphs = list(enumerate_upto(nmax))
    results = []
    for tag, seq in POSITIVE_ROWS:
        s = sweep(graphs, tag, seq, budget, workers=workers)
        d = s.as_dict()
        results.append(ClaimResult(f"every {tag} graph is ({seq})-colourable", "positive",
                                   d["infeasible"] == 0 and d["budget"] == 0, d))
    for name, tag, seq in NEGATIVE_ENTRIES:
        fx = fixture(name)
        member = in_class(fx.graph, parse_tag(tag))
        res = decide_colorable(fx.graph, parse_sequence(seq), budget)
        results.append(ClaimResult(f"{name} is {tag} and not ({seq})-colourable", "negative",
                                   member and res.status == "infeasible",
                                   {"in_class": member, "verdict": res.status, "nodes": res.nodes}))
    agree = pipeline_agreement(nmax)
    for method, d in agree.items():
        results.append(ClaimResult(f"{method} pipeline succeeds on every {d['class']} graph",
                                   "constructive", not d["failed"], d))
    checks = {m: d["claim_check_failures"] for m, d in agree.items()}
    results.append(ClaimResult("claim-level checks hold on every pipeline run", "claim-checks",
                               not any(checks.values()), checks))
    return ClaimsReport(nmax, results)
