"""(1,2^4) and (1,2^5) colourings via reduction, a 1-class, and 2-classes.

Both pipelines first reduce the graph (leaves, adjacent 2-vertices, and for
(1,2^5) also 2-vertices whose 3-neighbour has another 2-neighbour), colour
the reduced graph directly, then replay the log backwards restoring and
colouring one vertex at a time.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..canonical import find_isomorphism
from ..classify import heavy_flags, profile
from ..errors import ConstructionFailed, ExtensionStuck, NotInClass
from ..graph import Graph, all_pairs_distances, build_graph
from ..solver import decide_colorable, parse_sequence, verify_coloring
from .reductions import ReductionLog, WorkGraph, extend_coloring, reduce_work

SEQ_12E4 = parse_sequence("1,2^4")
SEQ_12E5 = parse_sequence("1,2^5")


@dataclass
class TwosTrace:
    reduced_n: int = 0
    log_kinds: dict = field(default_factory=dict)
    rules: dict = field(default_factory=dict)
    claim_failures: list[str] = field(default_factory=list)
    skipped_checks: list[str] = field(default_factory=list)
    conflict_max_degree: int = 0
    fallbacks: list[str] = field(default_factory=list)

    def report(self) -> str:
        lines = [f"reduced graph: {self.reduced_n} vertices",
                 f"log: {self.log_kinds}", f"extension rules: {self.rules}",
                 f"conflict graph max degree: {self.conflict_max_degree}"]
        lines += [f"fallback: {f}" for f in self.fallbacks]
        lines += [f"claim check failed: {f}" for f in self.claim_failures]
        lines += [f"check skipped: {s}" for s in self.skipped_checks]
        return "\n".join(lines)


@dataclass
class TwosResult:
    coloring: list[int]
    sequence: str
    trace: TwosTrace

    @property
    def claim_failures(self) -> list[str]:
        return self.trace.claim_failures


def _count(items) -> dict:
    out: dict = {}
    for x in items:
        out[x] = out.get(x, 0) + 1
    return out


def _reduce(g: Graph, drop: bool, trace: TwosTrace):
    work = WorkGraph.from_graph(g)
    log = ReductionLog()
    reduce_work(work, log, peel=True, drop=drop)
    reduced, ids = work.to_graph()
    trace.reduced_n = reduced.n
    trace.log_kinds = _count(r.kind for r in log)
    return work, log, reduced, ids


def _finish(g: Graph, work, core_col, log, seq, trace) -> list[int]:
    try:
        full_work, col, rules = extend_coloring(work, core_col, log, seq)
    except ExtensionStuck as exc:
        raise ConstructionFailed(str(exc), trace.report()) from exc
    trace.rules = _count(rules)
    coloring = [col[v] for v in range(g.n)]
    bad = verify_coloring(g, seq, coloring)
    if bad:
        raise ConstructionFailed(f"output does not verify: {bad[:5]}", trace.report())
    return coloring


def run_1sat_12e4(g: Graph, check_class: bool = True) -> TwosResult:
    """(1,2^4) colouring of a 1-saturated subcubic graph, with trace."""
    if check_class and (not g.is_subcubic() or profile(g).sat_level > 1):
        raise NotInClass("color_1sat_12e4 needs a 1-saturated subcubic graph")
    trace = TwosTrace()
    work, log, red, ids = _reduce(g, drop=False, trace=trace)
    dist = all_pairs_distances(red)
    col: dict[int, int] = {}
    threes = [v for v in range(red.n) if red.degree(v) == 3]
    for v in range(red.n):
        if red.degree(v) < 3:
            col[ids[v]] = 1
    for v in range(red.n):
        if red.degree(v) < 3:
            for u in red.adj[v]:
                if red.degree(u) < 3:
                    trace.claim_failures.append(f"2-vertices {ids[v]},{ids[u]} adjacent after reduction")
    for v in threes:
        near = [u for u in threes if u != v and dist[u, v] <= 2]
        if len(near) > 3:
            trace.claim_failures.append(f"3-vertex {ids[v]} has {len(near)} 3-vertices within distance 2")
        used = {col[ids[u]] for u in near if ids[u] in col}
        free = [c for c in range(2, 6) if c not in used]
        if not free:
            raise ConstructionFailed(f"greedy stuck at 3-vertex {ids[v]}", trace.report())
        col[ids[v]] = free[0]
    return TwosResult(_finish(g, work, col, log, SEQ_12E4, trace), str(SEQ_12E4), trace)


def _figure_fallback(sub: Graph) -> list[int] | None:
    """Stored (1,2^4) colouring of a Figure graph isomorphic to ``sub``."""
    from ..fixtures import fixture
    for name in ("hex_wheel_left", "thirteen_vertex_right"):
        fx = fixture(name)
        iso = find_isomorphism(fx.graph, sub)
        if iso is not None:
            out = [0] * sub.n
            for v, c in enumerate(fx.coloring):
                out[iso[v]] = c
            return out
    return None


def run_30sat_12e5(g: Graph, check_class: bool = True) -> TwosResult:
    """(1,2^5) colouring of a (3,0)-saturated subcubic graph, with trace."""
    if check_class and (not g.is_subcubic() or profile(g).heavy_sat_level > 0):
        raise NotInClass("color_30sat_12e5 needs a (3,0)-saturated subcubic graph")
    trace = TwosTrace()
    work, log, red, ids = _reduce(g, drop=True, trace=trace)
    heavy = heavy_flags(red)
    x = {v for v in range(red.n) if heavy[v] or red.degree(v) < 3}
    for v in x:
        for u in red.adj[v]:
            if u in x and v < u:
                trace.claim_failures.append(f"X not independent: {ids[v]},{ids[u]}")
    rest = [v for v in range(red.n) if v not in x]
    dist = all_pairs_distances(red)
    index = {v: i for i, v in enumerate(rest)}
    cg_edges = [(index[u], index[v]) for i, u in enumerate(rest) for v in rest[i + 1:]
                if dist[u, v] <= 2]
    cg = build_graph(len(rest), cg_edges)
    trace.conflict_max_degree = cg.max_degree if cg.n else 0
    premise = all(sum(1 for u in red.adj[v] if red.degree(u) == 2) <= 1
                  for v in range(red.n) if red.degree(v) == 3)
    if premise:
        if trace.conflict_max_degree > 5:
            trace.claim_failures.append(f"(f) conflict graph max degree {trace.conflict_max_degree}")
    else:
        trace.skipped_checks.append("(f) a 3-vertex has two 2-neighbours")

    col: dict[int, int] = {ids[v]: 1 for v in x}
    res = decide_colorable(cg, parse_sequence("1^5"))
    if res.feasible:
        for v in rest:
            col[ids[v]] = res.coloring[index[v]] + 1
    else:
        # colour component by component; a K6 in G' comes from a Figure graph
        figures = []
        for comp in cg.components():
            sub_cg, back = cg.induced(comp)
            r = decide_colorable(sub_cg, parse_sequence("1^5"))
            if r.feasible:
                for i, c in enumerate(r.coloring):
                    col[ids[rest[back[i]]]] = c + 1
                continue
            anchor = rest[back[0]]
            gcomp = next(c for c in red.components() if anchor in c)
            sub, gback = red.induced(gcomp)
            stored = _figure_fallback(sub)
            if stored is None:
                raise ConstructionFailed(
                    f"conflict-graph component {[ids[rest[i]] for i in back]} is not 5-colourable "
                    "and its graph is not a Figure configuration", trace.report())
            trace.fallbacks.append(f"figure colouring on {[ids[v] for v in gback]}")
            figures.append((gback, stored))
        # applied last so they cover their whole component
        for gback, stored in figures:
            for i, c in enumerate(stored):
                col[ids[gback[i]]] = c
    return TwosResult(_finish(g, work, col, log, SEQ_12E5, trace), str(SEQ_12E5), trace)


def color_1sat_12e4(g: Graph) -> list[int]:
    """A verified (1,2,2,2,2)-packing colouring of a 1-saturated subcubic graph."""
    return run_1sat_12e4(g).coloring


def color_30sat_12e5(g: Graph) -> list[int]:
    """A verified (1,2,2,2,2,2)-packing colouring of a (3,0)-saturated subcubic graph."""
    return run_30sat_12e5(g).coloring
