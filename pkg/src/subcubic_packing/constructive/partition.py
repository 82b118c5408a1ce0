"""(1,1,3,3)-packing colouring of 1-saturated subcubic graphs.

Pipeline per connected component:

1. peel leaves (restored at the end with a free 1-class);
2. take an optimal weighted independent set ``S`` of the core;
3. split ``G - S`` into maximal paths of types P0..P3;
4. pick a bad set ``B`` maximising the number of sibs, then ``B'`` which
   trades every lonely 3-vertex for the 2-vertex on its path;
5. build classes C1 (lonely vertices of B' plus one member of each sib
   pair), C2 (mid vertices plus the other sib), C3 (rest of the
   complement) and C4 = S, coloured 3_a, 3_b, 1_b, 1_a.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from ..classify import profile
from ..errors import ConstructionFailed, NotInClass, StructureViolation
from ..graph import Graph, all_pairs_distances, DistanceMatrix
from ..solver import parse_sequence, verify_coloring
from .reductions import WorkGraph, extend_peel, peel_degree_one
from .weighted_is import DEFAULT_WEIGHTS, EXACT_MAX_N, WeightedIS, max_weighted_is, optimal_sets

EXACT_BAD_SET_PATHS = 20


@dataclass(frozen=True)
class MaximalPath:
    kind: str  # "P0" | "P1" | "P2" | "P3"
    vertices: tuple[int, ...]  # P2: (2-vertex, 3-vertex); P3: (end, mid, end)


@dataclass
class PathDecomposition:
    paths: list[MaximalPath]
    path_of: dict[int, int]
    role: dict[int, str]  # "bad2" | "weak3" | "mid3" | "none"
    fathers: dict[int, tuple[int, ...]]

    def partner(self, v: int) -> int | None:
        """The other vertex of v's P1/P2 path (its bad neighbour)."""
        p = self.paths[self.path_of[v]]
        if p.kind in ("P1", "P2"):
            return next(u for u in p.vertices if u != v)
        return None

    def is_bad(self, v: int) -> bool:
        return self.role.get(v, "none") != "none"


def decompose_paths(g: Graph, s) -> PathDecomposition:
    """Type every maximal path of ``G - S``; raise on impossible structure."""
    s = frozenset(s)
    comp_vertices = [v for v in range(g.n) if v not in s]
    fathers = {v: tuple(u for u in g.adj[v] if u in s) for v in comp_vertices}
    for v, f in fathers.items():
        if not f:
            raise StructureViolation(f"complement vertex {v} has no neighbour in S (S not maximal)")
    inside = {v: [u for u in g.adj[v] if u not in s] for v in comp_vertices}
    seen = set()
    paths: list[MaximalPath] = []
    path_of: dict[int, int] = {}
    role: dict[int, str] = {}
    for v in comp_vertices:
        if v in seen:
            continue
        comp = {v}
        stack = [v]
        while stack:
            x = stack.pop()
            for u in inside[x]:
                if u not in comp:
                    comp.add(u)
                    stack.append(u)
        seen |= comp
        verts = sorted(comp)
        degs = [g.degree(x) for x in verts]
        if len(verts) == 1:
            p = MaximalPath("P0", tuple(verts))
            role[verts[0]] = "none"
        elif len(verts) == 2:
            a, b = verts
            if degs == [2, 2]:
                p = MaximalPath("P1", (a, b))
                role[a] = role[b] = "bad2"
            elif sorted(degs) == [2, 3]:
                two, three = (a, b) if g.degree(a) == 2 else (b, a)
                p = MaximalPath("P2", (two, three))
                role[two], role[three] = "bad2", "weak3"
            else:
                raise StructureViolation(f"adjacent complement 3-vertices {a}, {b}")
        elif len(verts) == 3:
            mids = [x for x in verts if len(inside[x]) == 2]
            if len(mids) != 1:
                raise StructureViolation(f"complement triangle {verts}")
            mid = mids[0]
            ends = [x for x in verts if x != mid]
            if g.degree(mid) != 3 or any(g.degree(x) != 2 for x in ends):
                raise StructureViolation(f"complement path {verts} has a 3-vertex end")
            p = MaximalPath("P3", (ends[0], mid, ends[1]))
            role[ends[0]] = role[ends[1]] = "bad2"
            role[mid] = "mid3"
        else:
            raise StructureViolation(f"complement component of size {len(verts)}: {verts}")
        for x in verts:
            path_of[x] = len(paths)
        paths.append(p)
    return PathDecomposition(paths, path_of, role, fathers)


# -- siblings and bad sets ---------------------------------------------------------

def siblings(g: Graph, dec: PathDecomposition, v: int) -> set[int]:
    """Non-adjacent complement vertices sharing a father with ``v``."""
    out = set()
    for f in dec.fathers[v]:
        for u in g.adj[f]:
            if u != v and u in dec.fathers and u not in g.adj[v]:
                out.add(u)
    return out


def bad_siblings(g: Graph, dec: PathDecomposition, v: int) -> set[int]:
    return {u for u in siblings(g, dec, v) if dec.is_bad(u)}


@dataclass
class BadSet:
    members: tuple[int, ...]
    status: dict[int, str]  # "lonely" | "sib"
    partners: dict[int, tuple[int, ...]]  # sib -> its siblings inside the set
    gamma: int

    @property
    def lonely(self) -> list[int]:
        return [v for v in self.members if self.status[v] == "lonely"]

    @property
    def sibs(self) -> list[int]:
        return [v for v in self.members if self.status[v] == "sib"]


def make_bad_set(g: Graph, dec: PathDecomposition, members) -> BadSet:
    mem = tuple(sorted(members))
    ms = set(mem)
    status, partners = {}, {}
    for v in mem:
        p = tuple(sorted(siblings(g, dec, v) & ms))
        status[v] = "sib" if p else "lonely"
        if p:
            partners[v] = p
    return BadSet(mem, status, partners, sum(1 for v in mem if status[v] == "sib"))


def _gamma(sib_sets, choice_set) -> int:
    return sum(1 for v in choice_set if sib_sets[v] & choice_set)


def best_bad_set(g: Graph, s, dec: PathDecomposition) -> tuple[BadSet, BadSet]:
    """Bad set ``B`` with the most sibs, and the derived ``B'``.

    γ splits over groups of paths whose vertices are siblings of one
    another, so each group is optimised on its own: exhaustively for up to
    20 paths, by single-flip ascent beyond that.  Ties go to the
    lexicographically smallest member tuple within a group.
    """
    choice_paths = [p for p in dec.paths if p.kind in ("P1", "P2")]
    sib = {v: siblings(g, dec, v) for p in choice_paths for v in p.vertices}
    pidx = {v: i for i, p in enumerate(choice_paths) for v in p.vertices}
    # union-find over interacting paths
    parent = list(range(len(choice_paths)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for v, ss in sib.items():
        for u in ss:
            if u in pidx:
                a, b = find(pidx[v]), find(pidx[u])
                if a != b:
                    parent[max(a, b)] = min(a, b)
    groups: dict[int, list[int]] = {}
    for i in range(len(choice_paths)):
        groups.setdefault(find(i), []).append(i)

    chosen: list[int] = []
    for idx in groups.values():
        opts = [sorted(choice_paths[i].vertices) for i in idx]
        if len(idx) <= EXACT_BAD_SET_PATHS:
            best = None
            for pick in product(*opts):
                cs = set(pick)
                key = (-_gamma(sib, cs), tuple(sorted(cs)))
                if best is None or key < best:
                    best = key
            chosen += list(best[1])
        else:
            pick = [o[0] for o in opts]
            improved = True
            while improved:
                improved = False
                base = _gamma(sib, set(pick))
                for j, o in enumerate(opts):
                    alt = o[1] if pick[j] == o[0] else o[0]
                    trial = pick[:j] + [alt] + pick[j + 1:]
                    if _gamma(sib, set(trial)) > base:
                        pick, improved = trial, True
                        break
            chosen += pick
    b = make_bad_set(g, dec, chosen)
    swap = {v: dec.partner(v) for v in b.lonely if g.degree(v) == 3}
    b_prime = make_bad_set(g, dec, [swap.get(v, v) for v in b.members])
    return b, b_prime


# -- the partition ------------------------------------------------------------------

@dataclass
class PartitionTrace:
    """Everything needed to audit one component of the (1,1,3,3) pipeline."""
    ids: list[int] = field(default_factory=list)
    wis: WeightedIS | None = None
    decomposition: PathDecomposition | None = None
    B: BadSet | None = None
    B_prime: BadSet | None = None
    pairs: list[tuple[int, int]] = field(default_factory=list)
    C1: list[int] = field(default_factory=list)
    C2: list[int] = field(default_factory=list)
    C3: list[int] = field(default_factory=list)
    C4: list[int] = field(default_factory=list)
    claim_failures: list[str] = field(default_factory=list)
    repairs: list[str] = field(default_factory=list)
    rejected: list[str] = field(default_factory=list)
    violated: str = ""

    def report(self) -> str:
        name = lambda vs: "{" + ",".join(str(self.ids[v]) if self.ids else str(v) for v in vs) + "}"
        lines = []
        if self.wis:
            w = self.wis
            lines.append(f"S = {name(w.S)}  X1={name(w.X1)} X0={name(w.X0)} Y={name(w.Y)} "
                         f"phi_scaled={w.phi_scaled} theta={w.theta}")
        if self.decomposition:
            for p in self.decomposition.paths:
                lines.append(f"  path {p.kind}: {name(p.vertices)}")
        for label, bs in (("B", self.B), ("B'", self.B_prime)):
            if bs:
                lines.append(f"{label} = {name(bs.members)} lonely={name(bs.lonely)} "
                             f"sibs={name(bs.sibs)} gamma={bs.gamma}")
        lines.append("sib pairs: " + ", ".join(f"{name(p)}" for p in self.pairs))
        for label in ("C1", "C2", "C3", "C4"):
            lines.append(f"{label} = {name(getattr(self, label))}")
        for f in self.claim_failures:
            lines.append(f"claim check failed: {f}")
        for r in self.rejected:
            lines.append(f"rejected optimal set {r}")
        for r in self.repairs:
            lines.append(f"repair: {r}")
        if self.violated:
            lines.append(f"violated: {self.violated}")
        return "\n".join(lines)


def _claim_checks(g: Graph, dist: DistanceMatrix, dec: PathDecomposition, b: BadSet,
                  bp: BadSet, trace: PartitionTrace) -> None:
    fail = trace.claim_failures.append
    comp3 = [v for v in dec.fathers if g.degree(v) == 3]
    for v in comp3:
        for u in g.adj[v]:
            if u in dec.fathers and g.degree(u) == 3 and u > v:
                fail(f"(a) complement 3-vertices {v},{u} adjacent")
    for v, r in dec.role.items():
        if r == "none":
            continue
        nb = len(bad_siblings(g, dec, v))
        if r == "mid3" and nb:
            fail(f"(b) mid bad vertex {v} has {nb} bad siblings")
        if r != "mid3" and nb > 1:
            fail(f"(b) bad vertex {v} has {nb} bad siblings")
            paths = {dec.path_of[u] for u in bad_siblings(g, dec, v)}
            if len(paths) > 1:
                fail(f"(b-path) bad siblings of {v} lie on {len(paths)} maximal paths")
    lon = b.lonely
    for i, u in enumerate(lon):
        for v in lon[i + 1:]:
            if dist[u, v] <= 3:
                fail(f"(c) lonely vertices {u},{v} of B at distance {dist[u, v]}")
    if bp.gamma != b.gamma:
        fail(f"gamma(B')={bp.gamma} differs from gamma(B)={b.gamma}")
    if any(g.degree(v) == 3 for v in bp.lonely):
        fail("B' has a lonely 3-vertex")
    sibs = bp.sibs
    mids = [v for v, r in dec.role.items() if r == "mid3"]
    for i, u in enumerate(sibs):
        for v in sibs[i + 1:]:
            if v not in bp.partners.get(u, ()) and dist[u, v] <= 3:
                fail(f"(d1) non-sibling sibs {u},{v} at distance {dist[u, v]}")
    for i, u in enumerate(mids):
        for v in mids[i + 1:]:
            if dist[u, v] <= 3:
                fail(f"(d2) mid bad vertices {u},{v} at distance {dist[u, v]}")
    for u in mids:
        for v in sibs:
            if dist[u, v] <= 3:
                fail(f"(d3) mid {u} and sib {v} at distance {dist[u, v]}")


ORIENT_NODE_LIMIT = 100_000


def _packing_ok(dist: DistanceMatrix, members, radius: int) -> bool:
    ms = sorted(members)
    return all(dist[x, y] > radius for i, x in enumerate(ms) for y in ms[i + 1:])


def _orient(dist: DistanceMatrix, c1: set, c2: set, prefs: list[tuple[int, int]],
            r1: int, r2: int) -> tuple[set, set] | None:
    """Place each sib in C1 or C2 so both stay packings, preferred side first."""
    nodes = 0

    def rec(i):
        nonlocal nodes
        nodes += 1
        if nodes > ORIENT_NODE_LIMIT:
            return False
        if i == len(prefs):
            return True
        v, side = prefs[i]
        for choice in (side, 3 - side):
            tgt, r = (c1, r1) if choice == 1 else (c2, r2)
            if all(dist[v, w] > r for w in tgt):
                tgt.add(v)
                if rec(i + 1):
                    return True
                tgt.discard(v)
        return False

    if not (_packing_ok(dist, c1, r1) and _packing_ok(dist, c2, r2)):
        return None
    return (c1, c2) if rec(0) else None


def _partition_core(g: Graph, wis: WeightedIS, trace: PartitionTrace, radii=(3, 3),
                    repair: bool = True):
    """C1..C4 for one core component and one optimal set; None if no valid orientation."""
    dist = all_pairs_distances(g)
    trace.wis = wis
    dec = decompose_paths(g, wis.S)
    trace.decomposition = dec
    b, bp = best_bad_set(g, wis.S, dec)
    trace.B, trace.B_prime = b, bp
    _claim_checks(g, dist, dec, b, bp, trace)

    lonely = bp.lonely
    c1 = set(lonely)
    c2 = {v for v, r in dec.role.items() if r == "mid3"}
    prefs: list[tuple[int, int]] = []  # (sib, preferred side 1 or 2)
    paired = set()
    for u in bp.sibs:
        if u in paired:
            continue
        partners = [v for v in bp.partners[u] if v not in paired]
        if len(bp.partners[u]) != 1:
            trace.claim_failures.append(f"sib {u} has siblings {bp.partners[u]} in B'")
        if not partners:
            # partner already matched elsewhere; treat u alone
            prefs.append((u, 1 if all(dist[u, w] >= 4 for w in lonely) else 2))
            paired.add(u)
            continue
        v = partners[0]
        paired |= {u, v}
        trace.pairs.append((u, v))
        ok = [x for x in (u, v) if all(dist[x, w] >= 4 for w in lonely)]
        if not ok:
            trace.claim_failures.append(f"(claim 5) neither sib {u} nor {v} is far from the lonely vertices")
            ok = [u, v]
        x = min(ok)
        prefs += [(x, 1), (v if x == u else u, 2)]
    d1 = c1 | {v for v, side in prefs if side == 1}
    d2 = c2 | {v for v, side in prefs if side == 2}
    if repair and not (_packing_ok(dist, d1, radii[0]) and _packing_ok(dist, d2, radii[1])):
        found = _orient(dist, set(c1), set(c2), prefs, *radii)
        if found is None:
            return None
        d1, d2 = found
        trace.repairs.append("sib orientation chosen by search")
    c1, c2 = d1, d2
    comp = set(dec.fathers)
    c3 = comp - c1 - c2
    trace.C1, trace.C2, trace.C3, trace.C4 = sorted(c1), sorted(c2), sorted(c3), list(wis.S)
    for label, cls in (("C1", c1), ("C2", c2)):
        for x in cls:
            for y in cls:
                if x < y and dist[x, y] < 4:
                    trace.claim_failures.append(f"(e) {label} members {x},{y} at distance {dist[x, y]}")
    for x in c3:
        for y in g.adj[x]:
            if y in c3 and x < y:
                trace.claim_failures.append(f"(e) C3 members {x},{y} adjacent")
    return c1, c2, c3, set(wis.S)


@dataclass
class PipelineResult:
    coloring: list[int]
    sequence: str
    traces: list = field(default_factory=list)

    @property
    def claim_failures(self) -> list[str]:
        return [f for t in self.traces for f in getattr(t, "claim_failures", [])]

    @property
    def repairs(self) -> list[str]:
        return [f for t in self.traces for f in getattr(t, "repairs", [])]


def _candidates(core: Graph, weights, wis_mode: str, repair: bool):
    mode = wis_mode
    if mode == "auto":
        mode = "exact" if core.n <= EXACT_MAX_N else "exchange"
    if mode == "exchange":
        return [max_weighted_is(core, weights, mode="exchange")]
    sets = optimal_sets(core, weights)
    return sets if repair else sets[:1]


def _color_core(core: Graph, ids, seq, weights, class_map, wis_mode, repair, trace):
    radii = (seq[class_map[0] - 1], seq[class_map[1] - 1])
    rejected = []
    for rank, wis in enumerate(_candidates(core, weights, wis_mode, repair)):
        attempt = PartitionTrace(ids=trace.ids)
        try:
            parts = _partition_core(core, wis, attempt, radii, repair)
        except StructureViolation as exc:
            attempt.violated = str(exc)
            parts = None
        col = None
        if parts is not None:
            col = {}
            for cls, part in zip(class_map, parts):
                for v in part:
                    col[ids[v]] = cls
            bad = verify_coloring(core, seq, [col[ids[v]] for v in range(core.n)])
            if bad:
                attempt.violated = f"core colouring: {bad[:5]}"
                col = None
        elif not attempt.violated:
            attempt.violated = "no sib orientation keeps C1 and C2 packings"
        if col is not None or not repair:
            trace.__dict__.update({k: v for k, v in attempt.__dict__.items() if k != "rejected"})
            trace.rejected = rejected
            if rank:
                trace.repairs.append(f"optimal set number {rank + 1} used")
            if col is None:
                raise ConstructionFailed(attempt.violated, trace.report())
            return col
        rejected.append(f"S={[trace.ids[v] for v in wis.S]}: {attempt.violated}")
    trace.rejected = rejected
    raise ConstructionFailed("no optimal independent set yields a valid partition", trace.report())


def run_partition_1133(g: Graph, weights=DEFAULT_WEIGHTS, sequence="1,1,3,3",
                       class_map=(3, 4, 2, 1), wis_mode: str = "auto",
                       check_class: bool = True, repair: bool = True) -> PipelineResult:
    """Full pipeline with traces.  ``class_map`` gives the classes of C1..C4.

    With ``repair`` the sibs may be oriented by search and later optimal
    sets tried when the lexicographically first one does not give a valid
    partition; every such step is listed in the trace.  Without it the
    construction is followed literally and any failure is raised.
    """
    seq = parse_sequence(sequence)
    if check_class and (not g.is_subcubic() or profile(g).sat_level > 1):
        raise NotInClass("partition_1133 needs a 1-saturated subcubic graph")
    coloring = [0] * g.n
    traces = []
    for comp in g.components():
        sub, back = g.induced(comp)
        core, log, ids = peel_degree_one(sub)
        trace = PartitionTrace(ids=[back[i] for i in ids])
        traces.append(trace)
        if core.n == 1:
            core_col = {ids[0]: class_map[3]}
        else:
            core_col = _color_core(core, ids, seq, weights, class_map, wis_mode, repair, trace)
        core_work = WorkGraph({ids[v]: {ids[u] for u in core.adj[v]} for v in range(core.n)})
        full = extend_peel(core_col, log, core_work, seq)
        for v in range(sub.n):
            coloring[back[v]] = full[v]
    bad = verify_coloring(g, seq, coloring)
    if bad:
        raise ConstructionFailed(f"output does not verify: {bad[:5]}",
                                 "\n\n".join(t.report() for t in traces))
    return PipelineResult(coloring, str(seq), traces)


def partition_1133(g: Graph, **kwargs) -> list[int]:
    """A verified (1,1,3,3)-packing colouring of a 1-saturated subcubic graph.

    Classes: 1 and 2 are the two 1-classes (S and the rest of the
    complement), 3 and 4 the two 3-classes.
    """
    return run_partition_1133(g, **kwargs).coloring
