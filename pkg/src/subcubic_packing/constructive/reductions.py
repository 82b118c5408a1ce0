"""Reversible graph reductions and colouring extension.

Reductions act on a :class:`WorkGraph` keyed by original vertex ids, so a
log entry stays meaningful after later rewrites.  Every rewrite is
recorded; :meth:`ReductionLog.replay` rebuilds the original graph and
:func:`extend_coloring` walks the same log backwards, restoring one vertex
at a time and colouring it.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from ..errors import ExtensionStuck
from ..graph import Graph, all_pairs_distances
from .. import kernels
from ..solver import PackingSequence, branching_order


class WorkGraph:
    """Mutable adjacency over arbitrary integer ids."""

    def __init__(self, adj: dict[int, set[int]]):
        self.adj = adj

    @classmethod
    def from_graph(cls, g: Graph, ids: Iterable[int] | None = None) -> "WorkGraph":
        ids = list(range(g.n)) if ids is None else list(ids)
        return cls({ids[v]: {ids[u] for u in g.adj[v]} for v in range(g.n)})

    def copy(self) -> "WorkGraph":
        return WorkGraph({v: set(a) for v, a in self.adj.items()})

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def vertices(self) -> list[int]:
        return sorted(self.adj)

    def add_edge(self, u: int, v: int) -> None:
        self.adj[u].add(v)
        self.adj[v].add(u)

    def remove_edge(self, u: int, v: int) -> None:
        self.adj[u].discard(v)
        self.adj[v].discard(u)

    def remove_vertex(self, v: int) -> list[int]:
        nbrs = sorted(self.adj.pop(v))
        for u in nbrs:
            self.adj[u].discard(v)
        return nbrs

    def add_vertex(self, v: int, nbrs: Iterable[int]) -> None:
        self.adj[v] = set()
        for u in nbrs:
            self.add_edge(v, u)

    def to_graph(self) -> tuple[Graph, list[int]]:
        """Dense copy plus ``ids`` mapping dense index -> id."""
        ids = self.vertices()
        index = {v: i for i, v in enumerate(ids)}
        return Graph(len(ids), [[index[u] for u in self.adj[v]] for v in ids]), ids

    def ball(self, source: int, radius: int) -> dict[int, int]:
        """Distances from ``source`` to every id within ``radius``."""
        dist = {source: 0}
        queue = deque([source])
        while queue:
            v = queue.popleft()
            d = dist[v]
            if d == radius:
                continue
            for u in self.adj[v]:
                if u not in dist:
                    dist[u] = d + 1
                    queue.append(u)
        return dist


# -- log records ---------------------------------------------------------------

@dataclass(frozen=True)
class Peel:
    """Leaf ``v`` removed from its unique neighbour ``u``."""
    v: int
    u: int
    kind: str = "peel"


@dataclass(frozen=True)
class Merge2:
    """2-vertex ``v`` (neighbours u, w; u also a 2-vertex) removed.

    ``added_edge`` is set when the edge ``uw`` was inserted in its place.
    """
    v: int
    u: int
    w: int
    added_edge: bool
    kind: str = "merge2"


@dataclass(frozen=True)
class DropVertex:
    """A 2-vertex ``v`` deleted outright (its neighbours listed)."""
    v: int
    nbrs: tuple[int, ...]
    kind: str = "drop3"


@dataclass
class ReductionLog:
    records: list = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def __iter__(self):
        return iter(self.records)

    def undo(self, work: WorkGraph, rec) -> None:
        if isinstance(rec, Peel):
            work.add_vertex(rec.v, [rec.u])
        elif isinstance(rec, Merge2):
            if rec.added_edge:
                work.remove_edge(rec.u, rec.w)
            work.add_vertex(rec.v, [rec.u, rec.w])
        else:
            work.add_vertex(rec.v, rec.nbrs)

    def replay(self, reduced: WorkGraph) -> WorkGraph:
        """Rebuild the pre-reduction graph from the reduced one."""
        work = reduced.copy()
        for rec in reversed(self.records):
            self.undo(work, rec)
        return work


# -- reductions ----------------------------------------------------------------

def _peel_step(work: WorkGraph, log: ReductionLog) -> bool:
    for v in work.vertices():
        if work.degree(v) == 1:
            (u,) = work.adj[v]
            work.remove_vertex(v)
            log.records.append(Peel(v, u))
            return True
    return False


def _merge_step(work: WorkGraph, log: ReductionLog) -> bool:
    for u in work.vertices():
        if work.degree(u) != 2:
            continue
        for v in sorted(work.adj[u]):
            if work.degree(v) != 2:
                continue
            (w,) = work.adj[v] - {u}
            triangle = u in work.adj[w]
            work.remove_vertex(v)
            if not triangle:
                work.add_edge(u, w)
            log.records.append(Merge2(v, u, w, not triangle))
            return True
    return False


def _drop_step(work: WorkGraph, log: ReductionLog) -> bool:
    """Delete a 2-vertex whose neighbour has a second 2-neighbour."""
    for x in work.vertices():
        if work.degree(x) != 2:
            continue
        for u in sorted(work.adj[x]):
            if work.degree(u) == 3 and any(work.degree(y) == 2 for y in work.adj[u] if y != x):
                log.records.append(DropVertex(x, tuple(work.remove_vertex(x))))
                return True
    return False


def peel_work(work: WorkGraph, log: ReductionLog) -> None:
    while _peel_step(work, log):
        pass


def peel_degree_one(g: Graph) -> tuple[Graph, ReductionLog, list[int]]:
    """Strip leaves until none remain.

    Returns the core, the log, and ``ids`` mapping core index -> vertex of g.
    Degree-0 vertices (including what is left of a tree) stay in the core.
    """
    work = WorkGraph.from_graph(g)
    log = ReductionLog()
    peel_work(work, log)
    core, ids = work.to_graph()
    return core, log, ids


def reduce_work(work: WorkGraph, log: ReductionLog, *, peel: bool, drop: bool,
                max_steps: int | None = None) -> None:
    steps = 0
    while max_steps is None or steps < max_steps:
        if peel and _peel_step(work, log):
            pass
        elif _merge_step(work, log):
            pass
        elif drop and _drop_step(work, log):
            pass
        else:
            return
        steps += 1


def reduce_adjacent_2vertices(g: Graph, max_steps: int | None = None) -> tuple[Graph, ReductionLog, list[int]]:
    """Merge adjacent 2-vertices until none remain (or ``max_steps`` rewrites).

    Each step removes a 2-vertex ``v`` next to a 2-vertex ``u``; when v's
    other neighbour ``w`` is not adjacent to ``u`` the edge ``uw`` is added,
    which leaves every other degree unchanged.
    """
    work = WorkGraph.from_graph(g)
    log = ReductionLog()
    reduce_work(work, log, peel=False, drop=False, max_steps=max_steps)
    reduced, ids = work.to_graph()
    return reduced, log, ids


# -- extension -----------------------------------------------------------------

def _free_classes(work: WorkGraph, coloring: dict[int, int], v: int, seq: PackingSequence) -> list[int]:
    """Classes (1-based) that ``v`` may take given the current colouring."""
    ball = work.ball(v, max(seq))
    out = []
    for c in range(1, seq.k + 1):
        a = seq[c - 1]
        if all(coloring.get(u) != c for u, d in ball.items() if 0 < d <= a):
            out.append(c)
    return out


def _conflicts_near(work, coloring, v, seq, radius):
    """True if some coloured pair inside ball(v, radius) violates its class."""
    for x in work.ball(v, radius):
        cx = coloring.get(x)
        if cx is None:
            continue
        for y, d in work.ball(x, seq[cx - 1]).items():
            if y != x and coloring.get(y) == cx:
                return True
    return False


def local_repair(work: WorkGraph, coloring: dict[int, int], centre: int,
                 seq: PackingSequence, radius: int = 2, budget: int = 10**6) -> bool:
    """Recolour every vertex within ``radius`` of ``centre`` jointly.

    Vertices further away keep their classes.  Solved exactly by the search
    kernel on the ball of radius ``radius + max(seq)``, which contains every
    shortest path that can matter.  Mutates ``coloring`` on success.
    """
    free = set(work.ball(centre, radius))
    ids = sorted(work.ball(centre, radius + max(seq)))
    index = {v: i for i, v in enumerate(ids)}
    sub = Graph(len(ids), [[index[u] for u in work.adj[v] if u in index] for v in ids])
    pins = [-1 if v in free else coloring[v] - 1 for v in ids]
    order = branching_order(sub, [index[v] for v in ids if v in free])
    status, colors, _ = kernels.packing_search(sub.n, all_pairs_distances(sub).flat(), order,
                                               list(seq.values), budget, pins, False)
    if status != kernels.FOUND:
        return False
    for v in free:
        coloring[v] = colors[index[v]] + 1
    return True


def extend_vertex(work: WorkGraph, coloring: dict[int, int], v: int, seq: PackingSequence) -> str:
    """Colour the just-restored vertex ``v``; returns the rule used.

    Order of attempts: a free class (lowest index, 1-classes first since the
    sequence is sorted); the swap that moves a neighbour ``y`` into a
    1-class and gives ``v`` y's old class; joint recolouring of the radius-2
    ball.  Raises :class:`ExtensionStuck` when all three fail.
    """
    clean = not _conflicts_near(work, coloring, v, seq, 2)
    if clean:
        free = _free_classes(work, coloring, v, seq)
        if free:
            coloring[v] = free[0]
            return "direct"
        ones = [c for c in range(1, seq.k + 1) if seq[c - 1] == 1]
        for y in sorted(work.adj[v]):
            old = coloring.get(y)
            if old is None or seq[old - 1] == 1:
                continue
            for c1 in ones:
                if any(coloring.get(z) == c1 for z in work.adj[y]):
                    continue
                coloring[y] = c1
                if old in _free_classes(work, coloring, v, seq) and not _conflicts_near(work, coloring, y, seq, 0):
                    coloring[v] = old
                    return "swap"
                coloring[y] = old
    if local_repair(work, coloring, v, seq):
        return "repair"
    raise ExtensionStuck(f"cannot colour restored vertex {v}")


def extend_coloring(reduced: WorkGraph, coloring: dict[int, int], log: ReductionLog,
                    seq: PackingSequence) -> tuple[WorkGraph, dict[int, int], list[str]]:
    """Undo ``log`` step by step, colouring each restored vertex."""
    work = reduced.copy()
    coloring = dict(coloring)
    rules = []
    for rec in reversed(log.records):
        log.undo(work, rec)
        rules.append(extend_vertex(work, coloring, rec.v, seq))
    return work, coloring, rules


def extend_peel(core_coloring: dict[int, int], log: ReductionLog, core: WorkGraph,
                seq: PackingSequence) -> dict[int, int]:
    """Restore peeled leaves: each takes a 1-class its neighbour does not use."""
    work = core.copy()
    coloring = dict(core_coloring)
    ones = [c for c in range(1, seq.k + 1) if seq[c - 1] == 1]
    for rec in reversed(log.records):
        if not isinstance(rec, Peel):
            raise ValueError("extend_peel only replays peel records")
        log.undo(work, rec)
        choice = next((c for c in ones if coloring.get(rec.u) != c), None)
        if choice is None:
            raise ExtensionStuck(f"no free 1-class for leaf {rec.v}")
        coloring[rec.v] = choice
    return coloring


def extend_2vertex(coloring: dict[int, int], rec, work: WorkGraph, seq: PackingSequence) -> str:
    """Restore the vertex of one log record into ``work`` and colour it."""
    ReductionLog().undo(work, rec)
    return extend_vertex(work, coloring, rec.v, seq)


def work_to_coloring(coloring: dict[int, int], n: int) -> list[int]:
    return [coloring[v] for v in range(n)]

