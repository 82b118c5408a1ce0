"""Exact S-packing colourability: verifier, backtracking decider, brute force.

Colourings are sequences indexed by vertex holding a class number in
``1..k`` (``None`` marks an uncoloured vertex in a partial colouring).
Class ``i`` with value ``a_i`` requires its members to be pairwise at
distance at least ``a_i + 1``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Optional, Sequence

import numpy as np

from . import kernels
from .errors import ColoringError, SequenceError, TooLarge
from .graph import DistanceMatrix, Graph, all_pairs_distances

DEFAULT_BUDGET = 10**8

Coloring = Sequence[Optional[int]]


@dataclass(frozen=True)
class PackingSequence:
    values: tuple[int, ...]

    def __post_init__(self):
        if not self.values:
            raise SequenceError("empty sequence", "EMPTY")
        if any(a < 1 for a in self.values):
            raise SequenceError(f"non-positive entry in {self.values}", "NONPOSITIVE")
        if any(b < a for a, b in zip(self.values, self.values[1:])):
            raise SequenceError(f"{self.values} is not non-decreasing", "NOT_NONDECREASING")

    @property
    def k(self) -> int:
        return len(self.values)

    def __len__(self):
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __iter__(self):
        return iter(self.values)

    def __str__(self):
        return ",".join(map(str, self.values))

    def compact(self) -> str:
        """Exponent notation, e.g. ``1,2^5``."""
        parts = []
        i = 0
        while i < len(self.values):
            j = i
            while j < len(self.values) and self.values[j] == self.values[i]:
                j += 1
            parts.append(str(self.values[i]) + (f"^{j - i}" if j - i > 1 else ""))
            i = j
        return ",".join(parts)


_TERM = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+)\s*)?$")


def parse_sequence(text: str | Sequence[int] | PackingSequence) -> PackingSequence:
    """Parse ``"1,1,3,3"`` or ``"1,2^5"`` (also accepts ``(1,2^5)`` and ints)."""
    if isinstance(text, PackingSequence):
        return text
    if not isinstance(text, str):
        return PackingSequence(tuple(int(a) for a in text))
    body = text.strip().strip("()[]")
    if not body:
        raise SequenceError("empty sequence", "EMPTY")
    values: list[int] = []
    for term in body.split(","):
        m = _TERM.match(term)
        if not m:
            raise SequenceError(f"cannot parse term {term!r}", "NONPOSITIVE")
        reps = int(m.group(2)) if m.group(2) else 1
        values += [int(m.group(1))] * reps
    return PackingSequence(tuple(values))


# -- verification ---------------------------------------------------------

@dataclass(frozen=True)
class Violation:
    x: int
    y: int
    cls: int
    dist: int


def _check_classes(seq: PackingSequence, coloring: Coloring, n: int, partial: bool):
    if len(coloring) != n:
        raise ColoringError(f"colouring has {len(coloring)} entries for {n} vertices",
                            "PARTIAL_COLORING")
    for v, c in enumerate(coloring):
        if c is None:
            if not partial:
                raise ColoringError(f"vertex {v} is uncoloured", "PARTIAL_COLORING")
        elif not 1 <= c <= seq.k:
            raise ColoringError(f"vertex {v} has class {c} outside 1..{seq.k}",
                                "CLASS_OUT_OF_RANGE")


def violations(g: Graph, seq: PackingSequence, coloring: Coloring,
               dist: DistanceMatrix | None = None, partial: bool = False) -> list[Violation]:
    """All same-class pairs closer than their class allows."""
    seq = parse_sequence(seq)
    _check_classes(seq, coloring, g.n, partial)
    dist = dist or all_pairs_distances(g)
    out = []
    members: dict[int, list[int]] = {}
    for v, c in enumerate(coloring):
        if c is not None:
            members.setdefault(c, []).append(v)
    for c in sorted(members):
        vs = members[c]
        a = seq[c - 1]
        for i, x in enumerate(vs):
            row = dist.rows[x]
            for y in vs[i + 1:]:
                if row[y] <= a:
                    out.append(Violation(x, y, c, row[y]))
    return out


def verify_coloring(g: Graph, seq, coloring: Coloring, dist: DistanceMatrix | None = None) -> list[Violation]:
    """Empty list iff ``coloring`` is a valid total S-packing colouring."""
    return violations(g, seq, coloring, dist, partial=False)


def verify_partial(g: Graph, seq, coloring: Coloring, dist: DistanceMatrix | None = None) -> list[Violation]:
    return violations(g, seq, coloring, dist, partial=True)


# -- exact search -----------------------------------------------------------

@dataclass
class ColorResult:
    status: str  # "feasible" | "infeasible" | "budget_exhausted"
    coloring: Optional[list[int]] = None
    nodes: int = 0

    @property
    def feasible(self) -> bool:
        return self.status == "feasible"

    @property
    def infeasible(self) -> bool:
        return self.status == "infeasible"


def branching_order(g: Graph, vertices: Sequence[int] | None = None) -> list[int]:
    vs = range(g.n) if vertices is None else vertices
    return sorted(vs, key=lambda v: (-g.degree(v), v))


def search_component(g: Graph, seq: PackingSequence, budget: int,
                     dist: DistanceMatrix | None = None,
                     fixed: Sequence[Optional[int]] | None = None) -> ColorResult:
    """Run the kernel on one graph without splitting into components.

    ``fixed`` pins some vertices (1-based classes); symmetry breaking is
    switched off in that case because pinned classes are distinguishable.
    """
    dist = dist or all_pairs_distances(g)
    pins = None
    free = list(range(g.n))
    if fixed is not None and any(c is not None for c in fixed):
        pins = [-1 if c is None else c - 1 for c in fixed]
        free = [v for v in range(g.n) if fixed[v] is None]
    status, colors, nodes = kernels.packing_search(
        g.n, dist.flat(), branching_order(g, free), list(seq.values), budget,
        pins, pins is None)
    if status == kernels.FOUND:
        return ColorResult("feasible", [c + 1 for c in colors], nodes)
    if status == kernels.EXHAUSTED:
        return ColorResult("infeasible", None, nodes)
    return ColorResult("budget_exhausted", None, nodes)


def decide_colorable(g: Graph, seq, budget: int = DEFAULT_BUDGET) -> ColorResult:
    """Decide S-packing colourability exactly.

    Components are solved independently: vertices in different components
    are at infinite distance, so class usage combines freely.
    """
    seq = parse_sequence(seq)
    coloring = [0] * g.n
    nodes = 0
    for comp in g.components():
        sub, back = g.induced(comp)
        res = search_component(sub, seq, budget - nodes)
        nodes += res.nodes
        if not res.feasible:
            return ColorResult(res.status, None, nodes)
        for i, v in enumerate(back):
            coloring[v] = res.coloring[i]
    return ColorResult("feasible", coloring, nodes)


# -- brute-force oracle -----------------------------------------------------

BRUTE_FORCE_LIMIT = 10**8


def brute_force_colorable(g: Graph, seq) -> bool:
    """Try every total assignment (vectorised, in chunks).  Ground truth."""
    seq = parse_sequence(seq)
    k, n = seq.k, g.n
    if k**n > BRUTE_FORCE_LIMIT:
        raise TooLarge(f"{k}^{n} assignments exceed {BRUTE_FORCE_LIMIT}")
    if n == 0:
        return True
    dist = all_pairs_distances(g)
    # conflicting pairs per class: same class forbidden when dist <= a_c
    pairs = {c: [(x, y) for x in range(n) for y in range(x + 1, n) if dist[x, y] <= seq[c]]
             for c in range(k)}
    tail = min(n, 10)
    head = n - tail
    tail_grid = np.indices((k,) * tail).reshape(tail, -1).T  # k^tail x tail
    for prefix_index in range(k**head):
        prefix = []
        p = prefix_index
        for _ in range(head):
            prefix.append(p % k)
            p //= k
        cols = [np.full(len(tail_grid), c) for c in prefix] + [tail_grid[:, j] for j in range(tail)]
        ok = np.ones(len(tail_grid), dtype=bool)
        for c, plist in pairs.items():
            for x, y in plist:
                ok &= ~((cols[x] == c) & (cols[y] == c))
        if ok.any():
            return True
    return False


# -- certificates -------------------------------------------------------------

def format_certificate(coloring: Coloring) -> str:
    return ",".join(f"{v}:{c}" for v, c in enumerate(coloring))


def parse_certificate(text: str, n: int | None = None) -> list[Optional[int]]:
    entries = {}
    for part in text.replace("\n", ",").split(","):
        part = part.strip()
        if not part:
            continue
        v, c = part.split(":")
        entries[int(v)] = int(c)
    size = n if n is not None else (max(entries) + 1 if entries else 0)
    return [entries.get(v) for v in range(size)]
