"""Weighted independent sets driving the (1,1,3,3) partition.

A vertex of an independent set counts ``w1`` if it is a 3-vertex with a
3-neighbour, ``w0`` if it is a 3-vertex without one, and ``wy`` if it is a
2-vertex.  Default weights are 20/14/7 (the decimals 1, 0.7, 0.35 scaled
by 20 so every comparison is exact).  Among maximisers the set with the
fewest complement paths of type P2 wins, then the lexicographically
smallest vertex set.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import gcd

from ..errors import BudgetExceeded, PackingError
from ..graph import Graph

DEFAULT_WEIGHTS = (20, 14, 7)
EXACT_MAX_N = 30


def scaled_weights(alpha, beta) -> tuple[int, int, int]:
    """Integer weights proportional to ``(1, alpha, beta)``."""
    a, b = Fraction(alpha), Fraction(beta)
    den = a.denominator * b.denominator
    w = (den, int(a * den), int(b * den))
    g = gcd(gcd(w[0], w[1]), w[2]) or 1
    return tuple(x // g for x in w)


def vertex_weights(g: Graph, weights=DEFAULT_WEIGHTS) -> list[int]:
    w1, w0, wy = weights
    out = []
    for v in range(g.n):
        d = g.degree(v)
        if d == 3:
            out.append(w1 if any(g.degree(u) == 3 for u in g.adj[v]) else w0)
        elif d == 2:
            out.append(wy)
        else:
            raise PackingError(f"vertex {v} has degree {d}; minimum degree 2 required",
                               "PRECONDITION")
    return out


def count_p2(g: Graph, s: frozenset[int]) -> int:
    """Number of complement components that are a single edge joining a 2- and a 3-vertex."""
    count = 0
    seen = set()
    for v in range(g.n):
        if v in s or v in seen:
            continue
        comp = [v]
        seen.add(v)
        stack = [v]
        while stack:
            x = stack.pop()
            for u in g.adj[x]:
                if u not in s and u not in seen:
                    seen.add(u)
                    comp.append(u)
                    stack.append(u)
        if len(comp) == 2 and sorted(g.degree(x) for x in comp) == [2, 3]:
            count += 1
    return count


@dataclass(frozen=True)
class WeightedIS:
    S: tuple[int, ...]
    X1: tuple[int, ...]
    X0: tuple[int, ...]
    Y: tuple[int, ...]
    phi_scaled: int
    theta: int
    weights: tuple[int, int, int] = DEFAULT_WEIGHTS

    @property
    def members(self) -> frozenset[int]:
        return frozenset(self.S)


def make_wis(g: Graph, s, weights=DEFAULT_WEIGHTS) -> WeightedIS:
    s = frozenset(s)
    x1, x0, y = [], [], []
    for v in sorted(s):
        if g.degree(v) == 3:
            (x1 if any(g.degree(u) == 3 for u in g.adj[v]) else x0).append(v)
        else:
            y.append(v)
    w1, w0, wy = weights
    phi = w1 * len(x1) + w0 * len(x0) + wy * len(y)
    return WeightedIS(tuple(sorted(s)), tuple(x1), tuple(x0), tuple(y), phi,
                      count_p2(g, s), tuple(weights))


def is_independent(g: Graph, s) -> bool:
    s = set(s)
    return all(u not in s for v in s for u in g.adj[v])


def _all_maximisers(g: Graph, w: list[int], node_limit: int) -> tuple[int, list[int]]:
    """Every maximum-weight independent set, as bitmasks."""
    n = g.n
    nbr = [sum(1 << u for u in g.adj[v]) for v in range(n)]
    best = -1
    sols: list[int] = []
    nodes = 0

    def weight_of(mask):
        total = 0
        while mask:
            low = mask & -mask
            total += w[low.bit_length() - 1]
            mask ^= low
        return total

    def rec(cand: int, chosen: int, value: int):
        nonlocal best, sols, nodes
        nodes += 1
        if nodes > node_limit:
            raise BudgetExceeded(f"weighted independent set search exceeded {node_limit} nodes")
        # candidates with no candidate neighbour belong to every maximiser
        forced = 0
        m = cand
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if not nbr[v] & cand:
                forced |= low
            m ^= low
        if forced:
            value += weight_of(forced)
            chosen |= forced
            cand &= ~forced
        if not cand:
            if value > best:
                best, sols = value, [chosen]
            elif value == best:
                sols.append(chosen)
            return
        if value + weight_of(cand) < best:
            return
        # branch on the candidate with most candidate neighbours
        v = max((x for x in range(n) if cand >> x & 1),
                key=lambda x: (bin(nbr[x] & cand).count("1"), -x))
        rec(cand & ~nbr[v] & ~(1 << v), chosen | (1 << v), value + w[v])
        rec(cand & ~(1 << v), chosen, value)

    rec((1 << n) - 1, 0, 0)
    return best, sols


def max_weighted_is(g: Graph, weights=DEFAULT_WEIGHTS, mode: str = "auto",
                    node_limit: int = 5_000_000) -> WeightedIS:
    """Maximum-weight independent set with the θ and lexicographic tie-breaks.

    ``mode`` is ``"exact"``, ``"exchange"`` (local search over the exchange
    moves) or ``"auto"`` (exact up to 30 vertices).
    """
    if mode == "auto":
        mode = "exact" if g.n <= EXACT_MAX_N else "exchange"
    if mode == "exchange":
        return exchange_stable_is(g, weights)
    if mode != "exact":
        raise ValueError(f"unknown mode {mode!r}")
    return optimal_sets(g, weights, node_limit)[0]


def optimal_sets(g: Graph, weights=DEFAULT_WEIGHTS, node_limit: int = 5_000_000) -> list[WeightedIS]:
    """Every set maximising φ and then minimising θ, lexicographically sorted."""
    w = vertex_weights(g, weights)
    _, sols = _all_maximisers(g, w, node_limit)
    ranked = sorted((count_p2(g, s), tuple(sorted(s)))
                    for s in (frozenset(v for v in range(g.n) if m >> v & 1) for m in sols))
    return [make_wis(g, s, weights) for th, s in ranked if th == ranked[0][0]]


# -- exchange moves --------------------------------------------------------------

def exchange_moves(g: Graph, s: frozenset[int]):
    """Candidate rewrites ``S -> (S minus N(A)) + A``.

    ``A`` ranges over independent sets of one to three complement vertices
    pairwise within distance two (the shape of every rewrite used to
    establish the structure of an optimal set).
    """
    comp = [v for v in range(g.n) if v not in s]
    near = {v: set() for v in comp}
    for v in comp:
        for u in g.adj[v]:
            for x in g.adj[u]:
                if x != v and x not in s:
                    near[v].add(x)
    for v in comp:
        yield (v,)
    for v in comp:
        for x in sorted(near[v]):
            if x > v and x not in g.adj[v]:
                yield (v, x)
    seen = set()
    for v in comp:
        for x, y in combinations(sorted(near[v]), 2):
            if y in g.adj[x] or x in g.adj[v] or y in g.adj[v]:
                continue
            a = tuple(sorted((v, x, y)))
            if a not in seen:
                seen.add(a)
                yield a


def apply_move(g: Graph, s: frozenset[int], a) -> frozenset[int]:
    drop = {u for v in a for u in g.adj[v]}
    return frozenset((s - drop) | set(a))


def improving_move(g: Graph, wis: WeightedIS, weights=DEFAULT_WEIGHTS):
    """First move that raises φ, or keeps φ and lowers θ; None if stable."""
    s = wis.members
    for a in exchange_moves(g, s):
        t = apply_move(g, s, a)
        cand = make_wis(g, t, weights)
        if cand.phi_scaled > wis.phi_scaled or (
                cand.phi_scaled == wis.phi_scaled and cand.theta < wis.theta):
            return a, cand
    return None


def exchange_stable_is(g: Graph, weights=DEFAULT_WEIGHTS, start=None) -> WeightedIS:
    w = vertex_weights(g, weights)
    if start is None:
        s: set[int] = set()
        for v in sorted(range(g.n), key=lambda x: (-w[x], x)):
            if not any(u in s for u in g.adj[v]):
                s.add(v)
        start = s
    wis = make_wis(g, start, weights)
    while True:
        step = improving_move(g, wis, weights)
        if step is None:
            return wis
        wis = step[1]
