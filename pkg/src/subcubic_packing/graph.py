"""Immutable simple graphs, hop distances, subdivision and text codecs.

Vertices are the dense indices ``0..n-1``.  All functions here are pure; a
:class:`Graph` never changes after construction, so graphs and distance
matrices may be shared freely between threads and processes.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import GraphError, MalformedGraph6

#: distance between vertices in different components; larger than any n
INF = 1 << 30


class Graph:
    """Simple undirected graph stored as sorted neighbour tuples."""

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Sequence[Sequence[int]]):
        self.n = n
        self.adj = tuple(tuple(sorted(a)) for a in adj)
        self._hash = None

    # -- basic queries ------------------------------------------------
    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(len(a) for a in self.adj)

    @property
    def max_degree(self) -> int:
        return max((len(a) for a in self.adj), default=0)

    @property
    def min_degree(self) -> int:
        return min((len(a) for a in self.adj), default=0)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in self.adj[u] if u < v]

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def is_subcubic(self) -> bool:
        return self.max_degree <= 3

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.n, self.adj))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"

    def validate(self) -> None:
        """Raise GraphError unless the structural invariants hold."""
        if len(self.adj) != self.n:
            raise GraphError("adjacency length differs from n", "EDGE_OUT_OF_RANGE")
        for v, nbrs in enumerate(self.adj):
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"duplicate neighbour at {v}", "DUPLICATE_EDGE")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range", "EDGE_OUT_OF_RANGE")
                if u == v:
                    raise GraphError(f"loop at {v}", "SELF_LOOP")
                if v not in self.adj[u]:
                    raise GraphError(f"asymmetric edge {v}-{u}", "EDGE_OUT_OF_RANGE")

    # -- derived graphs -------------------------------------------------
    def induced(self, vertices: Iterable[int]) -> tuple["Graph", list[int]]:
        """Induced subgraph plus the list mapping new index -> old vertex."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = [[index[u] for u in self.adj[v] if u in index] for v in keep]
        return Graph(len(keep), adj), keep

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            adj[perm[v]] = [perm[u] for u in self.adj[v]]
        return Graph(self.n, adj)

    def components(self) -> list[list[int]]:
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp = [s]
            stack = [s]
            while stack:
                v = stack.pop()
                for u in self.adj[v]:
                    if not seen[u]:
                        seen[u] = True
                        comp.append(u)
                        stack.append(u)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.components()) == 1


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if n < 0:
        raise GraphError("negative vertex count", "EDGE_OUT_OF_RANGE")
    adj: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for n={n}", "EDGE_OUT_OF_RANGE")
        if u == v:
            raise GraphError(f"self loop at {u}", "SELF_LOOP")
        if v in adj[u]:
            raise GraphError(f"duplicate edge ({u},{v})", "DUPLICATE_EDGE")
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, adj)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    return build_graph(g.n, g.edges() + [(u, v)])


def delete_vertex(g: Graph, x: int) -> Graph:
    """Remove ``x``; vertices above ``x`` shift down by one."""
    sub, _ = g.induced(v for v in range(g.n) if v != x)
    return sub


def insert_vertex(g: Graph, x: int, nbrs: Iterable[int]) -> Graph:
    """Inverse of :func:`delete_vertex`: ``nbrs`` use the *new* numbering."""
    shift = [v if v < x else v + 1 for v in range(g.n)]
    edges = [(shift[u], shift[v]) for u, v in g.edges()]
    edges += [(x, u) for u in nbrs]
    return build_graph(g.n + 1, edges)


# -- distances ----------------------------------------------------------

class DistanceMatrix:
    """Hop distances; unreachable pairs hold :data:`INF`."""

    __slots__ = ("n", "rows")

    def __init__(self, rows: Sequence[Sequence[int]]):
        self.rows = tuple(tuple(r) for r in rows)
        self.n = len(self.rows)

    def __getitem__(self, key):
        u, v = key
        return self.rows[u][v]

    def row(self, v: int) -> tuple[int, ...]:
        return self.rows[v]

    def ball(self, v: int, radius: int) -> list[int]:
        """Vertices other than ``v`` within ``radius`` hops."""
        r = self.rows[v]
        return [u for u in range(self.n) if u != v and r[u] <= radius]

    def flat(self) -> list[int]:
        return [d for r in self.rows for d in r]

    def eccentricity(self, v: int) -> int:
        return max(self.rows[v], default=0)


def bfs(g: Graph, source: int) -> list[int]:
    dist = [INF] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        v = queue.popleft()
        d = dist[v] + 1
        for u in g.adj[v]:
            if dist[u] == INF:
                dist[u] = d
                queue.append(u)
    return dist


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    return DistanceMatrix([bfs(g, s) for s in range(g.n)])


# -- derived metrics ------------------------------------------------------

def subdivide(g: Graph) -> Graph:
    """Replace every edge by a path of length two.

    Edge number ``i`` (in :meth:`Graph.edges` order) gets the new vertex
    ``g.n + i``.
    """
    edges = []
    for i, (u, v) in enumerate(g.edges()):
        w = g.n + i
        edges.append((u, w))
        edges.append((w, v))
    return build_graph(g.n + g.m, edges)


def average_degree(g: Graph) -> Fraction:
    """Exact ``2|E|/n``.  Note: Fraction reduces, so 22/8 compares equal to 11/4."""
    if g.n == 0:
        raise GraphError("average degree of the empty graph", "EMPTY_GRAPH")
    return Fraction(2 * g.m, g.n)


# -- graph6 ---------------------------------------------------------------

def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    return "~~" + "".join(chr(((n >> s) & 63) + 63) for s in (30, 24, 18, 12, 6, 0))


def emit_graph6(g: Graph) -> str:
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            bits.append(1 if u in row else 0)
    bits += [0] * (-len(bits) % 6)
    body = []
    for i in range(0, len(bits), 6):
        x = 0
        for b in bits[i:i + 6]:
            x = (x << 1) | b
        body.append(chr(x + 63))
    return _encode_n(g.n) + "".join(body)


def parse_graph6(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise MalformedGraph6("empty graph6 line")
    codes = [ord(c) - 63 for c in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise MalformedGraph6(f"non-graph6 byte in {text!r}")
    if codes[0] < 63:
        n, pos = codes[0], 1
    elif len(codes) >= 4 and codes[1] < 63:
        n = (codes[1] << 12) | (codes[2] << 6) | codes[3]
        pos = 4
    elif len(codes) >= 8:
        n = 0
        for c in codes[2:8]:
            n = (n << 6) | c
        pos = 8
    else:
        raise MalformedGraph6(f"truncated size field in {text!r}")
    nbits = n * (n - 1) // 2
    body = codes[pos:]
    if len(body) != (nbits + 5) // 6:
        raise MalformedGraph6(f"expected {(nbits + 5) // 6} data bytes, got {len(body)}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            if (body[k // 6] >> (5 - k % 6)) & 1:
                edges.append((u, v))
            k += 1
    if nbits % 6 and body[-1] & ((1 << (6 - nbits % 6)) - 1):
        raise MalformedGraph6("nonzero padding bits")
    return build_graph(n, edges)


# -- edge-list text ("n m" header, then one "u v" pair per line) ------------

def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"] + [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = [ln.split() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows or len(rows[0]) != 2:
        raise GraphError("edge list needs an 'n m' header", "EDGE_OUT_OF_RANGE")
    n, m = int(rows[0][0]), int(rows[0][1])
    edges = [(int(a), int(b)) for a, b in rows[1:]]
    if len(edges) != m:
        raise GraphError(f"header says {m} edges, found {len(edges)}", "EDGE_OUT_OF_RANGE")
    return build_graph(n, edges)


# -- small named graphs used throughout the tests --------------------------

def cycle(n: int) -> Graph:
    return build_graph(n, [(i, (i + 1) % n) for i in range(n)])


def path(n: int) -> Graph:
    return build_graph(n, [(i, i + 1) for i in range(n - 1)])


def complete(n: int) -> Graph:
    return build_graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def disjoint_union(*graphs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [(u + offset, v + offset) for u, v in g.edges()]
        offset += g.n
    return build_graph(offset, edges)
