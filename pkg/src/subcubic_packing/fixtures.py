"""Named graphs from the literature on packing colourings of subcubic graphs.

Each figure graph is frozen as a vertex-name list (index = position in the
list) plus an edge list over those names.  Stored colourings use the
class numbering of their sequence, e.g. for ``(1,2,2,2,2)`` class 1 is the
1-class and classes 2..5 are the 2-classes ``2_1..2_4``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .classify import profile
from .errors import UnknownFixture
from .graph import Graph, build_graph, complete, subdivide
from .solver import PackingSequence, parse_sequence


@dataclass(frozen=True)
class FixtureEntry:
    name: str
    graph: Graph
    names: tuple[str, ...]
    facts: dict
    provenance: str
    coloring: Optional[tuple[int, ...]] = None
    sequence: Optional[PackingSequence] = None
    # sequences for which the graph is known to be infeasible
    negative: tuple[str, ...] = field(default_factory=tuple)

    def index(self, name: str) -> int:
        return self.names.index(name)


def _named(names: str, edges: str) -> tuple[Graph, tuple[str, ...]]:
    vs = tuple(names.split())
    idx = {v: i for i, v in enumerate(vs)}
    pairs = [e.split("-") for e in edges.split()]
    return build_graph(len(vs), [(idx[a], idx[b]) for a, b in pairs]), vs


def _petersen():
    # outer 5-cycle o0..o4, inner pentagram i0..i4, spokes oj-ij
    names = " ".join([f"o{j}" for j in range(5)] + [f"i{j}" for j in range(5)])
    edges = [f"o{j}-o{(j + 1) % 5}" for j in range(5)]
    edges += [f"i{j}-i{(j + 2) % 5}" for j in range(5)]
    edges += [f"o{j}-i{j}" for j in range(5)]
    return _named(names, " ".join(edges))


def _two_k3_star():
    # triangles a1a2a3 and b1b2b3, a3 and b3 joined through m
    return _named("a1 a2 a3 m b3 b1 b2", "a1-a2 a2-a3 a1-a3 a3-m m-b3 b3-b1 b1-b2 b2-b3")


def _sk4():
    g = subdivide(complete(4))
    names = tuple(f"k{v}" for v in range(4)) + tuple(
        f"s{u}{v}" for u, v in complete(4).edges())
    return g, names


def _c12_three_chords():
    # 12-cycle a..l with chords c-e, g-i, a-k (three triangles)
    return _named("a b c d e f g h i j k l",
                  "a-b b-c c-d d-e e-f f-g g-h h-i i-j j-k k-l l-a c-e g-i a-k")


def _three_triangle_gadget():
    return _named(
        "s t r v w u x y z c' b' h'",
        "s-t t-r r-s v-w w-u u-v x-y y-z z-x s-w t-z y-b' b'-v r-h' h'-c' c'-u x-c'")


def _c8_two_chords():
    return _named("a b c d e f g h", "a-b b-c c-d d-e e-f f-g g-h h-a a-e c-g")


def _hex_wheel_left():
    # 6-cycle x1 x3 x6 x4 x5 x2, each y joins an opposite pair
    return _named("x1 x2 x3 x4 x5 x6 y1 y2 y3",
                  "x1-x3 x3-x6 x6-x4 x4-x5 x5-x2 x2-x1 x1-y1 y1-x4 x3-y3 y3-x5 x6-y2 y2-x2")


def _thirteen_vertex_right():
    # p, q, r, s are the four unnamed bottom-row vertices (neighbourhoods x2x3x6, x2x4x5, x3x5, x4x6)
    return _named(
        "x1 x2 x3 x4 x5 x6 y1 y2 y3 p q r s",
        "y1-x1 x1-y2 x1-y3 y1-x2 x3-y2 y2-x4 x6-y3 y3-x5 "
        "x2-p p-x3 p-x6 x2-q q-x4 q-x5 x3-r r-x5 x4-s s-x6")


def _prism_subdivided():
    # triangles a1a2a3, b1b2b3, rungs ai-bi; a1a2 and b2b3 subdivided by s and t
    return _named("a1 a2 a3 b1 b2 b3 s t",
                  "a1-s s-a2 a2-a3 a1-a3 b1-b2 b2-t t-b3 b1-b3 a1-b1 a2-b2 a3-b3")


def _coloring(names, labels: dict[str, int]) -> tuple[int, ...]:
    return tuple(labels[v] for v in names)


def _build(name: str) -> FixtureEntry:
    if name == "petersen":
        g, names = _petersen()
        return _entry(name, g, names, "the Petersen graph",
                      negative=("1,1,2,3", "1,2^5"))
    if name == "two_k3_star":
        g, names = _two_k3_star()
        return _entry(name, g, names, "two K3 joined by a path of length two",
                      negative=("1,1,4",))
    if name == "sk4":
        g, names = _sk4()
        return _entry(name, g, names, "subdivision S(K4)", negative=("1,2,2",))
    if name == "c12_three_chords":
        g, names = _c12_three_chords()
        return _entry(name, g, names, "non-(1,1,4,4) 1-saturated figure graph",
                      negative=("1,1,4,4",))
    if name == "three_triangle_gadget":
        g, names = _three_triangle_gadget()
        return _entry(name, g, names, "non-(1,1,3,3) (3,2)-saturated figure graph",
                      negative=("1,1,3,3",))
    if name == "c8_two_chords":
        g, names = _c8_two_chords()
        return _entry(name, g, names, "1-saturated non-(1,2^3) figure graph",
                      negative=("1,2,2,2",))
    if name == "hex_wheel_left":
        g, names = _hex_wheel_left()
        # 1 -> class 1, 2_i -> class i+1
        labels = {"x1": 1, "x5": 1, "x6": 1, "x3": 2, "x4": 3, "x2": 4,
                  "y1": 5, "y2": 5, "y3": 5}
        return _entry(name, g, names, "six non-heavy vertices, left configuration",
                      coloring=_coloring(names, labels), sequence="1,2^4",
                      negative=("1,2,2,2",))
    if name == "thirteen_vertex_right":
        g, names = _thirteen_vertex_right()
        labels = {"x1": 1, "y1": 2, "y2": 3, "y3": 4, "x2": 3, "x3": 1, "x4": 4,
                  "x5": 5, "x6": 1, "p": 5, "q": 1, "r": 2, "s": 2}
        return _entry(name, g, names, "six non-heavy vertices, right configuration",
                      coloring=_coloring(names, labels), sequence="1,2^4",
                      negative=("1,2,2,2",))
    if name == "prism_subdivided":
        g, names = _prism_subdivided()
        return _entry(name, g, names, "triangular prism with two edges subdivided")
    raise UnknownFixture(f"no fixture named {name!r}")


def _entry(name, g, names, provenance, coloring=None, sequence=None, negative=()):
    p = profile(g)
    facts = p.as_dict()
    facts["m"] = g.m
    return FixtureEntry(name, g, names, facts, provenance, coloring,
                        parse_sequence(sequence) if sequence else None, tuple(negative))


FIXTURE_NAMES = (
    "petersen", "two_k3_star", "sk4", "c12_three_chords", "three_triangle_gadget",
    "c8_two_chords", "hex_wheel_left", "thirteen_vertex_right", "prism_subdivided",
)

_cache: dict[str, FixtureEntry] = {}


def fixture(name: str) -> FixtureEntry:
    if name not in _cache:
        _cache[name] = _build(name)
    return _cache[name]


def all_fixtures() -> list[FixtureEntry]:
    return [fixture(n) for n in FIXTURE_NAMES]
