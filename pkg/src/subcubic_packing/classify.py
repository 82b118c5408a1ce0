"""Saturation classes of subcubic graphs.

A 3-vertex is *heavy* when all three neighbours are 3-vertices.  A graph is
``i``-saturated when every 3-vertex has at most ``i`` neighbours of degree
three, and ``(3, i)``-saturated when every heavy vertex has at most ``i``
heavy neighbours.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import NotSubcubic, PackingError
from .graph import Graph


@dataclass(frozen=True)
class SaturationProfile:
    degrees: tuple[int, ...]
    heavy: tuple[bool, ...]
    sat_level: int
    heavy_sat_level: int

    @property
    def heavy_vertices(self) -> list[int]:
        return [v for v, h in enumerate(self.heavy) if h]

    def as_dict(self) -> dict:
        return {
            "n": len(self.degrees),
            "degrees": list(self.degrees),
            "heavy": self.heavy_vertices,
            "sat_level": self.sat_level,
            "heavy_sat_level": self.heavy_sat_level,
            "cubic": bool(self.degrees) and all(d == 3 for d in self.degrees),
        }


def heavy_flags(g: Graph) -> tuple[bool, ...]:
    return tuple(
        g.degree(v) == 3 and all(g.degree(u) == 3 for u in g.adj[v]) for v in range(g.n)
    )


def profile(g: Graph) -> SaturationProfile:
    if not g.is_subcubic():
        raise NotSubcubic(f"maximum degree {g.max_degree} > 3")
    deg = g.degrees
    heavy = heavy_flags(g)
    sat = max((sum(deg[u] == 3 for u in g.adj[v]) for v in range(g.n) if deg[v] == 3), default=0)
    hsat = max((sum(heavy[u] for u in g.adj[v]) for v in range(g.n) if heavy[v]), default=0)
    return SaturationProfile(deg, heavy, sat, hsat)


@dataclass(frozen=True)
class ClassTag:
    kind: str  # "sat" | "hsat" | "cubic" | "any"
    level: int = 3

    def __str__(self):
        return f"{self.kind}{self.level}" if self.kind in ("sat", "hsat") else self.kind


_TAG_RE = re.compile(r"^(sat|hsat)([0-3])$")


def parse_tag(text: str) -> ClassTag:
    """CLI class tags: ``sat0..sat3``, ``hsat0..hsat3``, ``cubic``, ``any``."""
    t = text.strip().lower()
    if t in ("any", "subcubic"):
        return ClassTag("any")
    if t == "cubic":
        return ClassTag("cubic")
    m = _TAG_RE.match(t)
    if not m:
        raise PackingError(f"unknown class tag {text!r}", "BAD_TAG")
    return ClassTag(m.group(1), int(m.group(2)))


def in_class(g: Graph, tag: ClassTag | str) -> bool:
    if isinstance(tag, str):
        tag = parse_tag(tag)
    if not g.is_subcubic():
        return False
    if tag.kind == "any":
        return True
    if tag.kind == "cubic":
        return g.n > 0 and all(d == 3 for d in g.degrees)
    p = profile(g)
    if tag.kind == "sat":
        return p.sat_level <= tag.level
    return p.heavy_sat_level <= tag.level
