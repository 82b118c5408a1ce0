"""Connected subcubic graphs up to isomorphism, and graph6 corpus ingestion.

Generation grows graphs one vertex at a time: every connected graph has a
vertex whose removal leaves it connected (a leaf of a spanning tree), so
attaching a new vertex to 1..3 vertices of degree < 3 in each connected
graph on ``n - 1`` vertices reaches every connected subcubic graph on
``n`` vertices.  Duplicates are discarded by canonical code.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator

from .canonical import canonical_form
from .errors import MalformedGraph6, PackingError, TooLarge
from .graph import Graph, build_graph, emit_graph6, parse_graph6

MAX_N = 12


@lru_cache(maxsize=None)
def _level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph(1, [[]]),)
    seen: dict[str, Graph] = {}
    for parent in _level(n - 1):
        open_ = [v for v in range(parent.n) if parent.degree(v) < 3]
        base = parent.edges()
        new = parent.n
        for r in (1, 2, 3):
            for nbrs in combinations(open_, r):
                child = build_graph(n, base + [(u, new) for u in nbrs])
                canon = canonical_form(child)
                key = emit_graph6(canon)
                if key not in seen:
                    seen[key] = canon
    return tuple(seen[k] for k in sorted(seen))


def enumerate_subcubic(n: int, limit: int = MAX_N) -> Iterator[Graph]:
    """Canonical representatives of connected graphs with max degree <= 3.

    Ordered by canonical graph6 string; deterministic.
    """
    if n < 1:
        return iter(())
    if n > limit:
        raise TooLarge(f"enumeration guard: n={n} > {limit}")
    return iter(_level(n))


def enumerate_upto(nmax: int, nmin: int = 1) -> Iterator[Graph]:
    for n in range(nmin, nmax + 1):
        yield from enumerate_subcubic(n)


def ingest_graph6(path: str | Path) -> Iterator[Graph]:
    """Yield graphs from a graph6 file, one per line (blank lines skipped)."""
    try:
        fh = open(path, "r", encoding="ascii")
    except OSError as exc:
        raise PackingError(str(exc), "IO") from exc
    with fh:
        for lineno, line in enumerate(fh, 1):
            if not line.strip():
                continue
            try:
                yield parse_graph6(line)
            except MalformedGraph6 as exc:
                raise MalformedGraph6(f"{path}:{lineno}: {exc}") from exc
