"""Canonical labelling by partition refinement and individualisation.

The search tree is explored completely (no automorphism pruning); this is
cheap at the sizes used here (connected subcubic graphs, n around a dozen)
and keeps the code auditable.
"""

from __future__ import annotations

from itertools import permutations

from .graph import Graph, emit_graph6


def _refine(g: Graph, cells: list[list[int]]) -> list[list[int]]:
    n = g.n
    adj = g.adj
    cell_of = [0] * n
    while True:
        for i, c in enumerate(cells):
            for v in c:
                cell_of[v] = i
        out = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            sig = {v: tuple(sorted(cell_of[u] for u in adj[v])) for v in c}
            keys = sorted(set(sig.values()))
            if len(keys) == 1:
                out.append(c)
                continue
            changed = True
            for key in keys:
                out.append([v for v in c if sig[v] == key])
        cells = out
        if not changed:
            return cells


def _code(g: Graph, label: list[int]) -> int:
    code = 0
    for v in range(g.n):
        lv = label[v]
        for u in g.adj[v]:
            lu = label[u]
            if lu < lv:
                code |= 1 << (lv * (lv - 1) // 2 + lu)
    return code


def canonical_labeling(g: Graph) -> tuple[int, list[int]]:
    """Return ``(code, label)`` where ``label[v]`` is v's canonical index.

    Isomorphic graphs get identical codes.  The code is the adjacency
    upper triangle read as an integer, maximised over all leaves of the
    refinement tree.
    """
    if g.n == 0:
        return 0, []
    by_degree: dict[int, list[int]] = {}
    for v in range(g.n):
        by_degree.setdefault(g.degree(v), []).append(v)
    root = _refine(g, [by_degree[d] for d in sorted(by_degree)])

    best_code = -1
    best_label: list[int] = []
    stack = [root]
    while stack:
        cells = stack.pop()
        target = next((i for i, c in enumerate(cells) if len(c) > 1), None)
        if target is None:
            label = [0] * g.n
            for i, c in enumerate(cells):
                label[c[0]] = i
            code = _code(g, label)
            if code > best_code:
                best_code, best_label = code, label
            continue
        cell = cells[target]
        for v in reversed(cell):
            rest = [u for u in cell if u != v]
            stack.append(_refine(g, cells[:target] + [[v], rest] + cells[target + 1:]))
    return best_code, best_label


def canonical_form(g: Graph) -> Graph:
    _, label = canonical_labeling(g)
    return g.relabel(label)


def canonical_code(g: Graph) -> bytes:
    """graph6 bytes of the canonical form; equal iff isomorphic."""
    return emit_graph6(canonical_form(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.m != h.m or sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_labeling(g)[0] == canonical_labeling(h)[0]


def find_isomorphism(g: Graph, h: Graph) -> list[int] | None:
    """A list ``f`` with ``f[v]`` in h for each v in g, or None."""
    if g.n != h.n or g.m != h.m:
        return None
    cg, lg = canonical_labeling(g)
    ch, lh = canonical_labeling(h)
    if cg != ch:
        return None
    inv_h = [0] * h.n
    for v, lab in enumerate(lh):
        inv_h[lab] = v
    return [inv_h[lg[v]] for v in range(g.n)]


def brute_force_code(g: Graph) -> bytes:
    """Canonical code by trying every permutation.  Test oracle only (n <= 8)."""
    best = None
    for perm in permutations(range(g.n)):
        s = emit_graph6(g.relabel(perm))
        if best is None or s > best:
            best = s
    return (best or emit_graph6(g)).encode("ascii")
