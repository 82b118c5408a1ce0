import networkx as nx
import pytest
from networkx.generators.atlas import graph_atlas_g

from subcubic_packing.canonical import canonical_code
from subcubic_packing.errors import MalformedGraph6, PackingError, TooLarge
from subcubic_packing.enumeration import enumerate_subcubic, enumerate_upto, ingest_graph6
from subcubic_packing.graph import emit_graph6


def _atlas_counts():
    # independent oracle: the atlas lists every graph on up to 7 vertices once
    counts = {}
    for h in graph_atlas_g():
        n = h.number_of_nodes()
        if n and nx.is_connected(h) and max(d for _, d in h.degree()) <= 3:
            counts[n] = counts.get(n, 0) + 1
    return counts


def test_counts_match_atlas():
    atlas = _atlas_counts()
    assert [atlas[n] for n in range(1, 8)] == [1, 1, 2, 6, 10, 29, 64]
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_subcubic(n)) == atlas[n]


def test_n8_count():
    assert sum(1 for _ in enumerate_subcubic(8)) == 194


def test_representatives_distinct_connected_subcubic():
    graphs = list(enumerate_upto(8))
    codes = {canonical_code(g) for g in graphs}
    assert len(codes) == len(graphs)
    for g in graphs:
        assert g.is_connected() and g.max_degree <= 3


def test_deterministic_order():
    a = [emit_graph6(g) for g in enumerate_subcubic(6)]
    assert a == sorted(a)
    assert a == [emit_graph6(g) for g in enumerate_subcubic(6)]


def test_n3():
    names = {g.m for g in enumerate_subcubic(3)}
    assert names == {2, 3}


def test_guard():
    with pytest.raises(TooLarge) as info:
        list(enumerate_subcubic(13))
    assert info.value.code == "TOO_LARGE"
    assert list(enumerate_subcubic(0)) == []


def test_ingest(tmp_path):
    f = tmp_path / "c.g6"
    f.write_text("C~\n\nD??\n")
    assert [g.n for g in ingest_graph6(f)] == [4, 5]


def test_ingest_malformed(tmp_path):
    f = tmp_path / "bad.g6"
    f.write_text("C~\nC~~\n")
    with pytest.raises(MalformedGraph6, match=":2:"):
        list(ingest_graph6(f))


def test_ingest_missing(tmp_path):
    with pytest.raises(PackingError) as info:
        list(ingest_graph6(tmp_path / "none.g6"))
    assert info.value.code == "IO"
