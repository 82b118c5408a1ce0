import pytest

from subcubic_packing.classify import heavy_flags, in_class, parse_tag, profile
from subcubic_packing.errors import NotSubcubic, PackingError
from subcubic_packing.fixtures import fixture
from subcubic_packing.graph import build_graph, complete, cycle

from conftest import graphs_upto


def _sat_level(g):
    # direct restatement: largest number of 3-neighbours of a 3-vertex
    best = 0
    for v in range(g.n):
        if len(g.adj[v]) == 3:
            best = max(best, sum(len(g.adj[u]) == 3 for u in g.adj[v]))
    return best


def _heavy_level(g):
    heavy = {v for v in range(g.n)
             if len(g.adj[v]) == 3 and all(len(g.adj[u]) == 3 for u in g.adj[v])}
    return max((len(heavy & set(g.adj[v])) for v in heavy), default=0)


def test_exhaustive_small_graphs():
    for g in graphs_upto(8):
        p = profile(g)
        assert p.sat_level == _sat_level(g)
        assert p.heavy_sat_level == _heavy_level(g)
        assert p.heavy_sat_level <= p.sat_level
        for i in range(4):
            assert in_class(g, f"sat{i}") == (p.sat_level <= i)
            assert in_class(g, f"hsat{i}") == (p.heavy_sat_level <= i)


def test_saturation_nests():
    for g in graphs_upto(8):
        for i in range(3):
            if in_class(g, f"sat{i}"):
                assert in_class(g, f"sat{i + 1}")
            if in_class(g, f"sat{i}"):
                assert in_class(g, f"hsat{i}")


def test_k4_heavy():
    p = profile(complete(4))
    assert all(p.heavy) and p.sat_level == 3 and p.heavy_sat_level == 3
    assert in_class(complete(4), "cubic")


def test_cycle_has_no_3_vertices():
    p = profile(cycle(7))
    assert (p.sat_level, p.heavy_sat_level, p.heavy_vertices) == (0, 0, [])
    assert not in_class(cycle(7), "cubic")


def test_petersen():
    p = profile(fixture("petersen").graph)
    assert p.sat_level == 3 and p.heavy_sat_level == 3


def test_heavy_flags_star():
    g = build_graph(4, [(0, 1), (0, 2), (0, 3)])
    assert heavy_flags(g) == (False,) * 4


def test_not_subcubic():
    k5 = complete(5)
    with pytest.raises(NotSubcubic):
        profile(k5)
    assert not in_class(k5, "any")


@pytest.mark.parametrize("bad", ["sat4", "heavy", ""])
def test_bad_tag(bad):
    with pytest.raises(PackingError):
        parse_tag(bad)


def test_tag_roundtrip():
    for t in ["sat0", "hsat3", "cubic", "any"]:
        assert str(parse_tag(t)) == t
