from itertools import combinations, product

import pytest

from subcubic_packing.classify import in_class
from subcubic_packing.constructive.partition import (best_bad_set, decompose_paths, make_bad_set,
                                                      partition_1133, run_partition_1133, siblings)
from subcubic_packing.constructive.reductions import (ReductionLog, WorkGraph, extend_coloring,
                                                       extend_peel, peel_degree_one,
                                                       reduce_adjacent_2vertices, reduce_work)
from subcubic_packing.constructive.twos import (color_1sat_12e4, color_30sat_12e5, run_1sat_12e4,
                                                 run_30sat_12e5)
from subcubic_packing.constructive.weighted_is import (apply_move, count_p2, exchange_moves,
                                                        exchange_stable_is, is_independent,
                                                        make_wis, max_weighted_is, optimal_sets,
                                                        scaled_weights, vertex_weights)
from subcubic_packing.canonical import is_isomorphic
from subcubic_packing.errors import ConstructionFailed, NotInClass, PackingError, StructureViolation
from subcubic_packing.fixtures import fixture
from subcubic_packing.graph import build_graph, complete, cycle, parse_graph6, path
from subcubic_packing.solver import decide_colorable, parse_sequence, verify_coloring

from conftest import graphs_upto


def _core_graphs(nmax, tag="sat1"):
    return [g for g in graphs_upto(nmax) if g.min_degree >= 2 and in_class(g, tag)]


# -- reductions ------------------------------------------------------------------

class TestReductions:
    def test_p4_peels_and_restores(self):
        core, log, ids = peel_degree_one(path(4))
        assert core.n == 1 and len(log) == 3
        work = WorkGraph({ids[0]: set()})
        assert is_isomorphic(log.replay(work).to_graph()[0], path(4))

    def test_tree_fully_peeled(self):
        tree = build_graph(7, [(0, 1), (0, 2), (0, 3), (1, 4), (2, 5), (3, 6)])
        core, log, _ = peel_degree_one(tree)
        assert core.n == 1 and len(log) == 6

    def test_c12_unchanged(self):
        g = fixture("c12_three_chords").graph
        core, log, ids = peel_degree_one(g)
        assert core == g and len(log) == 0 and ids == list(range(g.n))

    def test_c4_reduces_and_replays(self):
        red, log, ids = reduce_adjacent_2vertices(cycle(4))
        assert red.n < 4 and len(log) > 0
        work = WorkGraph.from_graph(red, ids)
        assert log.replay(work).to_graph()[0] == cycle(4)

    def test_subdivided_triangle_one_step(self):
        # triangle 0-1-2 with edge 0-1 subdivided by vertex 3
        g = build_graph(4, [(0, 3), (3, 1), (1, 2), (2, 0)])
        red, log, _ = reduce_adjacent_2vertices(g, max_steps=1)
        assert is_isomorphic(red, cycle(3)) and len(log) == 1

    def test_prism_subdivided_unchanged(self):
        g = fixture("prism_subdivided").graph
        red, log, _ = reduce_adjacent_2vertices(g)
        assert red == g and len(log) == 0

    def test_no_adjacent_2vertices_after_reduction(self):
        for g in graphs_upto(8):
            red, _, _ = reduce_adjacent_2vertices(g)
            for u, v in red.edges():
                assert not (red.degree(u) == 2 and red.degree(v) == 2)

    def test_extend_peel_uses_one_classes(self):
        g = path(5)
        core, log, ids = peel_degree_one(g)
        seq = parse_sequence("1,1,3,3")
        col = extend_peel({ids[0]: 1}, log, WorkGraph({ids[0]: set()}), seq)
        assert verify_coloring(g, seq, [col[v] for v in range(5)]) == []

    def test_extend_coloring_verifies(self):
        seq = parse_sequence("1,2^4")
        for g in graphs_upto(7):
            work = WorkGraph.from_graph(g)
            log = ReductionLog()
            reduce_work(work, log, peel=True, drop=True)
            red, ids = work.to_graph()
            res = decide_colorable(red, seq)
            assert res.feasible
            col = {ids[v]: c for v, c in enumerate(res.coloring)}
            _, full, _ = extend_coloring(work, col, log, seq)
            assert verify_coloring(g, seq, [full[v] for v in range(g.n)]) == []


# -- weighted independent sets -------------------------------------------------

def _all_independent_sets(g):
    for r in range(g.n + 1):
        for s in combinations(range(g.n), r):
            if is_independent(g, s):
                yield frozenset(s)


def _oracle(g, weights=(20, 14, 7)):
    w = vertex_weights(g, weights)
    scored = [(sum(w[v] for v in s), count_p2(g, s), tuple(sorted(s)))
              for s in _all_independent_sets(g)]
    best = max(p for p, _, _ in scored)
    theta = min(t for p, t, _ in scored if p == best)
    return best, theta, sorted(s for p, t, s in scored if p == best and t == theta)


class TestWeightedIS:
    def test_default_weights(self):
        assert scaled_weights("0.7", "0.35") == (20, 14, 7)
        assert scaled_weights(1, 1) == (1, 1, 1)

    def test_c4(self):
        wis = max_weighted_is(cycle(4), mode="exact")
        assert wis.phi_scaled == 14 and wis.S in ((0, 2), (1, 3))

    def test_c8_two_chords_matches_oracle(self):
        g = fixture("c8_two_chords").graph
        phi, theta, sets = _oracle(g)
        wis = max_weighted_is(g, mode="exact")
        assert (wis.phi_scaled, wis.theta, wis.S) == (phi, theta, sets[0])

    def test_optimal_sets_match_oracle(self):
        for g in _core_graphs(8, "sat3"):
            phi, theta, sets = _oracle(g)
            got = optimal_sets(g)
            assert [w.S for w in got] == sets
            assert all(w.phi_scaled == phi and w.theta == theta for w in got)

    def test_exact_is_exchange_stable(self):
        for g in _core_graphs(9):
            wis = max_weighted_is(g, mode="exact")
            for a in exchange_moves(g, wis.members):
                t = make_wis(g, apply_move(g, wis.members, a))
                assert t.phi_scaled <= wis.phi_scaled
                if t.phi_scaled == wis.phi_scaled:
                    assert t.theta >= wis.theta

    def test_exchange_mode_is_independent_and_stable(self):
        for g in _core_graphs(8):
            wis = exchange_stable_is(g)
            assert is_independent(g, wis.S)
            assert wis.phi_scaled <= max_weighted_is(g, mode="exact").phi_scaled

    def test_degree_one_rejected(self):
        with pytest.raises(PackingError) as info:
            vertex_weights(path(3))
        assert info.value.code == "PRECONDITION"

    def test_unknown_mode(self):
        with pytest.raises(ValueError):
            max_weighted_is(cycle(5), mode="greedy")


# -- paths and bad sets ---------------------------------------------------------

# two P2 paths whose 2-vertices share the father 0
GADGET = build_graph(9, [(0, 1), (0, 2), (1, 3), (2, 4), (3, 5), (3, 6), (4, 7), (4, 8)])
GADGET_S = {0, 5, 6, 7, 8}


class TestBadSets:
    def test_gadget_paths(self):
        dec = decompose_paths(GADGET, GADGET_S)
        assert sorted(p.kind for p in dec.paths) == ["P2", "P2"]
        assert siblings(GADGET, dec, 1) == {2}

    def test_gadget_gamma_by_product(self):
        dec = decompose_paths(GADGET, GADGET_S)
        options = [p.vertices for p in dec.paths]
        best = max(make_bad_set(GADGET, dec, pick).gamma for pick in product(*options))
        b, _ = best_bad_set(GADGET, GADGET_S, dec)
        assert best == 2 and b.gamma == 2 and b.members == (1, 2)

    def test_no_bad_paths(self):
        g = cycle(6)
        dec = decompose_paths(g, {0, 2, 4})
        b, bp = best_bad_set(g, {0, 2, 4}, dec)
        assert b.members == bp.members == () and b.gamma == 0

    def test_c8_cardinality(self):
        g = fixture("c8_two_chords").graph
        s = max_weighted_is(g, mode="exact").S
        dec = decompose_paths(g, s)
        b, bp = best_bad_set(g, s, dec)
        n12 = sum(p.kind in ("P1", "P2") for p in dec.paths)
        assert len(b.members) == len(bp.members) == n12

    def test_bad_set_is_optimal_on_small_graphs(self):
        for g in _core_graphs(9):
            s = max_weighted_is(g, mode="exact").S
            dec = decompose_paths(g, s)
            b, bp = best_bad_set(g, s, dec)
            options = [p.vertices for p in dec.paths if p.kind in ("P1", "P2")]
            best = max(make_bad_set(g, dec, pick).gamma for pick in product(*options))
            assert b.gamma == best
            assert all(g.degree(v) == 2 for v in bp.lonely)

    def test_non_maximal_set_rejected(self):
        with pytest.raises(StructureViolation):
            decompose_paths(cycle(6), {0})


# -- the (1,1,3,3) partition ---------------------------------------------------

class TestPartition:
    def test_c12_three_chords(self):
        g = fixture("c12_three_chords").graph
        res = run_partition_1133(g)
        assert verify_coloring(g, "1,1,3,3", res.coloring) == []
        assert res.repairs

    def test_c12_literal_construction_fails_with_trace(self):
        with pytest.raises(ConstructionFailed) as info:
            run_partition_1133(fixture("c12_three_chords").graph, repair=False)
        trace = info.value.trace
        for label in ("S = ", "path P", "B = ", "B' = ", "C1 = ", "C4 = ", "violated:"):
            assert label in trace

    def test_c6(self):
        assert verify_coloring(cycle(6), "1,1,3,3", partition_1133(cycle(6))) == []

    def test_petersen_not_in_class(self):
        with pytest.raises(NotInClass) as info:
            partition_1133(fixture("petersen").graph)
        assert info.value.code == "NOT_IN_CLASS"

    def test_trees_and_isolated(self):
        for g in (build_graph(1, []), path(2), path(6)):
            assert verify_coloring(g, "1,1,3,3", partition_1133(g)) == []

    def test_all_small_sat1_graphs(self):
        for g in graphs_upto(9):
            if in_class(g, "sat1"):
                res = run_partition_1133(g, repair=False)
                assert verify_coloring(g, "1,1,3,3", res.coloring) == []

    def test_literal_sibling_bound_finding(self):
        # two triangles joined by one edge: the weak bad vertex 4 has two bad
        # siblings (2 and 3, the ends of one P1 path)
        g = parse_graph6("E`ow")
        res = run_partition_1133(g)
        assert verify_coloring(g, "1,1,3,3", res.coloring) == []
        fails = res.claim_failures
        assert any(f.startswith("(b) bad vertex") for f in fails)
        assert not any(f.startswith("(b-path)") for f in fails)

    def test_exchange_mode(self):
        g = fixture("c8_two_chords").graph
        res = run_partition_1133(g, wis_mode="exchange")
        assert verify_coloring(g, "1,1,3,3", res.coloring) == []


# -- the (1,2^4) and (1,2^5) pipelines --------------------------------------------

class TestTwos:
    @pytest.mark.parametrize("name", ["c8_two_chords", "c12_three_chords"])
    def test_12e4_fixtures(self, name):
        g = fixture(name).graph
        res = run_1sat_12e4(g)
        assert verify_coloring(g, "1,2^4", res.coloring) == []
        assert res.claim_failures == []

    def test_12e4_c5(self):
        assert verify_coloring(cycle(5), "1,2^4", color_1sat_12e4(cycle(5))) == []

    def test_12e5_prism(self):
        g = fixture("prism_subdivided").graph
        res = run_30sat_12e5(g)
        assert verify_coloring(g, "1,2^5", res.coloring) == []
        assert res.claim_failures == []

    def test_hex_wheel(self):
        g = fixture("hex_wheel_left").graph
        assert verify_coloring(g, "1,2^5", color_30sat_12e5(g)) == []
        assert verify_coloring(g, "1,2^4", list(fixture("hex_wheel_left").coloring)) == []

    def test_figure_graphs_12e5(self):
        for name in ("hex_wheel_left", "thirteen_vertex_right"):
            g = fixture(name).graph
            res = run_30sat_12e5(g)
            assert verify_coloring(g, "1,2^5", res.coloring) == []
            assert res.trace.conflict_max_degree <= 5

    def test_k4_not_in_class(self):
        with pytest.raises(NotInClass):
            color_30sat_12e5(complete(4))
        with pytest.raises(NotInClass):
            color_1sat_12e4(complete(4))

    def test_small_graphs(self):
        for g in graphs_upto(8):
            if in_class(g, "sat1"):
                assert verify_coloring(g, "1,2^4", color_1sat_12e4(g)) == []
            if in_class(g, "hsat0"):
                res = run_30sat_12e5(g)
                assert verify_coloring(g, "1,2^5", res.coloring) == []
                assert res.claim_failures == []
