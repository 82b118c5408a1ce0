import pytest

from subcubic_packing import _pykernels, kernels
from subcubic_packing.fixtures import all_fixtures
from subcubic_packing.graph import all_pairs_distances
from subcubic_packing.solver import branching_order

from conftest import graphs_upto

try:
    from subcubic_packing import _ckernels
except ImportError:  # extension not built
    _ckernels = None

needs_ext = pytest.mark.skipif(_ckernels is None, reason="compiled kernel not built")


def _run(mod, g, radii, budget=10**7, fixed=None):
    dist = all_pairs_distances(g).flat()
    free = [v for v in range(g.n) if fixed is None or fixed[v] < 0]
    return mod.packing_search(g.n, dist, branching_order(g, free), list(radii), budget,
                              fixed, fixed is None)


def test_backend_name():
    assert kernels.BACKEND in ("cython", "python")


def test_status_constants_shared():
    assert (kernels.FOUND, kernels.EXHAUSTED, kernels.BUDGET) == (1, 0, -1)


@needs_ext
def test_backends_agree_on_enumeration():
    for g in graphs_upto(7):
        for radii in ((1, 1, 2), (1, 2, 2, 2), (1, 1, 3), (2, 2, 2, 2)):
            py = _run(_pykernels, g, radii)
            cy = _run(_ckernels, g, radii)
            assert py == cy


@needs_ext
def test_backends_agree_on_fixtures():
    for fx in all_fixtures():
        for radii in ((1, 1, 2, 3), (1, 2, 2, 2), (1, 1, 3, 3)):
            assert _run(_pykernels, fx.graph, radii) == _run(_ckernels, fx.graph, radii)


@pytest.mark.parametrize("mod", [_pykernels, pytest.param(_ckernels, marks=needs_ext)])
def test_budget_and_pins(mod):
    g = next(fx.graph for fx in all_fixtures() if fx.name == "petersen")
    status, colors, nodes = _run(mod, g, (1, 1, 2, 3), budget=3)
    assert status == kernels.BUDGET and nodes <= 4
    fixed = [-1] * g.n
    fixed[0] = fixed[1] = 0  # adjacent vertices in one 1-class
    assert _run(mod, g, (1, 1, 2), fixed=fixed)[0] == kernels.EXHAUSTED
