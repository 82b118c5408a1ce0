"""Time the compiled search kernel against the pure-Python one.

Both backends run the same workloads (identical inputs and branching
order) and must return identical results; the script stops otherwise.

    python3 benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

from subcubic_packing import _pykernels
from subcubic_packing.enumeration import enumerate_subcubic, enumerate_upto
from subcubic_packing.fixtures import fixture
from subcubic_packing.graph import all_pairs_distances, subdivide
from subcubic_packing.solver import branching_order, parse_sequence

try:
    from subcubic_packing import _ckernels
except ImportError:
    _ckernels = None


def _prepare(g, seq):
    return (g.n, all_pairs_distances(g).flat(), branching_order(g), list(parse_sequence(seq)))


def workloads():
    fixtures = [
        ("petersen", "1,1,2,3"), ("petersen", "1,2^5"), ("c12_three_chords", "1,1,4,4"),
        ("three_triangle_gadget", "1,1,3,3"), ("thirteen_vertex_right", "1,2,2,2"),
        ("sk4", "1,2,2"),
    ]
    yield "negative fixtures", [_prepare(fixture(n).graph, s) for n, s in fixtures]
    graphs = list(enumerate_upto(8))
    yield f"(1,1,2,2) on {len(graphs)} graphs n<=8", [_prepare(g, "1,1,2,2") for g in graphs]
    yield f"(1,2^4) on {len(graphs)} graphs n<=8", [_prepare(g, "1,2^4") for g in graphs]
    tens = list(enumerate_subcubic(10))
    yield f"(1,1,2,3) on {len(tens)} graphs n=10", [_prepare(g, "1,1,2,3") for g in tens]
    subs = [subdivide(g) for g in enumerate_upto(7)]
    yield f"(1,2,3,4,5) on {len(subs)} S(G), n(G)<=7", [_prepare(g, "1,2,3,4,5") for g in subs]


def run(mod, jobs):
    out = []
    for n, dist, order, radii in jobs:
        out.append(mod.packing_search(n, dist, order, radii, 10**8, None, True))
    return out


def best_time(mod, jobs, repeat):
    best, result = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        result = run(mod, jobs)
        best = min(best, time.perf_counter() - start)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _ckernels is None:
        print("compiled kernel not built; only the Python backend is available")
    print(f"{'workload':<36}{'python s':>10}{'cython s':>10}{'speedup':>9}{'nodes':>12}")
    for name, jobs in workloads():
        tp, rp = best_time(_pykernels, jobs, args.repeat)
        nodes = sum(r[2] for r in rp)
        if _ckernels is None:
            print(f"{name:<36}{tp:>10.3f}{'-':>10}{'-':>9}{nodes:>12}")
            continue
        tc, rc = best_time(_ckernels, jobs, args.repeat)
        if rp != rc:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{name:<36}{tp:>10.3f}{tc:>10.3f}{tp / tc:>8.1f}x{nodes:>12}")


if __name__ == "__main__":
    main()
