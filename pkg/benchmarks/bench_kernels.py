"""Timing comparison of the two hom-enumeration backends.

Runs the full-candidate edge-preservation filter (8^8 assignments at
dimension three) through the numba kernel and the batched numpy
fallback, then the vectorized post-filters on the surviving maps.

Usage: python benchmarks/bench_kernels.py [repeats]
"""

import sys
import time

import numpy as np

from cubecats import kernels
from cubecats.cubes import standard_cube, twisted_cube
from cubecats.graphs import _bound_tables
from cubecats.standard import _dim_classes, _dim_table


def _kernel_args(src, tgt):
    edges = np.array(
        [[src.index[u], src.index[v]] for u, v in src.edge_list], dtype=np.int64
    )
    return len(src.vertices), len(tgt.vertices), edges, tgt.adjacency


def _time(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main() -> None:
    repeats = int(sys.argv[1]) if len(sys.argv) > 1 else 3
    if not kernels.HAS_NUMBA:
        print("numba unavailable; only the numpy path can be timed")
    pairs = [
        ("standard 3->3", standard_cube(3), standard_cube(3)),
        ("twisted 3->3", twisted_cube(3), twisted_cube(3)),
        ("twisted 3->2", twisted_cube(3), twisted_cube(2)),
    ]
    print(f"best of {repeats} runs, times in seconds")
    print(f"{'hom filter':<16} {'candidates':>12} {'maps':>6} {'numba':>8} {'numpy':>8}")
    for name, src, tgt in pairs:
        args = _kernel_args(src, tgt)
        candidates = args[1] ** args[0]
        if kernels.HAS_NUMBA:
            kernels.edge_preserving_maps(*args, backend="numba")  # compile outside the clock
            t_nb, maps = _time(lambda: kernels.edge_preserving_maps(*args, backend="numba"), repeats)
            nb = f"{t_nb:8.3f}"
        else:
            nb = "     n/a"
        t_np, maps = _time(lambda: kernels.edge_preserving_maps(*args, backend="numpy"), repeats)
        print(f"{name:<16} {candidates:>12} {len(maps):>6} {nb} {t_np:8.3f}")

    src = tgt = standard_cube(3)
    maps = kernels.edge_preserving_maps(*_kernel_args(src, tgt))
    meet_src, join_src = _bound_tables(src)
    meet_tgt, join_tgt = _bound_tables(tgt)
    t_meet, mask = _time(lambda: kernels.bound_preserving_mask(maps, meet_src, meet_tgt), repeats)
    t_dim, _ = _time(
        lambda: kernels.dimension_preserving_mask(maps, _dim_classes(src), _dim_table(tgt)),
        repeats,
    )
    print()
    print(f"post-filters on {len(maps)} standard 3->3 maps")
    print(f"meet mask  {t_meet:8.3f}  ({int(mask.sum())} survive)")
    print(f"dim mask   {t_dim:8.3f}")


if __name__ == "__main__":
    main()
