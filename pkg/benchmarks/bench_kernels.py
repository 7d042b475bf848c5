"""Numba vs pure-numpy timings for the three hot kernels.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--quick]

Each kernel is run once untimed (numba compiles on first call), then the
best of ``--repeat`` runs is reported.  Results of the two backends are
compared and a mismatch aborts the run.
"""
import argparse
import time

import numpy as np

from robustcliq import _kernels
from robustcliq.complex import robust_clique_complex
from robustcliq.graph import make_grid, random_graph
from robustcliq.homology import _pack_gf2, boundary_matrices


def best_of(fn, args, repeat):
    out = fn(*args)
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - t0)
    return out, min(times)


def cases(quick):
    import random

    rng = random.Random(0)
    sizes = (14, 16) if quick else (16, 18, 20)
    for n in sizes:
        adj = random_graph(n, 0.3, rng).adjacency_array()
        yield f"alpha_table n={n}", _kernels.alpha_table_numpy, _kernels.alpha_table_numba, (adj,)
    g = make_grid(5, 5) if not quick else make_grid(4, 5)
    masks = np.random.default_rng(0).integers(0, 1 << g.vertex_count, size=2000, dtype=np.int64)
    yield (
        f"alpha_of_masks {g.vertex_count}v x {masks.size}",
        _kernels.alpha_of_masks_numpy,
        _kernels.alpha_of_masks_numba,
        (g.adjacency_array(), masks),
    )
    K = robust_clique_complex(make_grid(3, 4) if quick else make_grid(4, 4), 3)
    biggest = max(boundary_matrices(K), key=lambda m: m.shape[0] * m.shape[1])
    packed = _pack_gf2(biggest)
    yield f"gf2_rank {biggest.shape[0]}x{biggest.shape[1]}", _kernels.gf2_rank_numpy, _kernels.gf2_rank_numba, (packed,)


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--repeat", type=int, default=5)
    p.add_argument("--quick", action="store_true", help="smaller inputs")
    args = p.parse_args(argv)
    if not _kernels.HAVE_NUMBA:
        print("numba unavailable (missing or ROBUSTCLIQ_DISABLE_NUMBA set); timing numpy only")
    print(f"{'kernel':<32}{'numpy ms':>12}{'numba ms':>12}{'speedup':>10}")
    for name, np_fn, nb_fn, fn_args in cases(args.quick):
        ref, t_np = best_of(np_fn, fn_args, args.repeat)
        if _kernels.HAVE_NUMBA:
            got, t_nb = best_of(nb_fn, fn_args, args.repeat)
            if not np.array_equal(np.asarray(ref), np.asarray(got)):
                raise SystemExit(f"{name}: backends disagree")
            print(f"{name:<32}{t_np * 1e3:12.2f}{t_nb * 1e3:12.2f}{t_np / t_nb:10.1f}x")
        else:
            print(f"{name:<32}{t_np * 1e3:12.2f}{'-':>12}{'-':>10}")


if __name__ == "__main__":
    main()
