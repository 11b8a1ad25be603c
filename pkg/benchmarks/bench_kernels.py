"""Compare the numba kernels with the pure-numpy fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Each kernel runs once untimed per backend (numba compiles, or loads its
cache) and then ``--repeat`` timed runs; the best time is reported.
"""

import argparse
import time

import numpy as np

from faceideal import _kernels
from faceideal.catalog import _perm_tables, complexes_up_to_isomorphism, downsets
from faceideal.face_ideal import face_ideal


def workloads():
    rng = np.random.default_rng(0)
    edges = np.asarray(rng.integers(1, 1 << 20, size=12), dtype=np.int64)
    faces = np.asarray(face_ideal(complexes_up_to_isomorphism(5)[-3]).ideal.generators, dtype=np.int64)
    cx = complexes_up_to_isomorphism(6)[-40]
    cfaces = np.asarray(cx.face_list, dtype=np.int64)
    mat = np.asarray(rng.integers(-2, 3, size=(40, 40)), dtype=np.int64)
    ds = downsets(5)
    tables = _perm_tables(5)
    return {
        "independent_sets (20 bits)": lambda b: b.independent_sets(edges, 20),
        "minimal_transversals_scan (20 bits)": lambda b: b.minimal_transversals_scan(edges, 20),
        "shelling_violation (face ideal, 5 vertices)": lambda b: b.shelling_violation(faces),
        "collection_violation (faces, 6 vertices)": lambda b: b.collection_violation(cfaces),
        "exact_rank (40x40)": lambda b: b.exact_rank(mat.copy(), 0),
        "reduced_betti (complex on 6 vertices)": lambda b: b.reduced_betti(cfaces, 0),
        "canonical_flags (7581 down-sets, 120 perms)": lambda b: b.canonical_flags(ds, tables),
    }


def best_time(fn, backend, repeat):
    fn(backend)
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn(backend)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if _kernels.numba_backend is None:
        raise SystemExit("numba backend disabled (FACEIDEAL_DISABLE_NUMBA set?)")
    print(f"{'kernel':46s} {'numba ms':>10s} {'numpy ms':>10s} {'speedup':>8s}")
    for name, fn in workloads().items():
        t_nb = best_time(fn, _kernels.numba_backend, args.repeat)
        t_np = best_time(fn, _kernels.numpy_backend, args.repeat)
        print(f"{name:46s} {t_nb * 1e3:10.2f} {t_np * 1e3:10.2f} {t_np / t_nb:7.1f}x")


if __name__ == "__main__":
    main()
