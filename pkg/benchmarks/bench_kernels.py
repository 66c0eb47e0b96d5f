"""Timing comparison of the compiled and pure-numpy kernel backends.

Run:  python3 benchmarks/bench_kernels.py [--repeat N]
Each kernel runs on a representative problem; both backends must return
identical arrays before their timings are reported.
"""

import argparse
import time

import numpy as np

from pdslab import kernels
from pdslab.bent import PAryFunction
from pdslab.gf import construct_field
from pdslab.groupring import AdditiveGroup
from pdslab.pds import construct_cyclotomic_pds


def _build_cases():
    rng = np.random.default_rng(0)
    F5 = construct_field(5, 1)
    G625 = AdditiveGroup(F5, 4)
    dense_a = rng.integers(-3, 4, size=625)
    dense_b = rng.integers(-3, 4, size=625)
    D, _ = construct_cyclotomic_pds(5, 3, 1, 1, "elliptic", 0)
    F729 = construct_field(3, 6)
    f = PAryFunction.from_trace_monomial(F729, 2)
    tr_anti = F729.trace_table[F729.antilog]
    return [
        ("convolve 5^4 dense", lambda b: b.convolve(dense_a, dense_b, 5, 4)),
        ("difference_counts |D|=208 in 5^4", lambda b: b.difference_counts(D.members, 5, 4)),
        (
            "character_counts 625 x 208",
            lambda b: b.character_counts(
                G625.digit_matrix(), G625.digit_matrix(D.members), 5
            ),
        ),
        ("walsh_counts F_3^6", lambda b: b.walsh_counts(f.values, tr_anti, 3)),
    ]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    if "cython" not in backends:
        print("compiled backend unavailable; timing python only")
    print(f"{'kernel':38s}" + "".join(f"{b:>12s}" for b in backends) + f"{'speedup':>10s}")

    from pdslab import _kernels_py

    mods = {"python": _kernels_py}
    if "cython" in backends:
        from pdslab import _speedups

        mods["cython"] = _speedups

    for name, run in _build_cases():
        results, times = {}, {}
        for label, mod in mods.items():
            best = float("inf")
            for _ in range(args.repeat):
                t0 = time.perf_counter()
                out = run(mod)
                best = min(best, time.perf_counter() - t0)
            results[label], times[label] = out, best
        lab = list(results)
        for other in lab[1:]:
            assert np.array_equal(results[lab[0]], results[other]), name
        row = f"{name:38s}" + "".join(f"{times[b] * 1e3:10.2f}ms" for b in backends)
        if len(backends) == 2:
            row += f"{times['python'] / times['cython']:9.2f}x"
        print(row)


if __name__ == "__main__":
    main()
