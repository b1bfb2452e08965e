"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import timeit

from monomial_reps import kernels
from monomial_reps.partitions import partitions_of

CASES = {
    "count_ssyt (all shapes x contents, n=9)": (
        "count_ssyt",
        [(s, c) for s in partitions_of(9) for c in partitions_of(9)],
    ),
    "count_sized_multiset_partitions ({1^3,2^3,3^3,4^3}, all sizes)": (
        "count_sized_multiset_partitions",
        [((3, 3, 3, 3), sizes) for sizes in partitions_of(12)],
    ),
    "count_balanced_set_partitions (k=6)": ("count_balanced_set_partitions", [(6,)]),
}


def bench(backend, name, inputs, repeat):
    fn = getattr(backend, name)
    best = min(timeit.repeat(lambda: [fn(*args) for args in inputs], number=1, repeat=repeat))
    return best, [fn(*args) for args in inputs]


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    native = kernels.compiled_backend
    if native is None:
        print("compiled extension not available; timing the Python backend only")
    print(f"{'kernel':<66} {'python':>10} {'cython':>10} {'speedup':>8}")
    for label, (name, inputs) in CASES.items():
        t_py, r_py = bench(kernels.python_backend, name, inputs, args.repeat)
        if native is None:
            print(f"{label:<66} {t_py:>9.3f}s {'-':>10} {'-':>8}")
            continue
        t_c, r_c = bench(native, name, inputs, args.repeat)
        if r_c != r_py:
            raise SystemExit(f"backends disagree on {name}")
        print(f"{label:<66} {t_py:>9.3f}s {t_c:>9.4f}s {t_py / t_c:>7.0f}x")


if __name__ == "__main__":
    main()
