"""Benchmark the compiled echelon kernel against the pure-Python fallback.

Swaps veronese_jets.echelon._kernel between the two implementations and
times identical workloads: synthetic sparse eliminations and the real jet
quotient / module closure pipelines.  Run from the repository root:

    python3 benchmarks/bench_echelon.py [--repeat 3] [--seed 11]
"""

import argparse
import random
import time

import veronese_jets.echelon as echelon
from veronese_jets import _echelon_py
from veronese_jets.echelon import GradedPieceMatrix

try:
    from veronese_jets import _echelon_cy
except ImportError:
    _echelon_cy = None


def synthetic_rows(seed, nrows, ncols, fill, magnitude):
    rng = random.Random(seed)
    rows = []
    for _ in range(nrows):
        support = rng.sample(range(ncols), fill)
        rows.append(
            [(j, rng.randint(-magnitude, magnitude)) for j in sorted(support)]
        )
    return rows


def run_synthetic(rows, ncols):
    m = GradedPieceMatrix(ncols)
    for row in rows:
        m.insert(row)
    return m.rank


def run_jet_quotient():
    from veronese_jets import jets

    jets._piece_monomials.cache_clear()
    jets._quadratic_relations.cache_clear()
    ch = jets.quotient_character(jets.JetRingSpec.make(3, 2, 5))
    return sum(ch.weight_dims_at_one().values())


def run_module_closure():
    from veronese_jets import modules

    modules.module_monomials.cache_clear()
    basis = modules.build_global_demazure(modules.ModuleSpec.make(2, 2, 6))
    return basis.total_dimension()


def timed(fn, repeat):
    best = None
    value = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        value = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, value


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()

    if _echelon_cy is None:
        print("compiled kernel not built; showing pure-Python timings only")
    kernels = [("python", _echelon_py)] + (
        [("cython", _echelon_cy)] if _echelon_cy else []
    )

    dense = synthetic_rows(args.seed, 200, 260, 20, 9)
    bignum = synthetic_rows(args.seed + 1, 70, 90, 24, 10**12)
    workloads = [
        ("synthetic 200x260 small", lambda: run_synthetic(dense, 260)),
        ("synthetic 70x90 bignum", lambda: run_synthetic(bignum, 90)),
        ("jet quotient l=3 n=2 q=5", run_jet_quotient),
        ("module closure l=2 n=2 q=6", run_module_closure),
    ]

    print("%-28s %10s %10s %9s" % ("workload", "python ms", "cython ms", "speedup"))
    for name, fn in workloads:
        times = {}
        checks = set()
        for kname, kmod in kernels:
            echelon._kernel = kmod
            best, value = timed(fn, args.repeat)
            times[kname] = best * 1000
            checks.add(value)
        if len(checks) != 1:
            raise SystemExit("kernel results disagree on %s: %s" % (name, checks))
        if "cython" in times:
            print(
                "%-28s %10.1f %10.1f %8.1fx"
                % (name, times["python"], times["cython"], times["python"] / times["cython"])
            )
        else:
            print("%-28s %10.1f %10s %9s" % (name, times["python"], "-", "-"))
    echelon._kernel = _echelon_cy or _echelon_py


if __name__ == "__main__":
    main()
