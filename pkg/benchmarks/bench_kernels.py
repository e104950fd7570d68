"""Compare the pure Python and compiled term kernels on shared workloads.

Runs each kernel on identical inputs and reports best-of-N wall time.  Works
with or without the compiled extension; without it only the Python column is
shown.

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import itertools
import random
import time

from birat import _kernels_py
from birat.cremona import parse_map, standard_involution
from birat.scalars import GF, QQ

try:
    from birat import _kernels_cy
except ImportError:
    _kernels_cy = None


def dense_terms(field, nvars, degree, seed):
    rng = random.Random(seed)
    out = {}
    for exps in itertools.product(range(degree + 1), repeat=nvars):
        if sum(exps) <= degree:
            c = field.from_int(rng.randint(1, 9))
            out[exps] = c
    return out


def sparse_terms(field, nvars, degree, nterms, seed):
    rng = random.Random(seed)
    out = {}
    while len(out) < nterms:
        exps = tuple(rng.randint(0, degree) for _ in range(nvars))
        out[exps] = field.from_int(rng.randint(1, 9))
    return out


WORKLOADS = [
    ("dense 2-var deg 8, Q", lambda: dense_terms(QQ, 2, 8, 1)),
    ("dense 3-var deg 5, Q", lambda: dense_terms(QQ, 3, 5, 2)),
    ("sparse 4-var 30 terms, Q", lambda: sparse_terms(QQ, 4, 6, 30, 3)),
    ("dense 3-var deg 5, F5", lambda: dense_terms(GF(5), 3, 5, 4)),
]


def best_of(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def bench_mul(kernels, a, b, repeat):
    return best_of(lambda: kernels.mul_terms(a, b), repeat)


def bench_compose(repeat):
    # a map-level workload: squaring the standard involution in P^3
    s = standard_involution(QQ, 3)
    g = parse_map("P^3: [x1*x2*x3 : x0*x2*x3 : x0*x1*x3 : x0*x1*x2 + x3^3]", QQ)
    return best_of(lambda: s.compose(g).compose(s), repeat)


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5, help="take the best of N runs")
    args = ap.parse_args()

    backends = [("py", _kernels_py)]
    if _kernels_cy is not None:
        backends.append(("cy", _kernels_cy))
    else:
        print("compiled kernels not built; showing the pure Python backend only")

    width = max(len(name) for name, _ in WORKLOADS)
    header = f"{'workload':<{width}}" + "".join(f"  {n:>10}" for n, _ in backends)
    if len(backends) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    for name, make in WORKLOADS:
        a = make()
        b = make()
        times = [bench_mul(k, a, b, args.repeat) for _, k in backends]
        row = f"{name:<{width}}" + "".join(f"  {t * 1e3:>8.2f}ms" for t in times)
        if len(times) == 2 and times[1] > 0:
            row += f"  {times[0] / times[1]:>7.1f}x"
        print(row)

    t = bench_compose(args.repeat)
    print(f"\nmap composition in P^3 (active backend): {t * 1e3:.2f}ms")


if __name__ == "__main__":
    main()
