"""Compare the compiled GF(p) kernels with the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--bound 10000] [--repeat 3]

Runs the distinct-degree factorization of x^12 + a x^6 + b modulo every prime
below the bound (the inner loop of Frobenius sampling) with each backend and
checks that both return identical results.
"""

import argparse
import time

from monogenic12 import _kernels_py
from monogenic12.arith import primes_up_to

try:
    from monogenic12 import _kernels
except ImportError:
    _kernels = None

PAIRS = [(-1, 1), (2, 2), (11, 33), (3, 3), (7, -5), (-13, 29)]


def workload(mod, primes):
    out = []
    for a, b in PAIRS:
        for p in primes:
            f = [0] * 13
            f[0], f[6], f[12] = b % p, a % p, 1
            out.append(mod.ddf(f, p))
    return out


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        res = fn()
        times.append(time.perf_counter() - t0)
    return min(times), res


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bound", type=int, default=10_000)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    primes = [p for p in primes_up_to(args.bound) if p > 3]
    calls = len(primes) * len(PAIRS)
    t_py, r_py = best_of(lambda: workload(_kernels_py, primes), args.repeat)
    print(f"python  {t_py:8.3f} s  ({calls} ddf calls)")
    if _kernels is None:
        print("compiled extension not built; run `python3 setup.py build_ext --inplace`")
        return
    t_c, r_c = best_of(lambda: workload(_kernels, primes), args.repeat)
    print(f"cython  {t_c:8.3f} s")
    print(f"speedup {t_py / t_c:8.1f}x")
    if r_py != r_c:
        raise SystemExit("backends disagree")
    print("results identical")


if __name__ == "__main__":
    main()
