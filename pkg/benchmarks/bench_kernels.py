"""Compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Both backends must return identical results; the script exits non-zero if
they disagree.
"""
from __future__ import annotations

import argparse
import sys
import time
from fractions import Fraction

from multjump import kernels
from multjump.monomial import jumping_spectrum, multiplier_ideal_generators
from multjump.newton import MonomialIdeal, build_newton

CASES = [
    ("x^4,y^4,z^4,xyz  bound 12", ((4, 0, 0), (0, 4, 0), (0, 0, 4), (1, 1, 1)), Fraction(12)),
    ("x^6,y^5,z^4,xy^2z  bound 10", ((6, 0, 0), (0, 5, 0), (0, 0, 4), (1, 2, 1)), Fraction(10)),
    ("x^7,y^5  bound 60", ((7, 0), (0, 5)), Fraction(60)),
]


def _best(fn, repeat: int) -> tuple[float, object]:
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    if kernels.BACKEND != "compiled":
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'case':<32} {'kernel':<10} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    ok = True
    for label, gens, bound in CASES:
        P = build_newton(MonomialIdeal(gens))
        work = {
            "spectrum": lambda b: jumping_spectrum(P, bound, backend=b).entries,
            "ideal": lambda b: multiplier_ideal_generators(P, bound, backend=b),
        }
        for name, fn in work.items():
            tp, rp = _best(lambda: fn("python"), args.repeat)
            tc, rc = _best(lambda: fn("compiled"), args.repeat)
            ok &= rp == rc
            print(f"{label:<32} {name:<10} {tp:>10.4f} {tc:>11.4f} {tp / tc:>7.1f}x"
                  + ("" if rp == rc else "  MISMATCH"))
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
