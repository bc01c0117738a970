"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--count 200000] [--repeat 3]
"""

import argparse
import timeit

from padicval import _pykernels

try:
    from padicval import _ckernels
except ImportError:
    _ckernels = None


CASES = {
    # (coeffs low-to-high, prime)
    "cubic at 3": ([243, 81, 9, 1], 3),
    "x^2-384 at 2": ([-384, 0, 1], 2),
    "quartic at 5": ([3, 3, 1, 1, 1], 5),
}


def word_cap(p):
    cap = 1
    while p ** (cap + 1) < 2**63:
        cap += 1
    return cap


def bench(fn, repeat):
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--count", type=int, default=200_000, help="values per valuation scan")
    ap.add_argument("--nodes", type=int, default=2**16, help="lift every residue mod the largest p^j below this")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    backends = [("python", _pykernels)]
    if _ckernels is not None:
        backends.append(("cython", _ckernels))
    else:
        print("compiled extension not built; timing the Python kernels only")

    print(f"{'kernel':<14}{'case':<16}" + "".join(f"{name:>12}" for name, _ in backends) + f"{'speedup':>10}")
    for label, (coeffs, p) in CASES.items():
        cap = word_cap(p)
        times = []
        results = []
        for _, mod in backends:
            times.append(bench(lambda: mod.valuation_scan(coeffs, p, cap, 0, args.count), args.repeat))
            results.append(mod.valuation_scan(coeffs, p, cap, 0, 1000))
        assert all(r == results[0] for r in results), "backends disagree"
        speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
        print(f"{'scan':<14}{label:<16}" + "".join(f"{t:>11.3f}s" for t in times) + speed)

        level = 1
        while p ** (level + 1) <= args.nodes:
            level += 1
        nodes = list(range(p**level))
        times = []
        results = []
        for _, mod in backends:
            times.append(bench(lambda: mod.lift_level(coeffs, p, level, nodes), args.repeat))
            results.append(mod.lift_level(coeffs, p, level, nodes))
        assert all(r == results[0] for r in results), "backends disagree"
        speed = f"{times[0] / times[-1]:>9.1f}x" if len(times) > 1 else ""
        print(f"{'lift_level':<14}{label:<16}" + "".join(f"{t:>11.3f}s" for t in times) + speed)


if __name__ == "__main__":
    main()
