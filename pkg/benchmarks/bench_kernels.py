"""Time the compiled kernels against the pure-Python fallback.

    python3 benchmarks/bench_kernels.py [--order 5] [--repeat 3]
"""
import argparse
import random
import timeit

from semilab import _pykernels

try:
    from semilab import _ckernels
except ImportError:
    _ckernels = None


def random_tables(count, n, seed=0):
    rng = random.Random(seed)
    return [tuple(rng.randrange(n) for _ in range(n * n)) for _ in range(count)]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--order", type=int, default=5)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backends = [("python", _pykernels)]
    if _ckernels is None:
        print("compiled extension not built; timing the Python fallback only")
    else:
        backends.append(("cython", _ckernels))
    tables = random_tables(200, 6)
    # associative inputs force a full scan
    assoc = [tuple(t) for t in (_ckernels or _pykernels).enumerate_lexmin(5)]
    jobs = [
        (f"enumerate_lexmin({args.order})", lambda k: k.enumerate_lexmin(args.order)),
        ("lexmin_relabel x200 (n=6)", lambda k: [k.lexmin_relabel(t, 6) for t in tables]),
        (f"find_nonassociative x{len(assoc)} (n=5)", lambda k: [k.find_nonassociative(t, 5) for t in assoc]),
    ]
    print(f"{'kernel':34} " + " ".join(f"{name:>10}" for name, _ in backends) + "   speedup")
    for label, job in jobs:
        times = []
        for _, k in backends:
            times.append(min(timeit.repeat(lambda: job(k), number=1, repeat=args.repeat)))
        speed = f"{times[0] / times[1]:8.1f}x" if len(times) == 2 else ""
        print(f"{label:34} " + " ".join(f"{t:9.3f}s" for t in times) + f"  {speed}")
    if _ckernels is not None:
        same = [tuple(t) for t in _ckernels.enumerate_lexmin(args.order)] == [
            tuple(t) for t in _pykernels.enumerate_lexmin(args.order)
        ]
        print(f"identical enumeration output: {same}")


if __name__ == "__main__":
    main()
