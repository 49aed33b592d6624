"""Time the compiled and pure-Python kernels on the same inputs.

    python benchmarks/bench_kernels.py [--repeat 3]
"""
import argparse
import random
import timeit

from zeonperm import kernels
from zeonperm.johnson import subsets


def cases(rng):
    for n in (10, 14, 18, 20):
        rows = [[rng.randint(0, 1) for _ in range(n)] for _ in range(n)]
        yield f"permanent n={n}", lambda be, r=rows: kernels.permanent_int(r, backend=be)
    for n, ell in ((9, 4), (10, 5)):
        rows = [[rng.randint(-3, 3) for _ in range(n)] for _ in range(n)]
        subs = list(subsets(n, ell))
        yield (f"zeon power n={n} l={ell}",
               lambda be, r=rows, s=subs: kernels.zeon_power_int(r, s, backend=be))
    for n in (12, 16, 20):
        p = list(range(n))
        rng.shuffle(p)
        yield f"fixed subsets n={n}", lambda be, q=p: kernels.fixed_subset_counts(q, backend=be)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()
    if kernels.BACKEND != "cython":
        print("compiled kernels not built; only the pure-Python timings are shown")
    backends = ["python"] + (["cython"] if kernels.BACKEND == "cython" else [])
    print(f"{'case':<26}" + "".join(f"{b:>12}" for b in backends) + f"{'speedup':>10}")
    for name, fn in cases(random.Random(args.seed)):
        times = {}
        results = {}
        for be in backends:
            results[be] = fn(be)
            times[be] = min(timeit.repeat(lambda: fn(be), number=1, repeat=args.repeat))
        if len(results) == 2:
            assert results["python"] == results["cython"], name
        line = f"{name:<26}" + "".join(f"{times[b]:>11.4f}s" for b in backends)
        if "cython" in times:
            line += f"{times['python'] / times['cython']:>9.0f}x"
        print(line)


if __name__ == "__main__":
    main()
