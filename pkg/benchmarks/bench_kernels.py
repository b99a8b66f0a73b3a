"""Compiled vs pure-Python kernels on the workloads that dominate runtime.

    python3 benchmarks/bench_kernels.py [--n 10] [--p 13] [--repeat 3]
"""
import argparse
import random
import time

from costas._backend import compiled_kernels, python_kernels
from costas.correlation import w1_family_arrays


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - t)
    return min(times), result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=10, help="enumeration order")
    ap.add_argument("--p", type=int, default=13, help="prime for the W1 family sweep")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    compiled = compiled_kernels
    if compiled is None:
        print("compiled kernels unavailable; build with `pip install -e . --no-build-isolation`")
        return
    rng = random.Random(0)
    perms = []
    for _ in range(20000):
        v = list(range(1, 13))
        rng.shuffle(v)
        perms.append(v)
    arrays, labels = w1_family_arrays(args.p)

    workloads = {
        f"enumerate n={args.n}": lambda k: k.enumerate_costas(args.n, [], args.n - 1, False)[0],
        "deficiency x20000 (n=12)": lambda k: sum(k.deficiency(v) for v in perms),
        "costas_batch x20000 (n=12)": lambda k: sum(k.costas_batch(perms)),
        f"W1 family max p={args.p}": lambda k: k.family_max(arrays, labels),
    }
    print(f"{'workload':32} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, job in workloads.items():
        tp, rp = best_of(lambda: job(python_kernels), args.repeat)
        tc, rc = best_of(lambda: job(compiled), args.repeat)
        assert rp == rc, (name, rp, rc)
        print(f"{name:32} {tp:10.4f} {tc:11.4f} {tp / tc:7.1f}x")


if __name__ == "__main__":
    main()
