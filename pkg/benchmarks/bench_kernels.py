"""Time the compiled scan kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--size 200000] [--repeat 5]
"""
import argparse
import time

import numpy as np

from atr import _scan_py
from atr.compiler import compile_query
from atr.harness import random_words

try:
    from atr import _scan
except ImportError:
    _scan = None


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--size", type=int, default=200_000, help="approximate text length in characters")
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    kernels = [("python", _scan_py)] + ([("cython", _scan)] if _scan is not None else [])
    if _scan is None:
        print("compiled kernel not built; timing the fallback only")

    rng = np.random.default_rng(args.seed)
    queries = ["approximate textual retrieval", "chinensis", "error tolerant full text search engine"]
    words = random_words(rng, args.size // 6, 2, 9)
    for i in rng.integers(0, len(words), size=len(words) // 50):
        words[i] = queries[i % len(queries)]
    text = " ".join(words)
    print(f"text length {len(text)}")
    for query in queries:
        comps = [(c.literals, c.gaps) for c in compile_query(query).components]
        row = []
        for name, kernel in kernels:
            secs, hits = best_of(args.repeat, kernel.find_all, text, comps)
            row.append((name, secs, len(hits)))
        print(f"find_all  {query!r:45}" + "".join(f"  {n} {s * 1e3:8.2f} ms ({h} hits)" for n, s, h in row))

    codes = rng.integers(0, 4, size=args.size).astype(np.intc)
    patterns = [([0, 1], [1, 0]), ([2], [0, 3], [3, 1, 1]), ([1, 1, 2], [0])]
    gapsets = [[2], [4, 2], [7]]
    for lits, gaps in zip(patterns, gapsets):
        arrays = [np.array(l, dtype=np.intc) for l in lits]
        row = []
        for name, kernel in kernels:
            secs, count = best_of(args.repeat, kernel.count_embeddings, codes, arrays, gaps)
            row.append((name, secs, count))
        label = f"{lits} gaps={gaps}"
        print(f"count     {label:45}" + "".join(f"  {n} {s * 1e3:8.2f} ms ({c})" for n, s, c in row))


if __name__ == "__main__":
    main()
