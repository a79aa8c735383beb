#!/usr/bin/env python3
"""Corpus differential runner.

Generates seeded random connected graphs, runs the solver against the
brute-force check over a (d, k) grid, and writes a JSON summary.  Any
disagreement makes the exit code non-zero.

Usage:
    python scripts/run_corpus.py --count 100 --seed 1 --out corpus.json
"""

import argparse
import json
import random
import sys
import time

from dcut import brute_force_min_dcut, solve
from dcut.generators import gnm_random


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--count", type=int, default=100)
    parser.add_argument("--seed", type=int, default=20250808)
    parser.add_argument("--n-min", type=int, default=4)
    parser.add_argument("--n-max", type=int, default=12)
    parser.add_argument("--d-max", type=int, default=2)
    parser.add_argument("--k-max", type=int, default=6)
    parser.add_argument("--out", default=None, help="summary JSON path")
    args = parser.parse_args(argv)

    rng = random.Random(args.seed)
    disagreements = []
    runs = 0
    start = time.perf_counter()
    for i in range(args.count):
        n = rng.randint(args.n_min, args.n_max)
        m = min(rng.randint(n - 1, 2 * n), n * (n - 1) // 2)
        graph = gnm_random(n, m, seed=args.seed + i + 1)
        minima = {d: brute_force_min_dcut(graph, d).min_cut_size
                  for d in range(1, args.d_max + 1)}
        for d in range(1, args.d_max + 1):
            for k in range(args.k_max + 1):
                expected = minima[d] is not None and minima[d] <= k
                got = solve(graph, k, d).answer
                runs += 1
                if got != expected:
                    disagreements.append(
                        {"instance": i, "n": n, "m": m, "d": d, "k": k,
                         "solver": got, "oracle": expected})
    elapsed = time.perf_counter() - start

    summary = {
        "count": args.count, "seed": args.seed, "runs": runs,
        "disagreements": disagreements, "elapsed_seconds": round(elapsed, 3),
    }
    text = json.dumps(summary, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    print(f"{runs} runs, {len(disagreements)} disagreements, {elapsed:.1f}s")
    if disagreements:
        print(text)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
