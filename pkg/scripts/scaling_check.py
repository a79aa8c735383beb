#!/usr/bin/env python3
"""DP-phase scaling check on bridged-clique instances.

Times the table fill (decomposition construction excluded) for fixed
small k across growing n and reports the log-log slope.  The asymptotic
claim itself is not reproducible at desk scale; this is a smoke check
that the fill grows polynomially.

Usage:
    python scripts/scaling_check.py --k 3 --d 1 --sizes 4 5 6 7
"""

import argparse
import math
import sys
import time

from dcut.decomposition import construct
from dcut.generators import two_cliques_bridged
from dcut.solver import DPSolver


def time_fill(graph, td, d, k, repeats=5, inner=10):
    DPSolver(graph, td, d, k).run()  # warm-up
    best = math.inf
    for _ in range(repeats):
        start = time.perf_counter()
        for _ in range(inner):
            DPSolver(graph, td, d, k).run()
        best = min(best, (time.perf_counter() - start) / inner)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--k", type=int, default=3)
    parser.add_argument("--d", type=int, default=1)
    parser.add_argument("--sizes", type=int, nargs="+", default=[4, 5, 6, 7],
                        help="clique sizes q (instances have n = 2q)")
    args = parser.parse_args(argv)

    points = []
    print(f"{'n':>4} {'nodes':>6} {'fill ms':>9}")
    for q in args.sizes:
        graph = two_cliques_bridged(q)
        td = construct(graph, args.k)
        seconds = time_fill(graph, td, args.d, args.k)
        points.append((math.log(graph.n), math.log(seconds)))
        print(f"{graph.n:>4} {td.node_count:>6} {seconds * 1000:>9.3f}")

    n = len(points)
    mean_x = sum(x for x, _ in points) / n
    mean_y = sum(y for _, y in points) / n
    slope = sum((x - mean_x) * (y - mean_y) for x, y in points) \
        / sum((x - mean_x) ** 2 for x, _ in points)
    print(f"log-log slope: {slope:.2f}")
    return 0 if slope < 4 else 1


if __name__ == "__main__":
    sys.exit(main())
