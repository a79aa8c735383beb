import random

from dcut import Graph
from dcut.generators import gnm_random


def path_graph(n):
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n):
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def make_corpus(count, seed, n_lo=4, n_hi=12):
    """Seeded random connected graphs with n in [n_lo, n_hi] and
    m in [n-1, 2n]."""
    rng = random.Random(seed)
    graphs = []
    for i in range(count):
        n = rng.randint(n_lo, n_hi)
        m = min(rng.randint(n - 1, 2 * n), n * (n - 1) // 2)
        graphs.append(gnm_random(n, m, seed=seed + i + 1))
    return graphs
