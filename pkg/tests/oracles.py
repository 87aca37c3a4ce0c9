"""Brute-force reference computations shared by several test modules."""

import random
from itertools import combinations
from math import gcd

import numpy as np


def determinantal_divisors(a: np.ndarray) -> list[int]:
    """Invariant factors from gcds of k x k minors: d_k = D_k / D_{k-1}."""
    rows, cols = a.shape
    out, prev = [], 1
    for k in range(1, min(rows, cols) + 1):
        g = 0
        for r in combinations(range(rows), k):
            for c in combinations(range(cols), k):
                g = gcd(g, int(round(np.linalg.det(a[np.ix_(r, c)]))))
        if g == 0:
            break
        out.append(g // prev)
        prev = g
    return out


def random_matrices(count: int, seed: int, max_dim: int = 6, bound: int = 3):
    rng = random.Random(seed)
    for _ in range(count):
        rows, cols = rng.randint(1, max_dim), rng.randint(1, max_dim)
        yield [[rng.randint(-bound, bound) for _ in range(cols)] for _ in range(rows)]
