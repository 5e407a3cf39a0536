"""Deterministic random instance generation.

All randomness flows through numpy's counter-based Philox engine, so a
single integer seed reproduces every derived artefact bit for bit across
platforms and runs.
"""

from __future__ import annotations

import numpy as np

from .core import ColouredGraph, ProcedureFailure


def generator(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(seed))


def uniform_complete_colouring(n: int, r: int, seed: int) -> ColouredGraph:
    """K_n with every edge coloured uniformly and independently from 1..r."""
    rng = generator(seed)
    cols = rng.integers(1, r + 1, size=n * (n - 1) // 2)
    edges: dict[tuple[int, int], int] = {}
    i = 0
    for u in range(n):
        for v in range(u + 1, n):
            edges[(u, v)] = int(cols[i])
            i += 1
    return ColouredGraph(n, r, edges, complete=True)


def random_dense_two_colouring(
    n: int, p: float, min_degree: int, seed: int, max_tries: int = 10_000
) -> ColouredGraph:
    """Rejection-sample a 2-coloured host meeting a minimum-degree floor.

    Each potential edge is kept independently with probability p and
    coloured uniformly from {1, 2}.  Samples are discarded until the
    minimum degree reaches the floor.
    """
    rng = generator(seed)
    m = n * (n - 1) // 2
    for _ in range(max_tries):
        keep = rng.random(size=m) < p
        cols = rng.integers(1, 3, size=m)
        edges: dict[tuple[int, int], int] = {}
        deg = [0] * n
        i = 0
        for u in range(n):
            for v in range(u + 1, n):
                if keep[i]:
                    edges[(u, v)] = int(cols[i])
                    deg[u] += 1
                    deg[v] += 1
                i += 1
        if min(deg) >= min_degree:
            return ColouredGraph(n, 2, edges, complete=len(edges) == m)
    raise ProcedureFailure(
        f"no sample with minimum degree {min_degree} in {max_tries} tries"
    )
