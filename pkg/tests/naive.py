"""Small brute-force references used to cross-check the package.

Everything here is written the dumbest way that works: permutation
enumeration, Counter tallies, product loops over whole colouring spaces.
Deliberately shares no machinery with the package under test.
"""

from __future__ import annotations

import itertools
from collections import Counter

from oddramsey import ColouredGraph


def hamilton_vertex_orders(n: int):
    """Every Hamilton cycle of K_n exactly once, as a vertex tuple.

    Fixes vertex 0 first and keeps only orders with second vertex smaller
    than last, so each undirected cycle appears with one orientation.
    """
    for perm in itertools.permutations(range(1, n)):
        if perm[0] < perm[-1]:
            yield (0,) + perm


def cycle_edges(order: tuple[int, ...]):
    n = len(order)
    return [(order[i], order[(i + 1) % n]) for i in range(n)]


def class_sizes(g: ColouredGraph, order: tuple[int, ...]) -> Counter:
    tally: Counter = Counter()
    for u, v in cycle_edges(order):
        tally[g.colour(u, v)] += 1
    return tally


def odd_classes(g: ColouredGraph, order: tuple[int, ...]) -> list[int]:
    return sorted(c for c, k in class_sizes(g, order).items() if k % 2 == 1)


def edges_all_present(g: ColouredGraph, order: tuple[int, ...]) -> bool:
    return all(g.has_edge(u, v) for u, v in cycle_edges(order))


def find_even_hc(g: ColouredGraph) -> tuple[int, ...] | None:
    """First Hamilton cycle whose colour classes are all even, if any."""
    for order in hamilton_vertex_orders(g.n):
        if edges_all_present(g, order) and not odd_classes(g, order):
            return order
    return None


def count_hamilton_cycles(n: int) -> int:
    total = 0
    for _ in hamilton_vertex_orders(n):
        total += 1
    return total


def odd_ramsey_value(n: int, edges: list[tuple[int, int]] | None = None) -> int:
    """Least palette size admitting a colouring with no all-even Hamilton cycle.

    Loops over the full product space of colourings, so only sensible for
    tiny hosts (at most 5 vertices when complete, or very sparse ones).
    """
    if edges is None:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = len(edges)
    for r in range(1, m + 2):
        for assignment in itertools.product(range(1, r + 1), repeat=m):
            g = ColouredGraph.from_edge_list(
                n, r, [(u, v, c) for (u, v), c in zip(edges, assignment)]
            )
            if find_even_hc(g) is None:
                return r
    raise AssertionError("some palette always works once r exceeds the edge count")


def find_switch_square(g: ColouredGraph):
    """A 4-cycle whose edge colours xor to exactly two live colours, if any.

    Returns (square, colour_pair) with the square as a vertex 4-tuple, or
    None.  Scans every 4-subset and each of its three pairings.
    """
    for quad in itertools.combinations(range(g.n), 4):
        a, b, c, d = quad
        for square in ((a, b, c, d), (a, b, d, c), (a, c, b, d)):
            es = cycle_edges(square)
            if not all(g.has_edge(u, v) for u, v in es):
                continue
            tally: Counter = Counter(g.colour(u, v) for u, v in es)
            odd = sorted(col for col, k in tally.items() if k % 2 == 1)
            if len(odd) == 2:
                return square, (odd[0], odd[1])
    return None
