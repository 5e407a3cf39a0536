"""Explicit colourings whose Hamilton cycles always carry an odd colour class.

The main family places vertices on F_2^t x {1..m} and colours almost every
edge by the GF(2) sum of the endpoint vectors; one special vertex gets a
private palette indexed by the partner's second coordinate.  Summed around
any closed walk the vector colours telescope to zero, which forces an odd
class on every Hamilton cycle.

Vertex encoding: id = (x - 1) * 2^t + vec for vec in 0..2^t-1, x in 1..m.
Colour encoding: vector w maps to colour w + 1; the special integer colour
x in 2..m maps to 2^t + x - 1.  So r = 2^t + m - 1.
"""

from __future__ import annotations

import math
import os

import numpy as np

from .core import ColouredGraph, ParameterError
from .randgen import generator

DEFAULT_VERTEX_LIMIT = 4096


def vertex_limit() -> int:
    raw = os.environ.get("ODDRAMSEY_VERTEX_LIMIT", "").strip()
    if not raw:
        return DEFAULT_VERTEX_LIMIT
    try:
        limit = int(raw)
    except ValueError:
        raise ParameterError(f"ODDRAMSEY_VERTEX_LIMIT={raw!r} is not an integer") from None
    if limit < 1:
        raise ParameterError(f"ODDRAMSEY_VERTEX_LIMIT={limit} must be positive")
    return limit


def choose_parameters(n: int) -> tuple[int, int]:
    """Pick (t, m) with m * 2^t >= n and r = 2^t + m - 1 near 2 * sqrt(n).

    t is the integer nearest to half the base-2 logarithm of n, ties going
    down; the comparison n <= 2^(2*t0 + 1) decides it exactly in integers.
    """
    if n < 2:
        raise ParameterError(f"need at least 2 vertices, got {n}")
    t0 = (n.bit_length() - 1) // 2
    t = t0 if n <= 1 << (2 * t0 + 1) else t0 + 1
    m = -(-n // (1 << t))
    return t, m


def _check_limit(n: int) -> None:
    limit = vertex_limit()
    if n > limit:
        raise ParameterError(
            f"construction needs {n} vertices, above the limit {limit}"
            " (raise ODDRAMSEY_VERTEX_LIMIT to override)"
        )


def _field_colour(u: int, v: int, t: int, special: int) -> int:
    if u == special or v == special:
        other = v if u == special else u
        x = (other >> t) + 1
        if x == 1:
            return 1
        return (1 << t) + x - 1
    mask = (1 << t) - 1
    return ((u & mask) ^ (v & mask)) + 1


def build_field_colouring(m: int, t: int) -> ColouredGraph:
    """The parametric colouring of K_{m * 2^t} with 2^t + m - 1 colours."""
    if m < 2:
        raise ParameterError(f"need m >= 2, got {m}")
    if t < 0:
        raise ParameterError(f"need t >= 0, got {t}")
    n = m << t
    _check_limit(n)
    special = (m - 1) << t
    r = (1 << t) + m - 1
    edges = {
        (u, v): _field_colour(u, v, t, special)
        for u in range(n)
        for v in range(u + 1, n)
    }
    return ColouredGraph(n, r, edges, complete=True)


def build_general_n(n: int) -> ColouredGraph:
    """The colouring of K_n for arbitrary n, truncated from the next grid size.

    Uses choose_parameters and keeps vertex ids 0..n-1.  The special vertex
    (m - 1) * 2^t always survives the truncation.  The colour count is
    2^t + m - 1, which stays below 2.13 * sqrt(n).
    """
    t, m = choose_parameters(n)
    full = build_field_colouring(m, t)
    if full.n == n:
        return full
    edges = {k: c for k, c in full.edges.items() if k[1] < n}
    return ColouredGraph(n, full.r, edges, complete=True)


def special_vertex(n: int) -> int:
    t, m = choose_parameters(n)
    return (m - 1) << t


def build_three_block(n: int, k: int) -> ColouredGraph:
    """Two cliques joined through 2k hub vertices, using only 2k colours.

    Blocks A = 0..h-1 and B = h..2h-1 with h = n/2 - k are cliques with no
    edges between them; the last 2k vertices are adjacent to everything.
    Hub number i colours its edges into B with colour i; every other edge
    has colour 1.  Minimum degree is exactly n/2 + k - 1, and every
    Hamilton cycle has an odd colour class.
    """
    if n % 2:
        raise ParameterError(f"need even n, got {n}")
    if k < 1:
        raise ParameterError(f"need k >= 1, got {k}")
    h = n // 2 - k
    if h < 2:
        raise ParameterError(f"blocks of size {h} are too small (need n/2 - k >= 2)")
    _check_limit(n)
    edges: dict[tuple[int, int], int] = {}
    for base in (0, h):
        for i in range(base, base + h):
            for j in range(i + 1, base + h):
                edges[(i, j)] = 1
    for i in range(1, 2 * k + 1):
        hub = 2 * h + i - 1
        for a in range(h):
            edges[(a, hub)] = 1
        for b in range(h, 2 * h):
            edges[(b, hub)] = i
        for other in range(2 * h, hub):
            edges[(other, hub)] = 1
    return ColouredGraph(n, 2 * k, edges, complete=False)


def build_sparse_cayley(n: int, c: float, seed: int) -> ColouredGraph:
    """Sparse variant: keep only a seeded fraction c of the colour palette.

    A random ceil(c * 2^t) - 1 of the nonzero vectors (plus the zero
    vector) survive as connection set S; vector edges exist only when the
    endpoint sum lies in S.  The special vertex keeps its first ceil(c * m)
    integer groups.  Colours are compacted: sorted S first, then the
    surviving integer groups.  At c = 1 this reproduces build_general_n
    exactly.
    """
    if not 0 < c <= 1:
        raise ParameterError(f"need 0 < c <= 1, got {c}")
    t, m = choose_parameters(n)
    _check_limit(m << t)
    tw = 1 << t
    n_vec = math.ceil(c * tw)
    n_int = math.ceil(c * m)
    rng = generator(seed)
    if tw > 1:
        perm = rng.permutation(np.arange(1, tw))
        chosen = {int(w) for w in perm[: n_vec - 1]}
    else:
        chosen = set()
    s_sorted = sorted({0} | chosen)
    s_index = {w: i + 1 for i, w in enumerate(s_sorted)}
    r = len(s_sorted) + n_int - 1
    special = (m - 1) << t
    mask = tw - 1
    edges: dict[tuple[int, int], int] = {}
    for u in range(n):
        for v in range(u + 1, n):
            if u == special or v == special:
                other = v if u == special else u
                x = (other >> t) + 1
                if x > n_int:
                    continue
                edges[(u, v)] = 1 if x == 1 else len(s_sorted) + x - 1
            else:
                w = ((u & mask) ^ (v & mask))
                if w in s_index:
                    edges[(u, v)] = s_index[w]
    return ColouredGraph(n, r, edges, complete=len(edges) == n * (n - 1) // 2)
