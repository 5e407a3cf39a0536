"""Exhaustive parity-aware Hamilton cycle search and exact minimisation.

The enumerator fixes vertex 0 and branches on its unordered neighbour pair
{a, b} on the cycle, so each Hamilton cycle is visited exactly once.  Within
a pair the search is a depth-first walk over adjacency bitmasks carrying an
incremental colour-parity word; the last two free vertices are closed by a
flat two-order check instead of further branching.  Pruning uses adjacency
only, so a NONE answer certifies that no qualifying cycle exists.
"""

from __future__ import annotations

import itertools
import time
from collections import deque
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum

from .core import (
    ColouredGraph,
    CyclePath,
    ParameterError,
    ProcedureFailure,
    Switch,
    edge_key,
    odd_colour_classes,
)


class SearchStatus(Enum):
    WITNESS = "witness"
    NONE = "none"
    EXHAUSTED = "exhausted"


@dataclass(frozen=True)
class SearchBudget:
    """Resource bounds for exhaustive searches.

    max_cycles caps how many complete Hamilton cycles may be examined,
    max_seconds caps wall-clock time, parallel_width > 1 fans the
    neighbour-pair subtrees out over worker processes.
    """

    max_cycles: int | None = None
    max_seconds: float | None = None
    parallel_width: int = 1

    def __post_init__(self) -> None:
        if self.max_cycles is not None and self.max_cycles < 1:
            raise ParameterError("max_cycles must be positive")
        if self.max_seconds is not None and self.max_seconds <= 0:
            raise ParameterError("max_seconds must be positive")
        if self.parallel_width < 1:
            raise ParameterError("parallel_width must be at least 1")


@dataclass(frozen=True)
class SearchResult:
    status: SearchStatus
    witness: CyclePath | None
    cycles_examined: int


def _colour_bit_matrix(g: ColouredGraph) -> list[list[int]]:
    cbit = [[0] * g.n for _ in range(g.n)]
    for (u, v), c in g.edges.items():
        bit = 1 << (c - 1)
        cbit[u][v] = bit
        cbit[v][u] = bit
    return cbit


def _pair_search(
    n: int,
    adj: list[int],
    cbit: list[list[int]],
    a: int,
    b: int,
    want_even: bool,
    leaf_cap: int | None,
    deadline: float | None,
):
    """Enumerate Hamilton cycles through 0 whose cycle-neighbours of 0 are a, b.

    Returns (status, vertices_or_None, leaves) with status one of
    "witness", "done", "cap", "timeout".  Leaves counts completed cycles.
    """
    full = (1 << n) - 1
    rem0 = full & ~1 & ~(1 << a) & ~(1 << b)
    par0 = cbit[0][a] ^ cbit[0][b]
    cb = cbit
    leaves = 0

    k0 = rem0.bit_count()
    if k0 == 0:
        if (adj[a] >> b) & 1:
            if leaf_cap is not None and leaves >= leaf_cap:
                return ("cap", None, leaves)
            leaves = 1
            if not want_even or (par0 ^ cb[a][b]) == 0:
                return ("witness", [0, a, b], leaves)
        return ("done", None, leaves)
    if k0 == 1:
        u = rem0.bit_length() - 1
        if (adj[a] >> u) & 1 and (adj[u] >> b) & 1:
            if leaf_cap is not None and leaves >= leaf_cap:
                return ("cap", None, leaves)
            leaves = 1
            if not want_even or (par0 ^ cb[a][u] ^ cb[u][b]) == 0:
                return ("witness", [0, a, u, b], leaves)
        return ("done", None, leaves)

    def flat(last: int, rem2: int, par: int):
        # rem2 holds exactly two vertices; close last -> p -> q -> b both
        # ways.  The cap gate sits before each completed cycle is counted,
        # so "cap" certifies an unexamined cycle really remained.
        nonlocal leaves
        lo = rem2 & -rem2
        x = lo.bit_length() - 1
        y = (rem2 ^ lo).bit_length() - 1
        for p, q in ((x, y), (y, x)):
            if (adj[last] >> p) & 1 and (adj[p] >> q) & 1 and (adj[q] >> b) & 1:
                if leaf_cap is not None and leaves >= leaf_cap:
                    return "cap"
                leaves += 1
                if not want_even or (par ^ cb[last][p] ^ cb[p][q] ^ cb[q][b]) == 0:
                    return (p, q)
        return None

    if k0 == 2:
        got = flat(a, rem0, par0)
        if got == "cap":
            return ("cap", None, leaves)
        if got is not None:
            return ("witness", [0, a, got[0], got[1], b], leaves)
        return ("done", None, leaves)

    path = [0] * n
    cands = [0] * n
    rems = [0] * n
    pars = [0] * n
    path[0] = a
    rems[0] = rem0
    pars[0] = par0
    cands[0] = adj[a] & rem0
    d = 0
    nodes = 0
    while True:
        c = cands[d]
        if c == 0:
            d -= 1
            if d < 0:
                return ("done", None, leaves)
            continue
        nodes += 1
        if (nodes & 2047) == 0 and deadline is not None and time.monotonic() > deadline:
            return ("timeout", None, leaves)
        low = c & -c
        cands[d] = c ^ low
        v = low.bit_length() - 1
        rem = rems[d] ^ low
        par = pars[d] ^ cb[path[d]][v]
        if rem.bit_count() == 2:
            got = flat(v, rem, par)
            if got == "cap":
                return ("cap", None, leaves)
            if got is not None:
                return (
                    "witness",
                    [0] + path[: d + 1] + [v, got[0], got[1], b],
                    leaves,
                )
            continue
        d += 1
        path[d] = v
        rems[d] = rem
        pars[d] = par
        cands[d] = adj[v] & rem


def _pairs_through_zero(g: ColouredGraph) -> list[tuple[int, int]]:
    nbrs = sorted(g.neighbours(0))
    return [(a, b) for i, a in enumerate(nbrs) for b in nbrs[i + 1 :]]


_WORKER_STATE: dict = {}


def _init_worker(n: int, adj: list[int], cbit: list[list[int]], want_even: bool) -> None:
    _WORKER_STATE["args"] = (n, adj, cbit, want_even)


def _worker_pair(a: int, b: int, leaf_cap: int | None, deadline: float | None):
    n, adj, cbit, want_even = _WORKER_STATE["args"]
    return _pair_search(n, adj, cbit, a, b, want_even, leaf_cap, deadline)


def _finish_witness(g: ColouredGraph, want_even: bool, wit: list[int], examined: int) -> SearchResult:
    cycle = CyclePath(tuple(wit), closed=True)
    cycle.validate_in(g)
    if want_even and odd_colour_classes(g, cycle):
        raise ProcedureFailure("search produced a witness with odd colour classes")
    return SearchResult(SearchStatus.WITNESS, cycle, examined)


def _search(g: ColouredGraph, want_even: bool, budget: SearchBudget | None) -> SearchResult:
    if g.n < 3:
        return SearchResult(SearchStatus.NONE, None, 0)
    budget = budget or SearchBudget()
    deadline = (
        time.monotonic() + budget.max_seconds if budget.max_seconds is not None else None
    )
    pairs = _pairs_through_zero(g)
    adj = list(g.adj_bits)
    cbit = _colour_bit_matrix(g)
    if budget.parallel_width > 1 and len(pairs) > 1:
        return _search_parallel(g, want_even, budget, pairs, adj, cbit, deadline)
    examined = 0
    for a, b in pairs:
        cap = None if budget.max_cycles is None else budget.max_cycles - examined
        status, wit, leaves = _pair_search(
            g.n, adj, cbit, a, b, want_even, cap, deadline
        )
        examined += leaves
        if status == "witness":
            return _finish_witness(g, want_even, wit, examined)
        if status in ("cap", "timeout"):
            return SearchResult(SearchStatus.EXHAUSTED, None, examined)
        # a "done" pair at the cycle cap is not yet exhaustion: remaining
        # pairs get a zero allowance and report "cap" iff cycles remain
    return SearchResult(SearchStatus.NONE, None, examined)


def _search_parallel(g, want_even, budget, pairs, adj, cbit, deadline) -> SearchResult:
    # Futures are consumed strictly in submission order and each leaf cap is
    # fixed at submission time, so results are reproducible across widths.
    examined = 0
    it = iter(pairs)
    window: deque = deque()
    with ProcessPoolExecutor(
        max_workers=budget.parallel_width,
        initializer=_init_worker,
        initargs=(g.n, adj, cbit, want_even),
    ) as pool:

        def submit_next() -> bool:
            try:
                a, b = next(it)
            except StopIteration:
                return False
            cap = None
            if budget.max_cycles is not None:
                cap = max(budget.max_cycles - examined, 1)
            window.append(pool.submit(_worker_pair, a, b, cap, deadline))
            return True

        for _ in range(2 * budget.parallel_width):
            if not submit_next():
                break
        while window:
            status, wit, leaves = window.popleft().result()
            examined += leaves
            if status == "witness":
                for f in window:
                    f.cancel()
                return _finish_witness(g, want_even, wit, examined)
            if status in ("cap", "timeout") or (
                budget.max_cycles is not None and examined >= budget.max_cycles
            ):
                for f in window:
                    f.cancel()
                return SearchResult(SearchStatus.EXHAUSTED, None, examined)
            submit_next()
    return SearchResult(SearchStatus.NONE, None, examined)


def find_even_coloured_hc(g: ColouredGraph, budget: SearchBudget | None = None) -> SearchResult:
    """Search for a Hamilton cycle on which every colour class is even.

    NONE means the whole cycle space was enumerated and no such cycle
    exists; EXHAUSTED means the budget ran out first.
    """
    return _search(g, True, budget)


def find_hamilton_cycle(g: ColouredGraph, budget: SearchBudget | None = None) -> SearchResult:
    """First Hamilton cycle found, colours ignored."""
    return _search(g, False, budget)


def find_switch(g: ColouredGraph, forbidden=frozenset()) -> Switch | None:
    """Find four vertices whose square has parity on exactly two colours.

    Scans diagonals (p, q) and classifies their common neighbours by the
    parity word of the two-edge path p-m-q.  Two midpoints whose words
    differ in exactly two bits close a switch.  The scan is exhaustive, so
    None certifies that no switch avoids the forbidden set.
    """
    fmask = 0
    for w in forbidden:
        fmask |= 1 << w
    adj = g.adj_bits
    for p in range(g.n):
        if (fmask >> p) & 1:
            continue
        ap = adj[p] & ~fmask
        for q in range(p + 1, g.n):
            if (fmask >> q) & 1:
                continue
            commons = ap & adj[q]
            seen: dict[int, int] = {}
            m = commons
            while m:
                low = m & -m
                m ^= low
                mid = low.bit_length() - 1
                word = (1 << (g.colour(p, mid) - 1)) ^ (1 << (g.colour(mid, q) - 1))
                if word in seen:
                    continue
                for other_word, other_mid in seen.items():
                    if (word ^ other_word).bit_count() == 2:
                        return Switch.from_cycle(g, p, mid, q, other_mid)
                seen[word] = mid
    return None


def _odd_c4(g: ColouredGraph, fmask: int) -> CyclePath | None:
    adj = g.adj_bits
    for x in range(g.n):
        if (fmask >> x) & 1:
            continue
        for y in range(x + 1, g.n):
            if (fmask >> y) & 1:
                continue
            commons = adj[x] & adj[y] & ~fmask
            same = diff = -1
            m = commons
            while m:
                low = m & -m
                m ^= low
                w = low.bit_length() - 1
                if g.colour(x, w) == g.colour(w, y):
                    if same < 0:
                        same = w
                else:
                    if diff < 0:
                        diff = w
                if same >= 0 and diff >= 0:
                    return CyclePath((x, same, y, diff))
    return None


def _odd_c6(g: ColouredGraph, fmask: int) -> CyclePath | None:
    adj = g.adj_bits
    n = g.n
    combos = ((1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 1, 1))
    for x in range(n):
        if (fmask >> x) & 1:
            continue
        for y in range(x + 1, n):
            if (fmask >> y) & 1:
                continue
            for z in range(y + 1, n):
                if (fmask >> z) & 1:
                    continue
                excl = fmask | (1 << x) | (1 << y) | (1 << z)
                lists = []
                for a, b in ((x, y), (y, z), (z, x)):
                    commons = adj[a] & adj[b] & ~excl
                    same: list[int] = []
                    diff: list[int] = []
                    m = commons
                    # Three candidates per pattern suffice for a distinct triple.
                    while m and (len(same) < 3 or len(diff) < 3):
                        low = m & -m
                        m ^= low
                        w = low.bit_length() - 1
                        if g.colour(a, w) == g.colour(w, b):
                            if len(same) < 3:
                                same.append(w)
                        elif len(diff) < 3:
                            diff.append(w)
                    lists.append((same, diff))
                for d1, d2, d3 in combos:
                    l1 = lists[0][d1]
                    l2 = lists[1][d2]
                    l3 = lists[2][d3]
                    for u in l1:
                        for v in l2:
                            if v == u:
                                continue
                            for w in l3:
                                if w == u or w == v:
                                    continue
                                return CyclePath((x, u, y, v, z, w))
    return None


def find_odd_cycle(g: ColouredGraph, length: int, forbidden=frozenset()) -> CyclePath | None:
    """For a two-coloured host: a 4- or 6-cycle with both colours odd.

    Exhaustive over diagonal pairs (length 4) or alternation triples
    (length 6); None certifies absence outside the forbidden set.
    """
    if g.r != 2:
        raise ParameterError("odd cycle search needs exactly two colours")
    fmask = 0
    for w in forbidden:
        fmask |= 1 << w
    if length == 4:
        return _odd_c4(g, fmask)
    if length == 6:
        return _odd_c6(g, fmask)
    raise ParameterError(f"length must be 4 or 6, got {length}")


@dataclass(frozen=True)
class ExactResult:
    """Outcome of exact colour-count minimisation.

    value is None when the budget ran out, in which case the answer is
    bracketed by [lower, upper].  witness carries a colouring attaining
    value when one was computed.
    """

    value: int | None
    lower: int
    upper: int
    witness: ColouredGraph | None = None

    @property
    def exact(self) -> bool:
        return self.value is not None


def _host_hamilton_cycles(n: int, adjacency: list[int], edge_index: dict) -> list[tuple[int, ...]]:
    """All Hamilton cycles of the host, as tuples of edge indices."""
    out = []
    for perm in itertools.permutations(range(1, n)):
        if perm[0] > perm[-1]:
            continue
        prev = 0
        idxs = []
        ok = True
        for v in perm:
            if not (adjacency[prev] >> v) & 1:
                ok = False
                break
            idxs.append(edge_index[edge_key(prev, v)])
            prev = v
        if ok and (adjacency[prev] >> 0) & 1:
            idxs.append(edge_index[edge_key(prev, 0)])
            out.append(tuple(idxs))
    return out


def _surjective_colourings(m: int, r: int):
    """Colour sequences of length m using exactly r colours, first-use ordered.

    Canonical under colour permutation: colour i appears before the first
    use of colour i + 1.
    """
    col = [0] * m

    def rec(i: int, mx: int):
        if i == m:
            if mx == r:
                yield tuple(col)
            return
        if mx + (m - i) < r:
            return
        top = min(mx + 1, r)
        for c in range(1, top + 1):
            col[i] = c
            yield from rec(i + 1, mx if c <= mx else c)

    yield from rec(0, 0)


def exact_odd_ramsey(
    n: int,
    edges: set[tuple[int, int]] | None = None,
    budget: SearchBudget | None = None,
) -> ExactResult:
    """Smallest colour count admitting a colouring with no even-coloured HC.

    edges None means the complete host.  Odd vertex counts and
    non-Hamiltonian hosts need one colour.  Otherwise colourings are
    enumerated per colour count in first-use canonical order; for complete
    hosts the parametric construction caps the range and is verified by
    the exhaustive oracle.  budget.max_cycles is read as a cap on the
    number of colourings examined.
    """
    if n < 1:
        raise ParameterError(f"need at least one vertex, got {n}")
    complete = edges is None
    if complete:
        edges = {(u, v) for u in range(n) for v in range(u + 1, n)}
    else:
        edges = {edge_key(u, v) for (u, v) in edges}
        for u, v in edges:
            if not 0 <= u < v < n:
                raise ParameterError(f"edge ({u}, {v}) outside 0..{n - 1}")
    budget = budget or SearchBudget()
    mono = ColouredGraph(n, 1, {e: 1 for e in sorted(edges)}, complete=complete)

    if n % 2 == 1 or n < 3:
        return ExactResult(1, 1, 1, mono)
    ham = find_hamilton_cycle(mono, SearchBudget(max_seconds=budget.max_seconds))
    if ham.status == SearchStatus.NONE:
        return ExactResult(1, 1, 1, mono)
    if ham.status == SearchStatus.EXHAUSTED:
        raise ParameterError("budget too small to settle host Hamiltonicity")

    m = len(edges)
    upper = m
    upper_witness = ColouredGraph(
        n, m, {e: i + 1 for i, e in enumerate(sorted(edges))}, complete=complete
    )
    if complete:
        from .constructions import build_general_n

        candidate = build_general_n(n)
        check = find_even_coloured_hc(candidate, budget)
        if check.status == SearchStatus.NONE and candidate.r < upper:
            upper = candidate.r
            upper_witness = candidate

    if n > 8:
        raise ParameterError("exact enumeration is limited to hosts on at most 8 vertices")

    sorted_edges = sorted(edges)
    edge_index = {e: i for i, e in enumerate(sorted_edges)}
    cycles = _host_hamilton_cycles(n, list(mono.adj_bits), edge_index)
    deadline = (
        time.monotonic() + budget.max_seconds if budget.max_seconds is not None else None
    )
    checked = 0
    for r in range(2, upper):
        for col in _surjective_colourings(m, r):
            checked += 1
            if budget.max_cycles is not None and checked > budget.max_cycles:
                return ExactResult(None, r, upper, None)
            if deadline is not None and (checked & 255) == 0 and time.monotonic() > deadline:
                return ExactResult(None, r, upper, None)
            good = True
            for cyc in cycles:
                bits = 0
                for ei in cyc:
                    bits ^= 1 << (col[ei] - 1)
                if bits == 0:
                    good = False
                    break
            if good:
                witness = ColouredGraph(
                    n, r, {e: col[i] for i, e in enumerate(sorted_edges)}, complete=complete
                )
                return ExactResult(r, r, r, witness)
    return ExactResult(upper, upper, upper, upper_witness)
