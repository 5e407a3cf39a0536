"""Even-coloured Hamilton cycles in dense two-coloured graphs.

The entry point is even_hc_super_dirac: for a two-coloured host with
minimum degree at least n/2 + 4 and an even vertex count it returns a
Hamilton cycle on which both colour classes are even.  The strategy is to
find a short cycle that is odd in both colours, extend it to two Hamilton
cycles differing exactly in the alternation of that short cycle, and keep
the even one.  When no such short cycle exists the colouring is rigid
enough that any Hamilton cycle works.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import (
    ColouredGraph,
    CyclePath,
    ParameterError,
    ProcedureFailure,
    edge_key,
    odd_colour_classes,
)

_PATH_NODE_BUDGET = 5_000_000


def hamilton_cycle_dirac(g: ColouredGraph) -> CyclePath:
    """Hamilton cycle of a graph with minimum degree at least n/2.

    Deterministic rotation argument: grow a maximal path, close it with a
    crossing chord (guaranteed by the degree bound), then absorb an
    outside vertex and repeat.  Colours are ignored.
    """
    n = g.n
    if n < 3:
        raise ParameterError("Hamilton cycles need at least three vertices")
    if 2 * g.min_degree() < n:
        raise ParameterError("minimum degree below half the vertex count")
    adj = g.adj_bits
    on = 1
    path = [0]
    while True:
        on = _extend_both(path, on, adj)
        cycle = _close_maximal_path(path, adj)
        if len(cycle) == n:
            return CyclePath(tuple(cycle))
        w, j = _absorption_point(cycle, on, adj, n)
        path = [w] + cycle[j:] + cycle[:j]
        on |= 1 << w


def _extend_both(path: list[int], on: int, adj: list[int]) -> int:
    while True:
        free = adj[path[-1]] & ~on
        if free:
            v = (free & -free).bit_length() - 1
            path.append(v)
            on |= 1 << v
            continue
        free = adj[path[0]] & ~on
        if free:
            v = (free & -free).bit_length() - 1
            path.insert(0, v)
            on |= 1 << v
            continue
        return on


def _close_maximal_path(path: list[int], adj: list[int]) -> list[int]:
    head, tail = path[0], path[-1]
    if (adj[head] >> tail) & 1:
        return list(path)
    for i in range(len(path) - 1):
        if (adj[tail] >> path[i]) & 1 and (adj[head] >> path[i + 1]) & 1:
            return path[: i + 1] + path[i + 1 :][::-1]
    raise ProcedureFailure("maximal path did not close; degree bound violated")


def _absorption_point(cycle: list[int], on: int, adj: list[int], n: int):
    pos = {v: i for i, v in enumerate(cycle)}
    for w in range(n):
        if (on >> w) & 1:
            continue
        hits = adj[w] & on
        if hits:
            j = min(pos[b.bit_length() - 1] for b in _bits(hits))
            return w, j
    raise ProcedureFailure("cycle absorbed no vertex; graph disconnected")


def _bits(mask: int):
    while mask:
        low = mask & -mask
        mask ^= low
        yield low


def short_path_avoiding(g: ColouredGraph, a: int, b: int, avoid=frozenset()) -> list[int]:
    """Path from a to b of length at most two, avoiding the given vertices."""
    if g.has_edge(a, b):
        return [a, b]
    excl = 0
    for w in avoid:
        excl |= 1 << w
    excl |= (1 << a) | (1 << b)
    commons = g.adj_bits[a] & g.adj_bits[b] & ~excl
    if commons:
        w = (commons & -commons).bit_length() - 1
        return [a, w, b]
    raise ProcedureFailure(f"no short path from {a} to {b} outside the avoided set")


def hamilton_path_avoiding(g: ColouredGraph, a: int, b: int, avoid=frozenset()) -> list[int]:
    """Hamilton path from a to b in the graph minus the avoided vertices.

    Exact backtracking over adjacency bitmasks with degree, endpoint and
    connectivity pruning, candidates ordered by fewest onward moves.  A
    surviving minimum degree of at least (n' + 1) / 2 guarantees a path
    exists; the search is exhaustive either way.
    """
    avoid = frozenset(avoid)
    if a == b or a in avoid or b in avoid:
        raise ParameterError("endpoints must be distinct and outside the avoided set")
    n = g.n
    allowed = (1 << n) - 1
    for w in avoid:
        if not 0 <= w < n:
            raise ParameterError(f"avoided vertex {w} out of range")
        allowed &= ~(1 << w)
    adj = [g.adj_bits[v] & allowed if (allowed >> v) & 1 else 0 for v in range(n)]
    bbit = 1 << b
    nodes = 0

    def reaches_all(cur: int, unvisited: int) -> bool:
        seen = 1 << cur
        frontier = adj[cur] & unvisited
        while frontier:
            seen |= frontier
            nxt = 0
            m = frontier
            while m:
                low = m & -m
                m ^= low
                nxt |= adj[low.bit_length() - 1]
            frontier = nxt & unvisited & ~seen
        return unvisited & ~seen == 0

    def dfs(cur: int, unvisited: int, trail: list[int]) -> bool:
        nonlocal nodes
        nodes += 1
        if nodes > _PATH_NODE_BUDGET:
            raise ProcedureFailure("path search budget exhausted")
        if unvisited == bbit:
            if (adj[cur] >> b) & 1:
                trail.append(b)
                return True
            return False
        curbit = 1 << cur
        rest = unvisited & ~bbit
        m = rest
        while m:
            low = m & -m
            m ^= low
            w = low.bit_length() - 1
            if (adj[w] & ((unvisited ^ low) | curbit)).bit_count() < 2:
                return False
        if not adj[b] & ((unvisited ^ bbit) | curbit):
            return False
        if not reaches_all(cur, unvisited):
            return False
        cands = sorted(
            (lo.bit_length() - 1 for lo in _bits(adj[cur] & rest)),
            key=lambda w: ((adj[w] & unvisited).bit_count(), w),
        )
        for w in cands:
            trail.append(w)
            if dfs(w, unvisited ^ (1 << w), trail):
                return True
            trail.pop()
        return False

    unvisited = allowed & ~(1 << a)
    trail = [a]
    if unvisited == 0:
        raise ParameterError("no interior vertices left for a path")
    if dfs(a, unvisited, trail):
        return trail
    raise ProcedureFailure(f"no Hamilton path from {a} to {b} avoiding {sorted(avoid)}")


@dataclass(frozen=True)
class AgreeMatrix:
    """Pairwise cherry classification of a two-coloured graph.

    For each vertex pair the common neighbours are scanned: a pair is
    "agree" when every common neighbour sees both with one colour,
    "disagree" when every common neighbour sees them with opposite
    colours, "mixed" when both kinds occur, and "none" without commons.
    """

    n: int
    kinds: dict
    same_witness: dict
    diff_witness: dict

    def kind(self, u: int, v: int) -> str:
        return self.kinds[edge_key(u, v)]


def build_agree_matrix(g: ColouredGraph) -> AgreeMatrix:
    if g.r != 2:
        raise ParameterError("agreement analysis needs exactly two colours")
    adj = g.adj_bits
    kinds: dict = {}
    same_w: dict = {}
    diff_w: dict = {}
    for u in range(g.n):
        for v in range(u + 1, g.n):
            commons = adj[u] & adj[v]
            same = diff = -1
            m = commons
            while m:
                low = m & -m
                m ^= low
                w = low.bit_length() - 1
                if g.colour(u, w) == g.colour(v, w):
                    if same < 0:
                        same = w
                else:
                    if diff < 0:
                        diff = w
                if same >= 0 and diff >= 0:
                    break
            key = (u, v)
            if same >= 0 and diff >= 0:
                kinds[key] = "mixed"
            elif same >= 0:
                kinds[key] = "agree"
            elif diff >= 0:
                kinds[key] = "disagree"
            else:
                kinds[key] = "none"
            if same >= 0:
                same_w[key] = same
            if diff >= 0:
                diff_w[key] = diff
    return AgreeMatrix(g.n, kinds, same_w, diff_w)


def classify_two_colouring(g: ColouredGraph, am: AgreeMatrix | None = None):
    """Decide which short-cycle source the colouring offers.

    Returns one of
      ("mixed", (u, v))                 a pair with both cherry kinds,
      ("agree-violation", (x, y, z))    agree(x,y), agree(y,z), disagree(x,z),
      ("agree-components", (x, y, z))   representatives of three agree classes,
      ("transitive", components)        at most two clean agreement classes.
    """
    am = am or build_agree_matrix(g)
    for key, kind in am.kinds.items():
        if kind == "none":
            raise ProcedureFailure(f"pair {key} has no common neighbours")
        if kind == "mixed":
            return ("mixed", key)
    agree_adj: dict[int, list[int]] = {v: [] for v in range(g.n)}
    for (u, v), kind in am.kinds.items():
        if kind == "agree":
            agree_adj[u].append(v)
            agree_adj[v].append(u)
    seen: set[int] = set()
    comps: list[list[int]] = []
    parents: list[dict[int, int]] = []
    for s in range(g.n):
        if s in seen:
            continue
        parent = {s: s}
        order = [s]
        seen.add(s)
        i = 0
        while i < len(order):
            for w in sorted(agree_adj[order[i]]):
                if w not in parent:
                    parent[w] = order[i]
                    order.append(w)
                    seen.add(w)
            i += 1
        comps.append(order)
        parents.append(parent)
    for comp, parent in zip(comps, parents):
        ordered = sorted(comp)
        for ai in range(len(ordered)):
            for bi in range(ai + 1, len(ordered)):
                p, q = ordered[ai], ordered[bi]
                if am.kind(p, q) != "disagree":
                    continue
                walk = [q]
                while walk[-1] != p:
                    walk.append(parent[walk[-1]])
                walk.reverse()
                for i in range(2, len(walk)):
                    if am.kind(p, walk[i]) == "disagree":
                        return ("agree-violation", (p, walk[i - 1], walk[i]))
                raise ProcedureFailure("disagreeing pair without a violation point")
    if len(comps) >= 3:
        reps = tuple(sorted(min(c) for c in comps)[:3])
        return ("agree-components", reps)
    return ("transitive", tuple(tuple(sorted(c)) for c in comps))


def odd_cycle_from_triple(g: ColouredGraph, x: int, y: int, z: int) -> CyclePath:
    """Six-cycle through x, y, z via distinct common neighbours.

    The triple must have an odd number of disagreeing pairs among its
    pure cherry patterns, which makes the result odd in both colours.
    """
    adj = g.adj_bits
    used = (1 << x) | (1 << y) | (1 << z)
    mids = []
    for a, b in ((x, y), (y, z), (z, x)):
        commons = adj[a] & adj[b] & ~used
        if not commons:
            raise ProcedureFailure(f"pair ({a}, {b}) has no spare common neighbour")
        w = (commons & -commons).bit_length() - 1
        mids.append(w)
        used |= 1 << w
    cyc = CyclePath((x, mids[0], y, mids[1], z, mids[2]))
    if odd_colour_classes(g, cyc) != (1, 2):
        raise ProcedureFailure("triple did not yield a doubly odd six-cycle")
    return cyc


def even_hc_from_odd_cycle(g: ColouredGraph, cycle: CyclePath) -> CyclePath:
    """Extend a doubly odd 4- or 6-cycle to an even-coloured Hamilton cycle.

    Two Hamilton cycles are assembled over the same connecting paths, one
    using each alternation class of the short cycle.  Their parities
    differ by the full parity of the short cycle, so exactly one of the
    two is even in both colours.
    """
    if g.r != 2:
        raise ParameterError("needs exactly two colours")
    if g.n % 2 != 0:
        raise ParameterError("needs an even vertex count")
    vs = cycle.vertices
    if odd_colour_classes(g, cycle) != (1, 2):
        raise ParameterError("short cycle must be odd in both colours")
    if len(vs) == 4:
        u, v, x, y = vs
        q = short_path_avoiding(g, v, y, {u, x})
        p = hamilton_path_avoiding(g, x, u, set(q))
        first = [u] + q + p[:-1]
        second = [u] + q[::-1] + p[:-1]
    elif len(vs) == 6:
        u, v, w, x, y, z = vs
        q1 = short_path_avoiding(g, v, z, {u, w, x, y})
        q2 = short_path_avoiding(g, y, w, {u, x} | set(q1))
        p = hamilton_path_avoiding(g, x, u, set(q1) | set(q2))
        first = [u] + q1 + q2 + p[:-1]
        second = [u] + q1[::-1] + q2[::-1] + p[:-1]
    else:
        raise ParameterError("short cycle must have four or six vertices")
    out = []
    for seq in (first, second):
        cand = CyclePath(tuple(seq))
        cand.validate_in(g)
        if not cand.is_hamilton(g):
            raise ProcedureFailure("assembled cycle is not Hamilton")
        out.append(cand)
    evens = [c for c in out if not odd_colour_classes(g, c)]
    if len(evens) != 1:
        raise ProcedureFailure("alternation classes did not split even and odd")
    return evens[0]


def even_hc_super_dirac(g: ColouredGraph) -> CyclePath:
    """Even-coloured Hamilton cycle under the strengthened degree bound.

    Needs two colours, an even vertex count and minimum degree at least
    n/2 + 4.  Raises ProcedureFailure only if an internal guarantee is
    violated, which would indicate a bug rather than bad luck.
    """
    if g.r != 2:
        raise ParameterError("needs exactly two colours")
    if g.n % 2 != 0:
        raise ParameterError("needs an even vertex count")
    if 2 * g.min_degree() < g.n + 8:
        raise ParameterError("needs minimum degree at least n/2 + 4")
    am = build_agree_matrix(g)
    branch, payload = classify_two_colouring(g, am)
    if branch == "mixed":
        u, v = payload
        short = CyclePath((u, am.same_witness[(u, v)], v, am.diff_witness[(u, v)]))
        hc = even_hc_from_odd_cycle(g, short)
    elif branch in ("agree-violation", "agree-components"):
        hc = even_hc_from_odd_cycle(g, odd_cycle_from_triple(g, *payload))
    else:
        hc = hamilton_cycle_dirac(g)
        if odd_colour_classes(g, hc):
            raise ProcedureFailure("transitive colouring produced an odd Hamilton cycle")
    if odd_colour_classes(g, hc):
        raise ProcedureFailure("result failed the final parity audit")
    return hc
