"""Constructive pipeline: a Hamilton cycle with at most one odd colour class.

Given any r-colouring of a complete host on enough vertices, the driver
builds a small starter structure of even monochromatic cycles, then runs
rounds that embed parity-cancelling switch gadgets and merge colour pairs
until either a single merged colour remains or the sparse remainder is
rigid enough to attach directly.  A replay phase then unwinds the merges,
flipping embedded switches as needed, so the final cycle has at most one
odd class under the original colours.

Stage sizes are tracked in an audit log with explicit bounds so test
suites can assert the invariants rather than trust them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

from .core import (
    ColouredGraph,
    CyclePath,
    MergeRegister,
    ParameterError,
    PipelineError,
    ProcedureFailure,
    Switch,
    flip_switch_in_cycle,
    odd_colour_classes,
)
from .gf2 import first_dependency
from .oracle import find_switch


class CapacityError(PipelineError):
    """A sparse-remainder stage ran out of attachment room."""


def even_ceil(x: float) -> int:
    """Smallest even integer >= x."""
    k = math.ceil(x)
    return k + (k % 2)


def threshold_vertices(r: int) -> float:
    """Host size above which the pipeline's guarantees are unconditional."""
    if r < 1:
        raise ParameterError("colour count must be positive")
    return 2.0 * r * r + 40.0 * r ** 1.5


@dataclass(frozen=True)
class AuditEntry:
    stage: str
    detail: str
    ok: bool
    value: float | None = None
    bound: float | None = None


@dataclass
class AuditLog:
    entries: list[AuditEntry] = field(default_factory=list)

    def check(
        self,
        stage: str,
        ok: bool,
        detail: str = "",
        value: float | None = None,
        bound: float | None = None,
    ) -> None:
        self.entries.append(AuditEntry(stage, detail, bool(ok), value, bound))

    def bounded(self, stage: str, value: float, bound: float, detail: str = "") -> None:
        self.check(stage, value <= bound + 1e-9, detail, value, bound)

    def violations(self) -> tuple[AuditEntry, ...]:
        return tuple(e for e in self.entries if not e.ok)


def _lsb(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def _extend_path(adj: list[int], path: list[int], on: int) -> tuple[int, bool]:
    grew = False
    while True:
        free = adj[path[-1]] & ~on
        if free:
            v = _lsb(free)
            path.append(v)
            on |= 1 << v
            grew = True
            continue
        free = adj[path[0]] & ~on
        if free:
            v = _lsb(free)
            path.insert(0, v)
            on |= 1 << v
            grew = True
            continue
        return on, grew


def _posa_path(adj: list[int], comp: list[int]) -> list[int]:
    """Long path in a component: greedy growth plus bounded end rotations."""
    path = [min(comp)]
    on = 1 << path[0]
    on, _ = _extend_path(adj, path, on)
    budget = 16 * len(comp) + 64
    while len(path) < len(comp) and budget > 0:
        advanced = False
        for _orient in range(2):
            seen = {path[-1]}
            while budget > 0:
                budget -= 1
                pos = {v: i for i, v in enumerate(path)}
                best = None
                m = adj[path[-1]] & on
                while m:
                    w = _lsb(m)
                    m &= m - 1
                    i = pos[w]
                    if i + 2 < len(path):
                        cand = path[i + 1]
                        if cand not in seen and (best is None or cand < best[0]):
                            best = (cand, i)
                if best is None:
                    break
                _, i = best
                path[i + 1 :] = path[i + 1 :][::-1]
                seen.add(path[-1])
                on, grew = _extend_path(adj, path, on)
                if grew:
                    advanced = True
                    break
            if advanced:
                break
            path.reverse()
        if not advanced:
            break
    return path


def _window_cycle(adj: list[int], path: list[int], lo: int, hi: int) -> list[int] | None:
    """First chord-closed window of even length in [lo, hi], longest first."""
    k = len(path)
    top = min(hi, k)
    top -= top % 2
    for length in range(top, lo - 1, -2):
        for i in range(0, k - length + 1):
            if (adj[path[i]] >> path[i + length - 1]) & 1:
                return path[i : i + length]
    return None


def _window_cycle_over(adj: list[int], path: list[int], cap: int) -> list[int] | None:
    """Smallest chord-closed window of even length strictly above cap."""
    k = len(path)
    for length in range(cap + 2, k + 1, 2):
        for i in range(0, k - length + 1):
            if (adj[path[i]] >> path[i + length - 1]) & 1:
                return path[i : i + length]
    return None


def _exhaustive_even_cycle(
    adj: list[int], comp: list[int], min_len: int, cap: int | None
) -> list[int] | None:
    """Small-component fallback: exact search for an even cycle of fitting length."""
    limit = cap if cap is not None else len(comp)
    best_over: list[int] | None = None
    nodes = 0

    for start in sorted(comp):
        stack: list[tuple[int, int, list[int]]] = [(start, 1 << start, [start])]
        while stack:
            v, on, path = stack.pop()
            nodes += 1
            if nodes > 250_000:
                return best_over
            m = adj[v]
            closing = bool((m >> start) & 1)
            L = len(path)
            if closing and L >= min_len and L % 2 == 0:
                if L <= limit:
                    return path
                if best_over is None or L < len(best_over):
                    best_over = list(path)
            nbrs = []
            mm = m & ~on
            while mm:
                w = _lsb(mm)
                mm &= mm - 1
                if w > start:
                    nbrs.append(w)
            for w in reversed(nbrs):
                stack.append((w, on | (1 << w), path + [w]))
    return best_over


def find_long_even_mono_cycle(
    g: ColouredGraph, allowed, min_len: int, cap: int | None = None
) -> tuple[int, list[int]]:
    """Even cycle of one colour within the allowed vertices.

    Colour classes are tried densest first.  The preferred result has
    even length between min_len and cap; failing that, the shortest even
    cycle above cap is returned for the caller to shrink.  Raises
    ProcedureFailure when no class yields anything.
    """
    pool = sorted(set(allowed))
    if min_len < 4 or min_len % 2:
        raise ParameterError("min_len must be an even number at least 4")
    amask = 0
    for v in pool:
        if not 0 <= v < g.n:
            raise ParameterError(f"allowed vertex {v} out of range")
        amask |= 1 << v
    counts: dict[int, int] = {}
    for (u, v), c in g.edges.items():
        if (amask >> u) & 1 and (amask >> v) & 1:
            counts[c] = counts.get(c, 0) + 1
    if not counts:
        raise ProcedureFailure("no edges inside the allowed set")
    order = sorted(counts, key=lambda c: (-counts[c], c))
    densest_deg = 2 * counts[order[0]] / max(1, len(pool))
    for colour in order:
        cadj = [0] * g.n
        for (u, v), c in g.edges.items():
            if c == colour and (amask >> u) & 1 and (amask >> v) & 1:
                cadj[u] |= 1 << v
                cadj[v] |= 1 << u
        seen = 0
        comps: list[list[int]] = []
        for v in pool:
            if (seen >> v) & 1 or cadj[v] == 0:
                continue
            frontier = 1 << v
            members = 0
            while frontier:
                members |= frontier
                nxt = 0
                m = frontier
                while m:
                    w = _lsb(m)
                    m &= m - 1
                    nxt |= cadj[w]
                frontier = nxt & ~members
            seen |= members
            comp = []
            m = members
            while m:
                comp.append(_lsb(m))
                m &= m - 1
            comps.append(comp)
        comps.sort(key=lambda c: (-len(c), min(c)))
        for comp in comps:
            if len(comp) < min_len:
                break
            path = _posa_path(cadj, comp)
            cyc = _window_cycle(cadj, path, min_len, cap if cap is not None else len(path))
            if cyc is None and cap is not None:
                cyc = _window_cycle_over(cadj, path, cap)
            if cyc is None and len(comp) <= 20:
                cyc = _exhaustive_even_cycle(cadj, comp, min_len, cap)
            if cyc is not None:
                return colour, cyc
    raise ProcedureFailure(
        "no colour class held a long even cycle "
        f"(densest class has average degree {densest_deg:.1f}, needed {min_len})"
    )


def shorten_with_cherries(
    g: ColouredGraph, cycle: list[int], reserve: int, r: int
) -> tuple[list[int], int, list[int]]:
    """Shrink an even monochromatic cycle to length at most 8r.

    Each pass probes edges from the spare vertex to every fourth cycle
    position; two of the r+1 probes share a colour, and rerouting through
    the spare between those positions drops an even number of vertices
    while keeping every two-step arc between even positions balanced.
    The spare is consumed and the smallest dropped vertex replaces it.
    """
    work = list(cycle)
    if len(work) % 2:
        raise ParameterError("cycle length must be even")
    spare = reserve
    released: list[int] = []
    while len(work) > 8 * r:
        first_at: dict[int, int] = {}
        pick = None
        for p in range(0, 4 * r + 1, 4):
            c = g.colour(spare, work[p])
            if c in first_at:
                pick = (first_at[c], p)
                break
            first_at[c] = p
        if pick is None:
            raise PipelineError("r+1 probes used r colours without a repeat")
        p, q = pick
        dropped = work[p + 1 : q]
        work = work[: p + 1] + [spare] + work[q:]
        spare = min(dropped)
        released.extend(v for v in dropped if v != spare)
    return work, spare, released


@dataclass
class SpicyComponent:
    """One even cycle of the starter structure, mutated in place by splices."""

    colour: int
    cycle: list[int]


@dataclass
class _Slot:
    comp: int
    a: int
    b: int


class SpicyState:
    """Mutable pipeline state: components, colour merges, splice log."""

    def __init__(
        self,
        g: ColouredGraph,
        components: list[SpicyComponent],
        reserve: int,
        slots: list[_Slot],
    ) -> None:
        self.g = g
        self.n = g.n
        self.r = g.r
        self.components = components
        self.reserve = reserve
        self.slots = slots
        self.parent = list(range(g.r + 1))
        self.register = MergeRegister()
        self.spliced: list[Switch] = []
        self.present = sorted(set(g.edges.values()))
        self.rounds = 0
        self._embedded: set[int] = set()
        for comp in components:
            self._embedded.update(comp.cycle)

    def root(self, c: int) -> int:
        while self.parent[c] != c:
            self.parent[c] = self.parent[self.parent[c]]
            c = self.parent[c]
        return c

    def live_colours(self) -> list[int]:
        return sorted({self.root(c) for c in self.present})

    def embedded(self) -> frozenset[int]:
        return frozenset(self._embedded)

    def free_vertices(self) -> list[int]:
        return [v for v in range(self.n) if v not in self._embedded]

    def live_graph(self) -> ColouredGraph:
        mapping = {c: self.root(c) for c in range(1, self.r + 1)}
        if all(mapping[c] == c for c in self.present):
            return self.g
        return self.g.recoloured(mapping, self.r)

    def splice(self, slot_idx: int, sw: Switch) -> None:
        slot = self.slots[slot_idx]
        cyc = self.components[slot.comp].cycle
        i = cyc.index(slot.a)
        if cyc[(i + 1) % len(cyc)] != slot.b:
            raise PipelineError(f"slot edge ({slot.a}, {slot.b}) lost adjacency")
        cyc[i + 1 : i + 1] = [sw.u, sw.v, sw.y, sw.x]
        slot.a, slot.b = sw.v, sw.y
        self._embedded.update(sw.square)
        self.spliced.append(sw)

    def merge(self, sw: Switch) -> tuple[int, int] | None:
        ra, rb = self.root(sw.c1), self.root(sw.c2)
        if ra == rb:
            return None
        kept, retired = (ra, rb) if ra < rb else (rb, ra)
        self.parent[retired] = kept
        self.register.record(kept, retired, Switch(sw.u, sw.v, sw.x, sw.y, kept, retired))
        return kept, retired

    def two_factor_parities(self) -> dict[int, int]:
        bits: dict[int, int] = {}
        for comp in self.components:
            cyc = comp.cycle
            for i, u in enumerate(cyc):
                c = self.root(self.g.colour(u, cyc[(i + 1) % len(cyc)]))
                bits[c] = bits.get(c, 0) ^ 1
        return bits


def build_spicy_starter(g: ColouredGraph, audit: AuditLog | None = None) -> SpicyState:
    """Disjoint even monochromatic cycles plus splice slots and a spare vertex.

    Cycles are collected until their total size passes 2*r*count + 2*r,
    which caps the count near sqrt(r) and leaves r spare cycle edges past
    the protected prefix of each component to splice switches into.
    """
    n, r = g.n, g.r
    reserve = 0
    comps: list[SpicyComponent] = []
    min_len = even_ceil(2 * r + 2 * math.sqrt(r))
    cap = 8 * r
    total = 0
    while not (comps and total >= 2 * r * len(comps) + 2 * r):
        consumed = {reserve}
        for comp in comps:
            consumed.update(comp.cycle)
        allowed = [v for v in range(n) if v not in consumed]
        colour, cyc = find_long_even_mono_cycle(g, allowed, min_len, cap)
        if len(cyc) > 8 * r:
            cyc, reserve, _released = shorten_with_cherries(g, cyc, reserve, r)
            cyc = cyc[-(2 * r + 2) :] + cyc[: -(2 * r + 2)]
        if audit is not None:
            audit.check(
                "starter-component",
                len(cyc) % 2 == 0 and min_len <= len(cyc) <= 8 * r,
                f"colour {colour} length {len(cyc)}",
                len(cyc),
                8 * r,
            )
        comps.append(SpicyComponent(colour, list(cyc)))
        total += len(cyc)
    t = len(comps)
    if audit is not None:
        audit.check(
            "starter-total",
            2 * r * t + 2 * r <= total <= 2 * r * t + 8 * r,
            f"{t} components totalling {total}",
            total,
            2 * r * t + 8 * r,
        )
        audit.bounded("starter-size", total, 2 * r ** 1.5 + 10 * r, f"{t} components")
    slots: list[_Slot] = []
    for ci, comp in enumerate(comps):
        L = len(comp.cycle)
        for j in range(2 * r + 2, L):
            slots.append(_Slot(ci, comp.cycle[j], comp.cycle[(j + 1) % L]))
            if len(slots) == r:
                break
        if len(slots) == r:
            break
    if audit is not None:
        audit.check("starter-slots", len(slots) == r, f"{len(slots)} of {r} slots", len(slots), r)
    if len(slots) < r:
        raise ProcedureFailure("starter produced too few splice slots")
    return SpicyState(g, comps, reserve, slots)


@dataclass(frozen=True)
class LeftoverStructure:
    """Certified shape of a switch-free vertex set.

    Parts group the other vertices by the colour of their edge to the
    anchor v0; inside every part all vertices see the rest of the set
    identically, parts of size two or more share one internal colour,
    and edges between two such parts are monochromatic per part pair.
    """

    v0: int
    parts: tuple[tuple[int, tuple[int, ...]], ...]
    internal_colour: int | None
    cross: tuple[tuple[int, int, int], ...]

    def multi_parts(self) -> tuple[tuple[int, tuple[int, ...]], ...]:
        return tuple((c, vs) for c, vs in self.parts if len(vs) >= 2)

    def singleton_vertices(self) -> tuple[int, ...]:
        return tuple(vs[0] for _, vs in self.parts if len(vs) == 1)


def structure_or_switch(
    g: ColouredGraph, vertices=None, v0: int | None = None
) -> Switch | LeftoverStructure:
    """Find a switch inside the vertex set, or certify there is none.

    A switch is a 4-cycle whose edge colours cancel to exactly two.  Two
    anchored fast paths run first: a part pair disagreeing about a third
    vertex, and two large parts with different internal colours.  They
    miss squares that straddle parts, so an exhaustive scan over the set
    backs them up; only a None from it certifies the rigid structure.
    """
    if not g.complete:
        raise ParameterError("structure scan needs a complete host")
    vs = sorted(set(range(g.n) if vertices is None else vertices))
    if not vs:
        raise ParameterError("empty vertex set")
    if v0 is None:
        v0 = vs[0]
    elif v0 not in vs:
        raise ParameterError("anchor vertex must belong to the set")
    groups: dict[int, list[int]] = {}
    for x in vs:
        if x != v0:
            groups.setdefault(g.colour(v0, x), []).append(x)
    parts = tuple((c, tuple(sorted(groups[c]))) for c in sorted(groups))
    for _c, pv in parts:
        if len(pv) < 2:
            continue
        x0 = pv[0]
        for y in pv[1:]:
            for z in vs:
                if z in (v0, x0, y):
                    continue
                if g.colour(x0, z) != g.colour(y, z):
                    return Switch.from_cycle(g, v0, x0, z, y)
    internal: int | None = None
    keeper: tuple[int, ...] | None = None
    for _c, pv in parts:
        if len(pv) < 2:
            continue
        mu = g.colour(pv[0], pv[1])
        if internal is None:
            internal, keeper = mu, pv
        elif mu != internal:
            assert keeper is not None
            return Switch.from_cycle(g, keeper[0], pv[0], pv[1], keeper[1])
    outside = frozenset(range(g.n)) - set(vs)
    stray = find_switch(g, outside)
    if stray is not None:
        return stray
    multi = [(c, pv) for c, pv in parts if len(pv) >= 2]
    cross = tuple(
        (multi[i][0], multi[j][0], g.colour(multi[i][1][0], multi[j][1][0]))
        for i in range(len(multi))
        for j in range(i + 1, len(multi))
    )
    return LeftoverStructure(v0, parts, internal, cross)


@dataclass(frozen=True)
class AttachmentPlan:
    """Record of how the sparse remainder was woven into the final cycle."""

    v0: int
    part_colours: tuple[int, ...]
    closers: tuple[int, ...]
    absorbed: tuple[int, ...]
    internal_colour: int | None
    draws: int


def attach_and_assemble(
    state: SpicyState,
    structure: LeftoverStructure,
    gl: ColouredGraph,
    packed: list[int],
    audit: AuditLog | None = None,
) -> tuple[CyclePath, AttachmentPlan]:
    """Assemble the Hamilton cycle when the remainder is switch-free.

    Every starter component and every stray vertex is absorbed between
    two same-coloured bridges into one of the large parts; the parts are
    then concatenated and closed through one held-back vertex per part,
    making each part-pair colour appear an even number of times.  Only
    the parts' shared internal colour can end up odd.
    """
    live = state.live_colours()
    s = len(live)
    if s < 2:
        raise ParameterError("attachment needs at least two live colours")
    multi = structure.multi_parts()
    if not multi:
        raise CapacityError("no part has two or more vertices")
    avail: list[set[int]] = [set(vs) for _c, vs in multi]

    def pick_part() -> int:
        best = -1
        for i, a in enumerate(avail):
            if len(a) >= s + 1 and (best < 0 or len(a) > len(avail[best])):
                best = i
        if best < 0:
            raise CapacityError("every part is below the drawing threshold")
        return best

    expansions: list[list[list[int]]] = [[] for _ in multi]
    stray: list[int] = list(packed)
    for comp in state.components:
        i = pick_part()
        pool = sorted(avail[i])[: s + 1]
        zs = [comp.cycle[2 * j] for j in range(s + 1)]
        found = None
        for j in range(s + 1):
            if found:
                break
            for jp in range(j + 1, s + 1):
                if found:
                    break
                for a in pool:
                    if found:
                        break
                    for b in pool:
                        if a != b and gl.colour(zs[j], a) == gl.colour(zs[jp], b):
                            found = (j, jp, a, b)
                            break
        if found is None:
            raise ProcedureFailure("pigeonhole failed to bridge a component")
        j, jp, a, b = found
        payload = comp.cycle[2 * j :: -1] + comp.cycle[: 2 * jp - 1 : -1]
        stray.extend(comp.cycle[2 * j + 1 : 2 * jp])
        expansions[i].append([a] + payload + [b])
        avail[i] -= {a, b}
    stray.append(structure.v0)
    stray.extend(structure.singleton_vertices())
    if audit is not None:
        audit.bounded(
            "attach-stray", len(stray), 9 * state.r ** 1.5, f"{len(stray)} stray vertices"
        )
    for v in stray:
        i = pick_part()
        pool = sorted(avail[i])[: s + 1]
        first_at: dict[int, int] = {}
        pair = None
        for a in pool:
            c = gl.colour(v, a)
            if c in first_at:
                pair = (first_at[c], a)
                break
            first_at[c] = a
        if pair is None:
            raise ProcedureFailure("pigeonhole failed to bridge a stray vertex")
        a, b = pair
        expansions[i].append([a, v, b])
        avail[i] -= {a, b}
    if audit is not None:
        bad = 0
        total = 0
        for exps in expansions:
            for exp in exps:
                total += 1
                if gl.colour(exp[0], exp[1]) != gl.colour(exp[-2], exp[-1]):
                    bad += 1
        audit.check(
            "attach-bridges",
            bad == 0,
            f"{total} bridge pairs, {bad} mismatched",
        )
    closers: list[int] = []
    final: list[int] = []
    for i in range(len(multi)):
        if not avail[i]:
            raise CapacityError("a part was drained before it could be closed")
        w = min(avail[i])
        avail[i].discard(w)
        closers.append(w)
        for exp in expansions[i]:
            final.extend(exp)
        final.extend(sorted(avail[i]))
    final.extend(closers)
    cycle = CyclePath(tuple(final))
    if audit is not None:
        odd = odd_colour_classes(gl, cycle)
        ok = set(odd) <= {structure.internal_colour}
        audit.check(
            "attach-parity",
            ok,
            f"odd live classes {odd} vs internal colour {structure.internal_colour}",
        )
    plan = AttachmentPlan(
        v0=structure.v0,
        part_colours=tuple(c for c, _vs in multi),
        closers=tuple(closers),
        absorbed=tuple(stray),
        internal_colour=structure.internal_colour,
        draws=len(state.components) + len(stray),
    )
    return cycle, plan


def assemble_full_set(state: SpicyState) -> CyclePath:
    """Hamilton cycle when a single live colour remains: order is free."""
    seq = state.free_vertices()
    for comp in state.components:
        seq.extend(comp.cycle[1:])
        seq.append(comp.cycle[0])
    return CyclePath(tuple(seq))


def unmerge_and_flip(
    g: ColouredGraph, cycle: CyclePath, register: MergeRegister
) -> tuple[CyclePath, tuple[Switch, ...]]:
    """Undo colour merges newest first, flipping a switch when a split leaves
    both halves odd.  Each flip toggles exactly its two recorded colours, so
    at most one odd class survives all the way down to the original colours.
    """
    records = list(register)
    work = cycle
    flips: list[Switch] = []
    for i in range(len(records), 0, -1):
        kept, retired, sw = records[i - 1]
        parent = list(range(g.r + 1))
        for j in range(i - 1):
            kj, rj, _sw = records[j]
            parent[rj] = kj

        def root(c: int) -> int:
            while parent[c] != c:
                c = parent[c]
            return c

        bits: dict[int, int] = {}
        for u, v in work.edges():
            c = root(g.colour(u, v))
            bits[c] = bits.get(c, 0) ^ 1
        if bits.get(kept) and bits.get(retired):
            work = flip_switch_in_cycle(work, sw)
            flips.append(sw)
    return work, tuple(flips)


@dataclass(frozen=True)
class SolveReport:
    """Outcome of the pipeline: the cycle, its odd classes, and how it was built."""

    cycle: CyclePath
    odd_colours: tuple[int, ...]
    case: str
    merges: tuple[tuple[int, int, Switch], ...]
    flips: tuple[Switch, ...]
    audit: AuditLog | None
    trace: tuple[str, ...]


def run_pipeline(
    g: ColouredGraph,
    *,
    best_effort: bool = False,
    collect_audit: bool = True,
    trace: bool = False,
) -> SolveReport:
    """Hamilton cycle with at most one odd colour class in a complete host.

    The guarantee holds whenever n >= 2*r*r + 40*r**1.5; smaller hosts are
    rejected unless best_effort is set, in which case the stages run with
    no promise and may raise ProcedureFailure or CapacityError.
    """
    problems = g.validate()
    if problems:
        raise ParameterError("; ".join(problems))
    if not g.complete:
        raise ParameterError("pipeline needs a complete host")
    n, r = g.n, g.r
    if n < 3:
        raise ParameterError("need at least three vertices")
    notes: list[str] = []

    def note(msg: str) -> None:
        if trace:
            notes.append(msg)

    need = threshold_vertices(r)
    if n + 1e-9 < need:
        if not best_effort:
            raise ParameterError(
                f"{r} colours need a host on at least {math.ceil(need - 1e-9)} vertices, "
                f"got {n}; enable best-effort mode to try anyway"
            )
        note(f"below guarantee threshold ({n} < {need:.1f}); continuing best effort")
    audit = AuditLog() if collect_audit else None
    present = sorted(set(g.edges.values()))
    if len(present) <= 1:
        cycle = CyclePath(tuple(range(n)))
        odd = odd_colour_classes(g, cycle)
        if audit is not None:
            audit.check("final-odd-count", len(odd) <= 1, f"odd classes {odd}")
        note("single colour present; any cycle works")
        return SolveReport(cycle, odd, "trivial", (), (), audit, tuple(notes))
    state = build_spicy_starter(g, audit)
    note(
        f"starter: {len(state.components)} components, sizes "
        f"{[len(c.cycle) for c in state.components]}, spare {state.reserve}"
    )
    cycle: CyclePath | None = None
    case = ""
    while cycle is None:
        live = state.live_colours()
        s = len(live)
        if s == 1:
            cycle = assemble_full_set(state)
            case = "full-set"
            note(f"single live colour {live[0]}; assembled directly")
            break
        gl = state.live_graph()
        found: list[Switch] = []
        forbidden = set(state._embedded)
        while len(found) < s:
            sw = find_switch(gl, frozenset(forbidden))
            if sw is None:
                break
            found.append(sw)
            forbidden.update(sw.square)
        if len(found) < s:
            packed = [w for sw in found for w in sw.square]
            leftover = [v for v in state.free_vertices() if v not in set(packed)]
            note(
                f"packing stalled at {len(found)} of {s} switches; "
                f"{len(leftover)} switch-free vertices remain"
            )
            if not leftover:
                raise ProcedureFailure(
                    "switch packing stalled with no free vertices left to attach"
                )
            result = structure_or_switch(gl, leftover)
            if isinstance(result, Switch):
                raise ProcedureFailure("maximal packing missed a switch")
            cycle, plan = attach_and_assemble(state, result, gl, packed, audit)
            case = "attach"
            note(
                f"attached through {len(plan.part_colours)} parts, "
                f"{plan.draws} draws, internal colour {plan.internal_colour}"
            )
            break
        idx = {c: i for i, c in enumerate(live)}
        vectors = []
        for i, sw in enumerate(found):
            slot = state.slots[i]
            six = [
                (slot.a, slot.b),
                (sw.u, slot.a),
                (sw.x, slot.b),
                (sw.u, sw.v),
                (sw.v, sw.y),
                (sw.x, sw.y),
            ]
            bits = 0
            for p, q in six:
                bits ^= 1 << idx[gl.colour(p, q)]
            vectors.append(bits)
        dep = first_dependency(vectors)
        if dep is None:
            raise ProcedureFailure("even-weight parity vectors came out independent")
        chosen = sorted(dep)
        for j in chosen:
            state.splice(j, found[j])
        merged = 0
        for j in chosen:
            if state.merge(found[j]) is not None:
                merged += 1
        if merged == 0:
            raise ProcedureFailure("a round completed without merging any colours")
        state.rounds += 1
        s_new = len(state.live_colours())
        note(
            f"round {state.rounds}: spliced {len(chosen)} of {s} switches, "
            f"{merged} merges, live colours {s} -> {s_new}"
        )
        if audit is not None:
            parities = state.two_factor_parities()
            audit.check(
                "round-two-factor",
                all(b == 0 for b in parities.values()),
                f"round {state.rounds} live parities {parities}",
            )
            audit.bounded(
                "embedded-bound",
                len(state._embedded),
                2 * r * r + 10 * r ** 1.5 - 2 * s_new * s_new,
                f"round {state.rounds}",
            )
    final_cycle, flips = unmerge_and_flip(g, cycle, state.register)
    note(f"replay: {len(state.register)} merges undone, {len(flips)} switches flipped")
    odd = odd_colour_classes(g, final_cycle)
    if audit is not None:
        audit.check("final-hamilton", final_cycle.is_hamilton(g), f"length {final_cycle.length}")
        audit.check("final-odd-count", len(odd) <= 1, f"odd classes {odd}")
    if len(odd) > 1:
        raise ProcedureFailure(f"finished with {len(odd)} odd classes: {odd}")
    return SolveReport(
        final_cycle, odd, case, tuple(state.register), flips, audit, tuple(notes)
    )


def solve_complete(
    n: int,
    r: int,
    seed: int = 0,
    *,
    best_effort: bool = False,
    collect_audit: bool = True,
    trace: bool = False,
) -> tuple[ColouredGraph, SolveReport]:
    """Colour K_n uniformly at random with r colours and run the pipeline."""
    from .randgen import uniform_complete_colouring

    g = uniform_complete_colouring(n, r, seed)
    report = run_pipeline(
        g, best_effort=best_effort, collect_audit=collect_audit, trace=trace
    )
    return g, report
