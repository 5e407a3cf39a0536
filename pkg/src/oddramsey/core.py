"""Core data model: coloured graphs, cycle paths, parity vectors, switches.

Vertices are integers 0..n-1.  Colours are integers 1..r.  Edges are stored
under a canonical (min, max) key.  Parity vectors live in GF(2)^r and are
packed into a single Python int, bit i-1 for colour i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Mapping


class OddRamseyError(Exception):
    """Base class for errors raised by this package."""


class MissingEdgeError(OddRamseyError, KeyError):
    """An edge lookup touched a non-edge of the host graph."""


class InvalidCycleError(OddRamseyError):
    """A vertex sequence is not a valid (closed) cycle in the host graph."""


class SwitchError(OddRamseyError):
    """A switch is malformed or cannot be applied to the given cycle."""


class ParameterError(OddRamseyError, ValueError):
    """Arguments outside the domain a routine guarantees to handle."""


class PipelineError(OddRamseyError):
    """The constructive pipeline reached a state its guarantees exclude."""


class ProcedureFailure(OddRamseyError):
    """A search subroutine failed although its precondition certified success."""


def edge_key(u: int, v: int) -> tuple[int, int]:
    if u == v:
        raise ParameterError(f"loop edge at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class ParityVector:
    """Element of GF(2)^r recording which colour classes have odd size."""

    r: int
    bits: int

    def __post_init__(self) -> None:
        if self.bits >> self.r:
            raise ParameterError("parity bits outside colour range")

    def __xor__(self, other: "ParityVector") -> "ParityVector":
        if self.r != other.r:
            raise ParameterError("parity vectors over different colour counts")
        return ParityVector(self.r, self.bits ^ other.bits)

    def odd_colours(self) -> tuple[int, ...]:
        return tuple(c for c in range(1, self.r + 1) if (self.bits >> (c - 1)) & 1)

    @property
    def weight(self) -> int:
        return self.bits.bit_count()

    def is_even(self) -> bool:
        return self.bits == 0

    @staticmethod
    def from_colours(r: int, colours: Iterable[int]) -> "ParityVector":
        bits = 0
        for c in colours:
            if not 1 <= c <= r:
                raise ParameterError(f"colour {c} outside 1..{r}")
            bits ^= 1 << (c - 1)
        return ParityVector(r, bits)


@dataclass(frozen=True)
class ColouredGraph:
    """An edge-coloured simple graph on vertices 0..n-1.

    ``edges`` maps canonical (u, v) keys with u < v to colours in 1..r.
    ``complete`` marks hosts known to carry every possible edge; routines
    that only work on complete hosts check the flag rather than recount.
    """

    n: int
    r: int
    edges: Mapping[tuple[int, int], int]
    complete: bool = False

    @staticmethod
    def from_edge_list(
        n: int, r: int, triples: Iterable[tuple[int, int, int]]
    ) -> "ColouredGraph":
        edges: dict[tuple[int, int], int] = {}
        for u, v, c in triples:
            k = edge_key(u, v)
            if k in edges:
                raise ParameterError(f"duplicate edge {k}")
            edges[k] = c
        g = ColouredGraph(n, r, edges, complete=len(edges) == n * (n - 1) // 2)
        problems = g.validate()
        if problems:
            raise ParameterError("; ".join(problems))
        return g

    @staticmethod
    def complete_graph(n: int, r: int, colour_of) -> "ColouredGraph":
        """Build K_n with colour_of(u, v) evaluated on each u < v."""
        edges = {
            (u, v): colour_of(u, v) for u in range(n) for v in range(u + 1, n)
        }
        g = ColouredGraph(n, r, edges, complete=True)
        problems = g.validate()
        if problems:
            raise ParameterError("; ".join(problems))
        return g

    def validate(self) -> list[str]:
        problems: list[str] = []
        if self.n < 1:
            problems.append(f"vertex count {self.n} < 1")
        if self.r < 1:
            problems.append(f"colour count {self.r} < 1")
        for (u, v), c in self.edges.items():
            if not (0 <= u < v < self.n):
                problems.append(f"edge ({u}, {v}) not canonical within 0..{self.n - 1}")
            if not (1 <= c <= self.r):
                problems.append(f"edge ({u}, {v}) colour {c} outside 1..{self.r}")
        if self.complete and len(self.edges) != self.n * (self.n - 1) // 2:
            problems.append("complete flag set but edges are missing")
        return problems

    def colour(self, u: int, v: int) -> int:
        k = edge_key(u, v)
        try:
            return self.edges[k]
        except KeyError:
            raise MissingEdgeError(k) from None

    def has_edge(self, u: int, v: int) -> bool:
        return u != v and edge_key(u, v) in self.edges

    @cached_property
    def adj_bits(self) -> tuple[int, ...]:
        """Adjacency as bitsets: bit v of adj_bits[u] is set iff uv is an edge."""
        bits = [0] * self.n
        for u, v in self.edges:
            bits[u] |= 1 << v
            bits[v] |= 1 << u
        return tuple(bits)

    def neighbours(self, u: int) -> Iterator[int]:
        b = self.adj_bits[u]
        while b:
            low = b & -b
            yield low.bit_length() - 1
            b ^= low

    def degree(self, u: int) -> int:
        return self.adj_bits[u].bit_count()

    def min_degree(self) -> int:
        return min(self.degree(u) for u in range(self.n))

    def colour_classes(self) -> dict[int, list[tuple[int, int]]]:
        classes: dict[int, list[tuple[int, int]]] = {c: [] for c in range(1, self.r + 1)}
        for k in sorted(self.edges):
            classes[self.edges[k]].append(k)
        return classes

    def induced_relabelled(self, vertices: Iterable[int]) -> tuple["ColouredGraph", dict[int, int]]:
        """Induced subgraph on the given vertices, relabelled to 0..k-1.

        Returns the subgraph and the old-id -> new-id map.  Vertex order in
        the relabelling follows ascending old ids.
        """
        old = sorted(set(vertices))
        idx = {v: i for i, v in enumerate(old)}
        edges = {
            (idx[u], idx[v]): c
            for (u, v), c in self.edges.items()
            if u in idx and v in idx
        }
        k = len(old)
        sub = ColouredGraph(k, self.r, edges, complete=len(edges) == k * (k - 1) // 2)
        return sub, idx

    def recoloured(self, mapping: Mapping[int, int], new_r: int) -> "ColouredGraph":
        """Apply a colour -> colour map to every edge."""
        edges = {k: mapping[c] for k, c in self.edges.items()}
        g = ColouredGraph(self.n, new_r, edges, complete=self.complete)
        problems = g.validate()
        if problems:
            raise ParameterError("; ".join(problems))
        return g


def parity_vector(g: ColouredGraph, edges: Iterable[tuple[int, int]]) -> ParityVector:
    """XOR of colour indicators over an edge multiset (multiplicity matters)."""
    bits = 0
    for u, v in edges:
        bits ^= 1 << (g.colour(u, v) - 1)
    return ParityVector(g.r, bits)


@dataclass(frozen=True)
class CyclePath:
    """A vertex sequence, closed (cycle) or open (path).

    Closed sequences list each vertex once; the edge back to the start is
    implicit.  No adjacent equal vertices, no repeats.
    """

    vertices: tuple[int, ...]
    closed: bool = True

    def __post_init__(self) -> None:
        vs = self.vertices
        if len(set(vs)) != len(vs):
            raise InvalidCycleError("repeated vertex")
        if self.closed and len(vs) < 3:
            raise InvalidCycleError("closed cycle needs at least 3 vertices")
        if not self.closed and len(vs) < 1:
            raise InvalidCycleError("empty path")

    @property
    def length(self) -> int:
        return len(self.vertices) if self.closed else len(self.vertices) - 1

    def edges(self) -> list[tuple[int, int]]:
        vs = self.vertices
        out = [edge_key(vs[i], vs[i + 1]) for i in range(len(vs) - 1)]
        if self.closed:
            out.append(edge_key(vs[-1], vs[0]))
        return out

    def validate_in(self, g: ColouredGraph) -> None:
        for v in self.vertices:
            if not 0 <= v < g.n:
                raise InvalidCycleError(f"vertex {v} outside host")
        for u, v in self.edges():
            if not g.has_edge(u, v):
                raise InvalidCycleError(f"missing edge ({u}, {v})")

    def is_hamilton(self, g: ColouredGraph) -> bool:
        return self.closed and len(self.vertices) == g.n

    def canonical(self) -> "CyclePath":
        """Rotation/reflection normal form: start at min vertex, smaller successor first."""
        if not self.closed:
            return self if self.vertices[0] <= self.vertices[-1] else self.reversed()
        vs = self.vertices
        i = vs.index(min(vs))
        fwd = vs[i:] + vs[:i]
        rev = (fwd[0],) + tuple(reversed(fwd[1:]))
        return CyclePath(min(fwd, rev), closed=True)

    def reversed(self) -> "CyclePath":
        return CyclePath(tuple(reversed(self.vertices)), closed=self.closed)

    def to_line(self) -> str:
        return " ".join(str(v) for v in self.vertices)


def odd_colour_classes(g: ColouredGraph, cycle: CyclePath) -> tuple[int, ...]:
    """Colours appearing an odd number of times on a closed cycle."""
    if not cycle.closed:
        raise InvalidCycleError("parity audit requires a closed cycle")
    cycle.validate_in(g)
    return parity_vector(g, cycle.edges()).odd_colours()


@dataclass(frozen=True)
class Switch:
    """A 4-cycle u-v-x-y-u whose edge parities cancel to exactly two colours.

    The base matching {uv, xy} sits inside a host cycle; flipping replaces
    it with {uy, vx}, changing the cycle's parity vector by c1 xor c2.
    """

    u: int
    v: int
    x: int
    y: int
    c1: int
    c2: int

    def __post_init__(self) -> None:
        if len({self.u, self.v, self.x, self.y}) != 4:
            raise SwitchError("switch vertices must be distinct")
        if self.c1 == self.c2:
            raise SwitchError("switch colours must differ")

    @property
    def square(self) -> tuple[int, int, int, int]:
        return (self.u, self.v, self.x, self.y)

    def base_matching(self) -> list[tuple[int, int]]:
        return [edge_key(self.u, self.v), edge_key(self.x, self.y)]

    def flipped_matching(self) -> list[tuple[int, int]]:
        return [edge_key(self.u, self.y), edge_key(self.v, self.x)]

    def parity_delta(self, r: int) -> ParityVector:
        return ParityVector.from_colours(r, (self.c1, self.c2))

    def verify_in(self, g: ColouredGraph) -> None:
        sq = self.square
        cols = []
        for i in range(4):
            a, b = sq[i], sq[(i + 1) % 4]
            if not g.has_edge(a, b):
                raise SwitchError(f"switch edge ({a}, {b}) missing from host")
            cols.append(g.colour(a, b))
        delta = ParityVector.from_colours(g.r, cols)
        want = self.parity_delta(g.r)
        if delta.bits != want.bits:
            raise SwitchError(
                f"switch parity {delta.odd_colours()} != declared ({self.c1}, {self.c2})"
            )

    @staticmethod
    def from_cycle(g: ColouredGraph, a: int, b: int, c: int, d: int) -> "Switch":
        """Normalise a 4-cycle a-b-c-d-a into a Switch.

        Starts the square at its minimum vertex, orients so the second
        vertex beats the fourth, and orders the colour pair ascending.
        """
        sq = [a, b, c, d]
        cols = [g.colour(sq[i], sq[(i + 1) % 4]) for i in range(4)]
        delta = ParityVector.from_colours(g.r, cols)
        odd = delta.odd_colours()
        if len(odd) != 2:
            raise SwitchError(f"4-cycle parity has weight {len(odd)}, need 2")
        i = sq.index(min(sq))
        sq = sq[i:] + sq[:i]
        if sq[1] > sq[3]:
            sq = [sq[0], sq[3], sq[2], sq[1]]
        return Switch(sq[0], sq[1], sq[2], sq[3], odd[0], odd[1])


class MergeRegister:
    """Ordered log of colour merges, each justified by an embedded switch.

    Each record says: colour ``retired`` was folded into colour ``kept``,
    and ``switch`` flips the parity pair (kept, retired) if the replay
    phase needs to separate them again.  A colour may be retired at most
    once, and kept < retired by construction.
    """

    def __init__(self) -> None:
        self._records: list[tuple[int, int, Switch]] = []
        self._retired: set[int] = set()

    def record(self, kept: int, retired: int, switch: Switch) -> None:
        if kept >= retired:
            raise ParameterError(f"merge must keep the smaller colour ({kept} >= {retired})")
        if retired in self._retired:
            raise ParameterError(f"colour {retired} retired twice")
        if {switch.c1, switch.c2} != {kept, retired}:
            raise ParameterError("switch colours do not match the merge")
        self._retired.add(retired)
        self._records.append((kept, retired, switch))

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self) -> Iterator[tuple[int, int, Switch]]:
        return iter(self._records)

    def __getitem__(self, i: int) -> tuple[int, int, Switch]:
        return self._records[i]


def flip_switch_in_cycle(cycle: CyclePath, switch: Switch) -> CyclePath:
    """Exchange a switch's base matching for its flipped one inside a cycle.

    Requires both base edges on the cycle with traversal order u, v, ..., y,
    x (so the flip reconnects into a single cycle).  The opposite traversal
    order would split the cycle in two, which is rejected.
    """
    if not cycle.closed:
        raise SwitchError("can only flip inside a closed cycle")
    vs = list(cycle.vertices)
    pos = {w: i for i, w in enumerate(vs)}
    for w in switch.square:
        if w not in pos:
            raise SwitchError(f"switch vertex {w} not on cycle")
    n = len(vs)
    iu = pos[switch.u]
    rot = vs[iu:] + vs[:iu]
    if rot[1] != switch.v:
        if rot[-1] != switch.v:
            raise SwitchError("base edge (u, v) not on cycle")
        rot = [rot[0]] + rot[:0:-1]
    idx = {w: i for i, w in enumerate(rot)}
    ix, iy = idx[switch.x], idx[switch.y]
    if ix != iy + 1:
        if iy == ix + 1:
            # Traversal order u, v, x, y: flipping would disconnect.
            raise SwitchError("switch traversed in splitting order; flip would disconnect")
        raise SwitchError("base edge (x, y) not on cycle")
    new = [rot[0]] + rot[1 : iy + 1][::-1] + rot[ix:]
    assert len(new) == n
    return CyclePath(tuple(new), closed=True)
