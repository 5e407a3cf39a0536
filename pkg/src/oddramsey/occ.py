"""Reading and writing coloured graphs and cycles.

Text format (.occ): first line ``n m r``; then m lines ``u v c`` with
0 <= u < v < n and 1 <= c <= r.  Lines are LF-terminated.  A JSON mirror
``{"n": ..., "r": ..., "edges": [[u, v, c], ...]}`` is accepted on input
and selected by a leading ``{``.  Cycles serialise as space-separated
vertices on one line.
"""

from __future__ import annotations

import json
from typing import TextIO

from .core import ColouredGraph, CyclePath, ParameterError


def parse_graph(text: str) -> ColouredGraph:
    """Parse either format, sniffing JSON by the first non-space character."""
    stripped = text.lstrip()
    if not stripped:
        raise ParameterError("empty graph input")
    if stripped[0] == "{":
        return _parse_json(stripped)
    return _parse_occ(text)


def _parse_occ(text: str) -> ColouredGraph:
    lines = [
        ln
        for ln in (raw.strip() for raw in text.splitlines())
        if ln and not ln.startswith("#")
    ]
    if not lines:
        raise ParameterError("empty graph input")
    head = lines[0].split()
    if len(head) != 3:
        raise ParameterError(f"header needs 'n m r', got {lines[0]!r}")
    try:
        n, m, r = (int(t) for t in head)
    except ValueError:
        raise ParameterError(f"non-integer header {lines[0]!r}") from None
    if len(lines) - 1 != m:
        raise ParameterError(f"header declares {m} edges, found {len(lines) - 1}")
    triples = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 3:
            raise ParameterError(f"edge line needs 'u v c', got {ln!r}")
        try:
            u, v, c = (int(t) for t in parts)
        except ValueError:
            raise ParameterError(f"non-integer edge line {ln!r}") from None
        if not u < v:
            raise ParameterError(f"edge ({u}, {v}) must satisfy u < v")
        triples.append((u, v, c))
    return ColouredGraph.from_edge_list(n, r, triples)


def _parse_json(text: str) -> ColouredGraph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParameterError(f"bad JSON graph: {e}") from None
    for key in ("n", "r", "edges"):
        if key not in obj:
            raise ParameterError(f"JSON graph missing {key!r}")
    triples = []
    for item in obj["edges"]:
        if len(item) != 3:
            raise ParameterError(f"JSON edge needs [u, v, c], got {item!r}")
        u, v, c = (int(t) for t in item)
        if not u < v:
            raise ParameterError(f"edge ({u}, {v}) must satisfy u < v")
        triples.append((u, v, c))
    return ColouredGraph.from_edge_list(int(obj["n"]), int(obj["r"]), triples)


def write_graph(g: ColouredGraph, fp: TextIO) -> None:
    fp.write(f"{g.n} {len(g.edges)} {g.r}\n")
    for (u, v) in sorted(g.edges):
        fp.write(f"{u} {v} {g.edges[(u, v)]}\n")


def graph_to_text(g: ColouredGraph) -> str:
    out = [f"{g.n} {len(g.edges)} {g.r}"]
    out.extend(f"{u} {v} {g.edges[(u, v)]}" for (u, v) in sorted(g.edges))
    return "\n".join(out) + "\n"


def graph_to_json(g: ColouredGraph) -> str:
    edges = [[u, v, g.edges[(u, v)]] for (u, v) in sorted(g.edges)]
    return json.dumps({"n": g.n, "r": g.r, "edges": edges})


def parse_cycle(text: str, closed: bool = True) -> CyclePath:
    parts = text.split()
    if not parts:
        raise ParameterError("empty cycle line")
    try:
        vs = tuple(int(t) for t in parts)
    except ValueError:
        raise ParameterError(f"non-integer cycle line {text!r}") from None
    return CyclePath(vs, closed=closed)


def cycle_to_line(cycle: CyclePath) -> str:
    return cycle.to_line()
