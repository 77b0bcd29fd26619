"""Line graph and the four subdivision-derived graphs S, Q, R, T with provenance.

Index layout for S/Q/R/T: vertex ``v`` of G keeps index ``v``; the ``j``-th
edge of G (edges sorted lexicographically, see ``Graph.edges``) becomes
vertex ``n + j``.  The line graph uses index ``j`` for the ``j``-th edge.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Callable, NamedTuple, Sequence

from .graph import Graph

ORIGINAL = "original"
EDGE = "edge"
H1 = "h1"
H2 = "h2"


class Tag(NamedTuple):
    """Where a vertex of a derived graph came from.

    ``role`` is one of ``original`` (a vertex of G), ``edge`` (an edge of G),
    ``h1``/``h2`` (a vertex of an attached graph); ``index`` is the vertex or
    edge index in the source graph, and ``copy`` names the copy of H for
    coronas (``None`` elsewhere).
    """

    role: str
    index: int
    copy: int | None = None

    def as_dict(self) -> dict:
        out = {"role": self.role, "index": self.index}
        if self.copy is not None:
            out["copy"] = self.copy
        return out


@dataclass(frozen=True)
class DerivedGraph:
    graph: Graph
    provenance: tuple[Tag, ...]
    base_n: int
    base_m: int
    kind: str

    def vertices_with(self, role: str) -> list[int]:
        return [x for x, t in enumerate(self.provenance) if t.role == role]

    def index_of(self, tag: Tag) -> int:
        return self._lookup[tag]

    @cached_property
    def _lookup(self) -> dict[Tag, int]:
        return {t: x for x, t in enumerate(self.provenance)}


def _line_edges(g: Graph) -> list[tuple[int, int]]:
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        incident[v].append(j)
    pairs = set()
    for js in incident:
        for a in range(len(js)):
            for b in range(a + 1, len(js)):
                pairs.add((js[a], js[b]))
    return sorted(pairs)


def line_graph(g: Graph) -> DerivedGraph:
    lg = Graph.from_edges(g.m, _line_edges(g))
    tags = tuple(Tag(EDGE, j) for j in range(g.m))
    return DerivedGraph(lg, tags, g.n, g.m, "L")


def _derived(g: Graph, kind: str, keep_g: bool, add_line: bool) -> DerivedGraph:
    n = g.n
    edges: list[tuple[int, int]] = []
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, n + j))
        edges.append((v, n + j))
    if keep_g:
        edges.extend(g.edges)
    if add_line:
        edges.extend((n + a, n + b) for a, b in _line_edges(g))
    tags = tuple(Tag(ORIGINAL, v) for v in range(n)) + tuple(
        Tag(EDGE, j) for j in range(g.m)
    )
    return DerivedGraph(Graph.from_edges(n + g.m, edges), tags, n, g.m, kind)


def subdivision(g: Graph) -> DerivedGraph:
    """S(G): every edge replaced by a path of length two."""
    return _derived(g, "S", keep_g=False, add_line=False)


def q_graph(g: Graph) -> DerivedGraph:
    """Q(G): S(G) plus an edge between subdivision vertices of adjacent edges."""
    return _derived(g, "Q", keep_g=False, add_line=True)


def r_graph(g: Graph) -> DerivedGraph:
    """R(G): G with a new vertex per edge joined to both endpoints."""
    return _derived(g, "R", keep_g=True, add_line=False)


def total_graph(g: Graph) -> DerivedGraph:
    """T(G): G, L(G) and the incidence edges between them."""
    return _derived(g, "T", keep_g=True, add_line=True)


BUILDERS: dict[str, Callable[[Graph], DerivedGraph]] = {
    "L": line_graph,
    "S": subdivision,
    "Q": q_graph,
    "R": r_graph,
    "T": total_graph,
}


def construct(kind: str, g: Graph) -> DerivedGraph:
    try:
        return BUILDERS[kind](g)
    except KeyError:
        raise ValueError(f"unknown construction {kind!r}; expected one of {sorted(BUILDERS)}") from None


def split_by_provenance(
    d: DerivedGraph, f: Sequence[int]
) -> tuple[dict[int, int], dict[int, int]]:
    """Split a per-vertex quantity into ``({v: f}, {edge index: f})``."""
    if len(f) != d.graph.n:
        raise ValueError(f"quantity has {len(f)} entries, graph has {d.graph.n} vertices")
    originals: dict[int, int] = {}
    edges: dict[int, int] = {}
    for x, tag in enumerate(d.provenance):
        if tag.role == ORIGINAL:
            originals[tag.index] = f[x]
        elif tag.role == EDGE:
            edges[tag.index] = f[x]
    return originals, edges
