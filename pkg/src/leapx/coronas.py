"""Double coronas G^(X) o {H1, H2} for X in S, Q, R, T.

One copy of H1 hangs off every original vertex of X(G) and one copy of H2 off
every subdivision vertex, each copy completely joined to its anchor.  Layout:
the n + m vertices of X(G) first, then the H1 copies (copy index, then H1's
own index), then the H2 copies.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import EDGE, H1, H2, ORIGINAL, DerivedGraph, Tag, construct
from .graph import DisconnectedGraph, Graph, eccentricity_tuple, is_connected, second_degrees

KINDS = ("S", "Q", "R", "T")


class EmptyH(ValueError):
    pass


@dataclass(frozen=True)
class CoronaGraph(DerivedGraph):
    base: DerivedGraph | None = None
    g: Graph | None = None
    h1: Graph | None = None
    h2: Graph | None = None

    @property
    def params(self) -> tuple[int, int, int, int, int, int]:
        return (self.g.n, self.g.m, self.h1.n, self.h1.m, self.h2.n, self.h2.m)


def double_corona(kind: str, g: Graph, h1: Graph, h2: Graph) -> CoronaGraph:
    if kind not in KINDS:
        raise ValueError(f"unknown corona kind {kind!r}; expected one of {KINDS}")
    if h1.n == 0 or h2.n == 0:
        raise EmptyH("H1 and H2 must each have at least one vertex")
    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraph("G must be a non-empty connected graph")
    base = construct(kind, g)
    n, m = g.n, g.m
    edges = list(base.graph.edges)
    tags = list(base.provenance)
    offset = n + m
    for i in range(n):
        edges.extend((offset + a, offset + b) for a, b in h1.edges)
        edges.extend((i, offset + u) for u in range(h1.n))
        tags.extend(Tag(H1, u, i) for u in range(h1.n))
        offset += h1.n
    for j in range(m):
        edges.extend((offset + a, offset + b) for a, b in h2.edges)
        edges.extend((n + j, offset + u) for u in range(h2.n))
        tags.extend(Tag(H2, u, j) for u in range(h2.n))
        offset += h2.n
    graph = Graph.from_edges(offset, edges)
    return CoronaGraph(graph, tuple(tags), n, m, kind, base, g, h1, h2)


def _line_degrees(g: Graph) -> list[int]:
    return [g.degrees[u] + g.degrees[v] - 2 for u, v in g.edges]


def corona_d2_table(c: CoronaGraph) -> dict[Tag, int]:
    """Second degree of every corona vertex as predicted from base-graph data.

    Compare against ``second_degrees(c.graph)`` to audit the prediction.
    """
    g, h1, h2, kind = c.g, c.h1, c.h2, c.kind
    n = g.n
    n1, n2 = h1.n, h2.n
    d1 = g.degrees
    dl = _line_degrees(g)
    base_d2 = second_degrees(c.base.graph)
    out: dict[Tag, int] = {}
    for v in range(n):
        if kind == "S":
            val = (n2 + 1) * d1[v]
        elif kind == "Q":
            val = base_d2[v] + n2 * d1[v]
        else:  # R, T
            val = base_d2[v] + n2 * d1[v] + n1 * d1[v]
        out[Tag(ORIGINAL, v)] = val
    for j in range(g.m):
        if kind == "S":
            val = 2 * n1 + dl[j]
        elif kind in ("Q", "T"):
            val = base_d2[n + j] + 2 * n1 + n2 * dl[j]
        else:  # R
            val = base_d2[n + j] + 2 * n1
        out[Tag(EDGE, j)] = val
    anchor_factor = 2 if kind in ("R", "T") else 1
    for i in range(n):
        for u in range(n1):
            out[Tag(H1, u, i)] = (n1 - 1) - h1.degrees[u] + anchor_factor * d1[i]
    for j in range(g.m):
        extra = dl[j] if kind in ("Q", "T") else 0
        for u in range(n2):
            out[Tag(H2, u, j)] = (n2 - 1) - h2.degrees[u] + 2 + extra
    return out


def corona_ecc_table(c: CoronaGraph) -> dict[Tag, int]:
    """Eccentricity of every corona vertex predicted from the base graph X(G):
    anchor eccentricity + 1 on X(G), + 2 inside the attached copies."""
    base_ecc = eccentricity_tuple(c.base.graph)
    n = c.g.n
    out: dict[Tag, int] = {}
    for x, tag in enumerate(c.provenance):
        if tag.role == ORIGINAL:
            out[tag] = base_ecc[tag.index] + 1
        elif tag.role == EDGE:
            out[tag] = base_ecc[n + tag.index] + 1
        elif tag.role == H1:
            out[tag] = base_ecc[tag.copy] + 2
        else:
            out[tag] = base_ecc[n + tag.copy] + 2
    return out
