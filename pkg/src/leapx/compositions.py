"""Subdivision vertex join, edge join and vertex-edge join.

Vertex layout: the originals of G (``0..n-1``), then G's subdivision vertices
(``n..n+m-1``, lexicographic edge order), then H1's vertices, then H2's.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructions import EDGE, H1, H2, ORIGINAL, DerivedGraph, Tag
from .graph import Graph, is_connected


class DisconnectedInput(ValueError):
    pass


@dataclass(frozen=True)
class JoinGraph(DerivedGraph):
    params: tuple[int, ...] = ()


def _check(g: Graph, *hs: Graph) -> None:
    if g.n < 2:
        raise ValueError("G must have at least two vertices")
    for name, x in (("G", g),) + tuple((f"H{i + 1}", h) for i, h in enumerate(hs)):
        if x.n == 0:
            raise ValueError(f"{name} must be non-empty")
        if not is_connected(x):
            raise DisconnectedInput(f"{name} is disconnected")


def _join(g: Graph, h1: Graph, h2: Graph | None, h1_to_originals: bool, kind: str) -> JoinGraph:
    n, m = g.n, g.m
    edges = []
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, n + j))
        edges.append((v, n + j))
    off1 = n + m
    edges.extend((off1 + a, off1 + b) for a, b in h1.edges)
    targets_h1 = range(n) if h1_to_originals else range(n, n + m)
    edges.extend((x, off1 + u) for x in targets_h1 for u in range(h1.n))
    tags = (
        [Tag(ORIGINAL, v) for v in range(n)]
        + [Tag(EDGE, j) for j in range(m)]
        + [Tag(H1, u) for u in range(h1.n)]
    )
    params = (n, m, h1.n, h1.m)
    if h2 is not None:
        off2 = off1 + h1.n
        edges.extend((off2 + a, off2 + b) for a, b in h2.edges)
        edges.extend((n + j, off2 + u) for j in range(m) for u in range(h2.n))
        tags += [Tag(H2, u) for u in range(h2.n)]
        params += (h2.n, h2.m)
    graph = Graph.from_edges(len(tags), edges)
    return JoinGraph(graph, tuple(tags), n, m, kind, params)


def sd_vertex_join(g: Graph, h: Graph) -> JoinGraph:
    """S(G) with every original vertex joined to every vertex of H."""
    _check(g, h)
    return _join(g, h, None, h1_to_originals=True, kind="vertex")


def sd_edge_join(g: Graph, h: Graph) -> JoinGraph:
    """S(G) with every subdivision vertex joined to every vertex of H."""
    _check(g, h)
    return _join(g, h, None, h1_to_originals=False, kind="edge")


def sd_vertex_edge_join(g: Graph, h1: Graph, h2: Graph) -> JoinGraph:
    """S(G) with originals joined to all of H1 and subdivision vertices to all of H2."""
    _check(g, h1, h2)
    return _join(g, h1, h2, h1_to_originals=True, kind="vertex-edge")


JOINS = {
    "vertex": sd_vertex_join,
    "edge": sd_edge_join,
    "vertex-edge": sd_vertex_edge_join,
}
