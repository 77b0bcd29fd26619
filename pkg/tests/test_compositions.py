from __future__ import annotations

import networkx as nx
import pytest
from hypothesis import given

from conftest import connected_graphs, to_nx
from leapx.compositions import (
    JOINS,
    DisconnectedInput,
    sd_edge_join,
    sd_vertex_edge_join,
    sd_vertex_join,
)
from leapx.constructions import EDGE, ORIGINAL, Tag, subdivision
from leapx.generators import complete, cycle, named, path, star
from leapx.graph import from_edge_list, is_connected
from leapx.invariants import index_report

SMALL = [named(x) for x in ("K1", "K2", "P3", "C4", "K3")]


def oracle_join(g, h1, h2, kind):
    """Build the join in networkx from S(G) and disjoint copies of H."""
    s = nx.relabel_nodes(to_nx(subdivision(g).graph), lambda x: ("s", x))
    out = nx.union(s, nx.relabel_nodes(to_nx(h1), lambda x: ("a", x)))
    originals = [("s", v) for v in range(g.n)]
    subdiv = [("s", g.n + j) for j in range(g.m)]
    first = originals if kind in ("vertex", "vertex-edge") else subdiv
    out.add_edges_from((x, ("a", u)) for x in first for u in range(h1.n))
    if kind == "vertex-edge":
        out = nx.union(out, nx.relabel_nodes(to_nx(h2), lambda x: ("b", x)))
        out.add_edges_from((x, ("b", u)) for x in subdiv for u in range(h2.n))
    return out


@pytest.mark.parametrize("kind", ["vertex", "edge", "vertex-edge"])
@given(g=connected_graphs(min_n=2, max_n=6))
def test_matches_oracle(kind, g):
    for h1 in SMALL:
        for h2 in SMALL[:3]:
            args = (g, h1, h2) if kind == "vertex-edge" else (g, h1)
            ours = JOINS[kind](*args).graph
            assert nx.is_isomorphic(to_nx(ours), oracle_join(g, h1, h2, kind))


def test_layout():
    j = sd_vertex_edge_join(path(3), complete(2), complete(1))
    assert j.provenance == (
        Tag(ORIGINAL, 0), Tag(ORIGINAL, 1), Tag(ORIGINAL, 2), Tag(EDGE, 0), Tag(EDGE, 1),
        Tag("h1", 0), Tag("h1", 1), Tag("h2", 0),
    )
    assert j.params == (3, 2, 2, 1, 1, 0)
    assert j.kind == "vertex-edge"


@given(connected_graphs(min_n=2, max_n=7))
def test_counts(g):
    n, m = g.n, g.m
    for h in SMALL:
        assert (sd_vertex_join(g, h).graph.n, sd_vertex_join(g, h).graph.m) == (
            n + m + h.n, 2 * m + h.m + n * h.n)
        assert sd_edge_join(g, h).graph.m == 2 * m + h.m + m * h.n
        j = sd_vertex_edge_join(g, h, h)
        assert (j.graph.n, j.graph.m) == (n + m + 2 * h.n, 2 * m + 2 * h.m + (n + m) * h.n)
        assert is_connected(j.graph)


def test_spot_values():
    assert index_report(sd_vertex_join(star(3), complete(2)).graph).LxiC == 42
    assert index_report(sd_vertex_edge_join(path(4), complete(1), complete(1)).graph).LxiC == 96


def test_rejections():
    with pytest.raises(ValueError):
        sd_vertex_join(complete(1), complete(1))
    with pytest.raises(DisconnectedInput):
        sd_edge_join(cycle(4), from_edge_list(2, []))
    with pytest.raises(DisconnectedInput):
        sd_vertex_join(from_edge_list(4, [(0, 1), (2, 3)]), complete(1))
    with pytest.raises(ValueError):
        sd_vertex_edge_join(path(3), complete(1), from_edge_list(0, []))
