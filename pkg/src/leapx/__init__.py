"""Leap eccentric connectivity and companion indices on subdivision-derived graphs,
joins and double coronas, with a brute-force claim checker."""

from .compositions import JOINS, DisconnectedInput, sd_edge_join, sd_vertex_edge_join, sd_vertex_join
from .constructions import BUILDERS, DerivedGraph, Tag, construct, line_graph, split_by_provenance
from .coronas import CoronaGraph, EmptyH, double_corona
from .formats import FormatError, parse_edgelist, parse_graph6, write_edgelist, write_graph6
from .graph import DisconnectedGraph, Graph, GraphError, from_edge_list
from .invariants import IndexReport, index_report

__version__ = "0.1.0"

__all__ = [
    "BUILDERS", "CoronaGraph", "DerivedGraph", "DisconnectedGraph", "DisconnectedInput",
    "EmptyH", "FormatError", "Graph", "GraphError", "IndexReport", "JOINS", "Tag",
    "construct", "double_corona", "from_edge_list", "index_report", "line_graph",
    "parse_edgelist", "parse_graph6", "sd_edge_join", "sd_vertex_edge_join", "sd_vertex_join",
    "split_by_provenance", "write_edgelist", "write_graph6",
]
