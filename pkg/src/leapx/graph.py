"""Immutable simple graphs and the distance machinery everything else uses.

Vertices are the integers ``0..n-1``.  Adjacency is stored as one bitmask per
vertex, which keeps breadth-first search on the small graphs this package
targets (a few hundred vertices at most) cheap: a BFS layer is the OR of the
neighbour masks of the previous layer.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

UNREACHABLE = -1
ACYCLIC = 0  # girth value for forests


class GraphError(ValueError):
    """Invalid graph data (self-loop, endpoint out of range, ...)."""


class DisconnectedGraph(ValueError):
    """An eccentricity-dependent quantity was requested on a disconnected graph."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]
    labels: tuple | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise GraphError(f"adjacency has {len(self.adj)} rows, expected {self.n}")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for u in _bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"adjacency not symmetric on ({v}, {u})")
        if self.labels is not None and len(self.labels) != self.n:
            raise GraphError("labels must have one entry per vertex")

    @classmethod
    def from_edges(
        cls, n: int, edges: Iterable[tuple[int, int]], labels: Sequence | None = None
    ) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be non-negative")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        if labels is not None:
            return cls(n, tuple(adj), tuple(labels))
        # symmetric and loop-free by construction; skip the O(m) re-validation
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "adj", tuple(adj))
        object.__setattr__(g, "labels", None)
        return g

    # -- basic structure ---------------------------------------------------

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Edges as ``(u, v)`` with ``u < v``, sorted lexicographically."""
        return tuple(
            (u, v) for u in range(self.n) for v in _bits(self.adj[u] >> (u + 1) << (u + 1))
        )

    @property
    def m(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        return tuple(row.bit_count() for row in self.adj)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Return the graph with vertex ``v`` renamed ``perm[v]``."""
        return Graph.from_edges(self.n, ((perm[u], perm[v]) for u, v in self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={list(self.edges)})"

    # -- BFS ---------------------------------------------------------------

    @cached_property
    def layers(self) -> tuple[tuple[int, ...], ...]:
        """``layers[v][k]`` is the bitmask of vertices at distance exactly ``k`` from ``v``."""
        adj = self.adj
        out = []
        for s in range(self.n):
            seen = frontier = 1 << s
            rows = [frontier]
            while True:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                nxt &= ~seen
                if not nxt:
                    break
                seen |= nxt
                rows.append(nxt)
                frontier = nxt
            out.append(tuple(rows))
        return tuple(out)

    @cached_property
    def layer_counts(self) -> tuple[tuple[int, ...], ...]:
        """``layer_counts[v][k]`` is d_k(v), the number of vertices at distance ``k``."""
        return tuple(tuple(x.bit_count() for x in rows) for rows in self.layers)


@dataclass(frozen=True)
class DistanceMatrix:
    dist: tuple[tuple[int, ...], ...]

    def __getitem__(self, key: tuple[int, int]) -> int:
        u, v = key
        return self.dist[u][v]

    def __len__(self) -> int:
        return len(self.dist)


@dataclass(frozen=True)
class EccentricityProfile:
    ecc: tuple[int, ...]
    diameter: int
    full_vertices: frozenset[int]
    ecc_classes: dict[int, frozenset[int]]


@dataclass(frozen=True)
class DegreeVector:
    k: int
    d_k: tuple[int, ...]


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a simple graph; duplicate edges collapse, self-loops are rejected."""
    return Graph.from_edges(n, edges)


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    for v in range(g.n):
        row = [UNREACHABLE] * g.n
        for k, layer in enumerate(g.layers[v]):
            for u in _bits(layer):
                row[u] = k
        rows.append(tuple(row))
    return DistanceMatrix(tuple(rows))


def is_connected(g: Graph) -> bool:
    # The empty graph counts as connected so that sums over L(K1) stay vacuous.
    return g.n == 0 or sum(g.layer_counts[0]) == g.n


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise DisconnectedGraph(f"graph with {g.n} vertices and {g.m} edges is disconnected")


def eccentricity_tuple(g: Graph) -> tuple[int, ...]:
    _require_connected(g)
    return tuple(len(rows) - 1 for rows in g.layer_counts)


def eccentricities(g: Graph) -> EccentricityProfile:
    ecc = eccentricity_tuple(g)
    classes: dict[int, set[int]] = {}
    for v, e in enumerate(ecc):
        classes.setdefault(e, set()).add(v)
    return EccentricityProfile(
        ecc=ecc,
        diameter=max(ecc, default=0),
        full_vertices=frozenset(classes.get(1, ())),
        ecc_classes={a: frozenset(vs) for a, vs in sorted(classes.items())},
    )


def k_degrees(g: Graph, k: int) -> tuple[int, ...]:
    if k < 1:
        raise ValueError("radius k must be at least 1")
    return tuple(rows[k] if k < len(rows) else 0 for rows in g.layer_counts)


def degree_vector(g: Graph, k: int) -> DegreeVector:
    """Per-vertex count of vertices at distance exactly ``k`` (within the component)."""
    return DegreeVector(k, k_degrees(g, k))


def second_degrees(g: Graph) -> tuple[int, ...]:
    return k_degrees(g, 2)


# -- structural predicates -------------------------------------------------


def is_bipartite(g: Graph) -> bool:
    # A graph is bipartite iff no BFS layer contains an edge.
    for v in range(g.n):
        for layer in g.layers[v]:
            for u in _bits(layer):
                if g.adj[u] & layer:
                    return False
    return True


def girth(g: Graph) -> int:
    """Length of a shortest cycle, or ``ACYCLIC`` for forests."""
    best = 0
    for root in range(g.n):
        dist = {root: 0}
        parent = {root: -1}
        queue = [root]
        for x in queue:
            for y in _bits(g.adj[x]):
                if y not in dist:
                    dist[y] = dist[x] + 1
                    parent[y] = x
                    queue.append(y)
                elif parent[x] != y:
                    c = dist[x] + dist[y] + 1
                    if best == 0 or c < best:
                        best = c
    return best


def is_c3c4_free(g: Graph) -> bool:
    """True when ``g`` has no 3-cycle and no 4-cycle, i.e. girth >= 5 or acyclic.

    Freeness is usually phrased with induced subgraphs.  For C3 the induced and
    plain readings agree, and a non-induced C4 has a chord, which closes a
    triangle, so "no induced C3 or C4" is the same as "no C3 or C4 subgraph".
    """
    gi = girth(g)
    return gi == ACYCLIC or gi >= 5


def is_triangle_free(g: Graph) -> bool:
    gi = girth(g)
    return gi == ACYCLIC or gi >= 4


def is_star(g: Graph) -> bool:
    """True iff ``g`` is K_{1,n-1}; K2 counts as the two-vertex star."""
    if g.n < 2:
        return False
    return g.m == g.n - 1 and max(g.degrees) == g.n - 1


def pendant_ecc_property(g: Graph) -> bool:
    """Every vertex's eccentricity is attained at some degree-1 vertex."""
    pendants = 0
    for v, d in enumerate(g.degrees):
        if d == 1:
            pendants |= 1 << v
    if not pendants:
        return False
    _require_connected(g)
    return all(rows[-1] & pendants for rows in g.layers)
