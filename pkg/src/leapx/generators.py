"""Instance supply: exhaustive labeled enumeration and seeded random families."""

from __future__ import annotations

import os
import random
from itertools import combinations
from typing import Iterator

from .graph import Graph, all_pairs_distances

DEFAULT_CAP = 7


class CapExceeded(ValueError):
    pass


def exhaustive_cap() -> int:
    """The enumeration cap; ``LEAPX_MAX_N`` may lower it but never raise it."""
    raw = os.environ.get("LEAPX_MAX_N")
    if raw is None:
        return DEFAULT_CAP
    try:
        value = int(raw)
    except ValueError:
        return DEFAULT_CAP
    return max(1, min(value, DEFAULT_CAP))


def check_cap(n_max: int) -> None:
    cap = exhaustive_cap()
    if n_max > cap:
        raise CapExceeded(f"exhaustive enumeration is capped at n={cap}, got {n_max}")


def enumerate_connected(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    """Yield every connected labeled graph with ``n_min <= n <= n_max`` vertices.

    Each labeled adjacency appears exactly once; isomorphic copies are not
    merged.  Order is by vertex count, then by edge mask over the
    lexicographically ordered vertex pairs.
    """
    check_cap(n_max)
    for n in range(max(n_min, 1), n_max + 1):
        pairs = list(combinations(range(n), 2))
        pair_bits = [((1 << u), (1 << v)) for u, v in pairs]
        full = (1 << n) - 1
        for mask in range(1 << len(pairs)):
            adj = [0] * n
            bit = 0
            mm = mask
            while mm:
                if mm & 1:
                    u, v = pairs[bit]
                    bu, bv = pair_bits[bit]
                    adj[u] |= bv
                    adj[v] |= bu
                mm >>= 1
                bit += 1
            # bitmask flood fill from vertex 0
            seen = frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    low = f & -f
                    nxt |= adj[low.bit_length() - 1]
                    f ^= low
                frontier = nxt & ~seen
                seen |= frontier
            if seen == full:
                yield Graph(n, tuple(adj))


def _check_p(p: float) -> None:
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"probability must lie in [0, 1], got {p}")


def random_tree(n: int, seed: int) -> Graph:
    """Uniform random labeled tree via a Pruefer sequence."""
    if n < 1:
        raise ValueError("a tree needs at least one vertex")
    if n <= 2:
        return Graph.from_edges(n, [(0, 1)] if n == 2 else [])
    rng = random.Random(seed)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(n) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(n) if degree[w] == 1)
    edges.append((u, v))
    return Graph.from_edges(n, edges)


def random_connected(n: int, p: float, seed: int) -> Graph:
    """A random spanning tree plus every other pair independently with probability ``p``."""
    _check_p(p)
    rng = random.Random(seed)
    tree = random_tree(n, rng.randrange(2**32))
    edges = set(tree.edges)
    for u, v in combinations(range(n), 2):
        if (u, v) not in edges and rng.random() < p:
            edges.add((u, v))
    return Graph.from_edges(n, sorted(edges))


def random_bipartite(a: int, b: int, p: float, seed: int) -> Graph:
    """Connected bipartite graph on parts ``0..a-1`` and ``a..a+b-1``."""
    _check_p(p)
    if a < 1 or b < 1:
        raise ValueError("both parts must be non-empty")
    rng = random.Random(seed)
    left = list(range(a))
    right = list(range(a, a + b))
    rng.shuffle(left)
    rng.shuffle(right)
    placed_l, placed_r = [left.pop()], [right.pop()]
    edges = {(placed_l[0], placed_r[0])}
    pending = [(x, 0) for x in left] + [(x, 1) for x in right]
    rng.shuffle(pending)
    for x, side in pending:
        if side == 0:
            y = rng.choice(placed_r)
            placed_l.append(x)
        else:
            y = rng.choice(placed_l)
            placed_r.append(x)
        edges.add((min(x, y), max(x, y)))
    for u in range(a):
        for v in range(a, a + b):
            if (u, v) not in edges and rng.random() < p:
                edges.add((u, v))
    return Graph.from_edges(a + b, sorted(edges))


def random_girth5(n: int, p: float, seed: int) -> Graph:
    """Connected graph with no 3- or 4-cycles: a random tree plus chords joining
    vertices at distance at least 4, each accepted with probability ``p``."""
    _check_p(p)
    rng = random.Random(seed)
    g = random_tree(n, rng.randrange(2**32))
    pairs = list(combinations(range(n), 2))
    rng.shuffle(pairs)
    for u, v in pairs:
        if g.has_edge(u, v) or rng.random() >= p:
            continue
        d = all_pairs_distances(g)[u, v]
        if d >= 4:
            g = Graph.from_edges(n, list(g.edges) + [(u, v)])
    return g


def star(n: int) -> Graph:
    """K_{1,n-1} with centre 0."""
    return Graph.from_edges(n, [(0, v) for v in range(1, n)])


def path(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def named(spec: str) -> Graph:
    """Small named graphs: ``K4``, ``P5``, ``C6``, ``S4`` (star on 4 vertices), ``K1,3``, ``K2,3``."""
    s = spec.strip()
    try:
        if s.startswith("K") and "," in s:
            a, b = (int(x) for x in s[1:].split(","))
            return complete_bipartite(a, b)
        head, num = s[0], int(s[1:])
    except (ValueError, IndexError):
        raise ValueError(f"unknown graph name {spec!r}") from None
    builders = {"K": complete, "P": path, "C": cycle, "S": star}
    if head not in builders:
        raise ValueError(f"unknown graph name {spec!r}")
    return builders[head](num)

