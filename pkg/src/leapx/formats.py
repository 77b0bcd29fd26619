"""graph6 (short form, n <= 62) and a plain edge-list format."""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator

from .graph import Graph, GraphError

MAX_SHORT_N = 62
_HEADER = ">>graph6<<"


class FormatError(ValueError):
    pass


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_HEADER):
        s = s[len(_HEADER):]
    if not s:
        raise FormatError("empty graph6 string")
    codes = [ord(ch) - 63 for ch in s]
    if any(not 0 <= c <= 63 for c in codes):
        raise FormatError(f"graph6 byte out of range in {s!r}")
    n = codes[0]
    if n == 63:
        raise FormatError("long-form graph6 (n > 62) is not supported")
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(codes) != expected:
        raise FormatError(f"graph6 string for n={n} must have {expected} bytes, got {len(codes)}")
    edges = []
    k = 0
    for v in range(1, n):
        for u in range(v):
            chunk = codes[1 + k // 6]
            if chunk >> (5 - k % 6) & 1:
                edges.append((u, v))
            k += 1
    return Graph.from_edges(n, edges)


def write_graph6(g: Graph) -> str:
    if g.n > MAX_SHORT_N:
        raise FormatError("long-form graph6 (n > 62) is not supported")
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        bits.extend(row >> u & 1 for u in range(v))
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(g.n + 63)]
    for i in range(0, len(bits), 6):
        val = 0
        for b in bits[i:i + 6]:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_edgelist(text: str) -> Graph:
    """One ``u v`` pair per line, 0-based; ``#`` comments and blank lines are
    ignored; the first data line may be ``n=<count>`` to declare isolated
    vertices."""
    n_decl = None
    edges = []
    first = True
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if first and line.startswith("n="):
            try:
                n_decl = int(line[2:])
            except ValueError:
                raise FormatError(f"line {lineno}: bad vertex count {line!r}") from None
            first = False
            continue
        first = False
        parts = line.split()
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise FormatError(f"line {lineno}: non-integer vertex in {raw!r}") from None
        if u < 0 or v < 0:
            raise FormatError(f"line {lineno}: negative vertex in {raw!r}")
        edges.append((u, v))
    top = max((max(e) for e in edges), default=-1) + 1
    n = top if n_decl is None else n_decl
    try:
        return Graph.from_edges(n, edges)
    except GraphError as exc:
        raise FormatError(str(exc)) from None


def write_edgelist(g: Graph) -> str:
    lines = [f"n={g.n}"] + [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def iter_graph6(lines: Iterable[str]) -> Iterator[Graph]:
    for line in lines:
        if line.strip():
            yield parse_graph6(line)


def read_graphs(path: str | Path, fmt: str) -> list[Graph]:
    """A graph6 file holds one graph per line; an edge-list file holds one graph."""
    text = Path(path).read_text()
    if fmt == "graph6":
        return list(iter_graph6(text.splitlines()))
    if fmt == "edgelist":
        return [parse_edgelist(text)]
    raise ValueError(f"unknown format {fmt!r}")
