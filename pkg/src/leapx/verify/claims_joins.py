"""Claims about the subdivision vertex, edge and vertex-edge joins."""

from __future__ import annotations

from ..constructions import EDGE, H1, H2, ORIGINAL
from .core import (
    Instance,
    StatementKind as K,
    d2_of,
    ecc_of,
    equality,
    pointwise,
    register,
    sandwich,
)
from ..invariants import leap_ecc_connectivity

BASE = ("n>=3", "h-connected")
STAR = BASE + ("star",)
NON_STAR = BASE + ("non-star",)


def _center(inst: Instance) -> int:
    return max(range(inst.g.n), key=lambda v: inst.g.degrees[v])


def _rows(inst: Instance, kind: str, values, expect):
    """``expect(tag)`` returns the admissible ``(lo, hi)`` for that vertex."""
    j = inst.join(kind)
    out = []
    for x, tag in enumerate(j.provenance):
        lo, hi = expect(tag)
        out.append((tag, values[x], lo, hi))
    return out


def _ecc_rows(inst, kind, expect):
    return _rows(inst, kind, ecc_of(inst.join(kind).graph), expect)


def _d2_rows(inst, kind, expect):
    return _rows(inst, kind, d2_of(inst.join(kind).graph), expect)


def _fixed(value_of):
    def expect(tag):
        v = value_of(tag)
        return (v, v) if isinstance(v, int) else v
    return expect


def _lxi(inst, kind) -> int:
    return leap_ecc_connectivity(inst.join(kind).graph)


# -- subdivision vertex join ------------------------------------------------


@register("lem-3.2.i", K.CASE_TABLE, 2, "vertex join eccentricities, G a star", STAR,
          note="centre of the star has eccentricity 2, its leaves 3")
def _(inst):
    c = _center(inst)
    table = {EDGE: 3, H1: 2}
    return pointwise(_ecc_rows(inst, "vertex", _fixed(
        lambda t: (2 if t.index == c else 3) if t.role == ORIGINAL else table[t.role])))


@register("lem-3.2.ii", K.CASE_TABLE, 2, "vertex join eccentricities, G not a star", NON_STAR)
def _(inst):
    table = {ORIGINAL: 3, EDGE: (3, 4), H1: 2}
    ecc = ecc_of(inst.join("vertex").graph)
    seen = sorted({ecc[x] for x, t in enumerate(inst.join("vertex").provenance) if t.role == EDGE})
    return pointwise(_ecc_rows(inst, "vertex", _fixed(lambda t: table[t.role])),
                     detail={"edge_eccentricities": seen})


@register("lem-3.2.iii", K.CASE_TABLE, 2, "vertex join second degrees", BASE)
def _(inst):
    n, m, n1 = inst.g.n, inst.g.m, inst.h1.n
    dl, dh = inst.line_degrees, inst.h1.degrees

    def val(t):
        if t.role == ORIGINAL:
            return n - 1
        if t.role == EDGE:
            return dl[t.index] + n1
        return n1 - 1 - dh[t.index] + m
    return pointwise(_d2_rows(inst, "vertex", _fixed(val)))


@register("thm-3.3", K.EQUALITY, 2, "vertex join index, G a star", STAR)
def _(inst):
    n, n1, m1 = inst.g.n, inst.h1.n, inst.h1.m
    rhs = (3 * n - 1) * (n - 1) + (3 * n + 2 * n1 - 3) * (n + n1 - 2) - 4 * m1
    return equality(_lxi(inst, "vertex"), rhs)


def _thm34(b):
    n, m, n1, m1, mL = b["n"], b["m"], b["n1"], b["m1"], b["mL"]
    lower = 3 * (n - 1) * n + 6 * mL + (2 * n1 + 5 * m - 2) * n1 - 4 * m1
    upper = 3 * (n - 1) * n + 8 * mL + 2 * (n1 + 3 * m - 1) * n1 - 4 * m1
    return lower, upper


@register("thm-3.4", K.SANDWICH, 2, "vertex join index bounds, G not a star", NON_STAR)
def _(inst):
    return sandwich(_lxi(inst, "vertex"), *_thm34(inst.base))


@register(
    "cor-3.5", K.EQUALITY, 2, "vertex join index attains the lower bound under the pendant property",
    NON_STAR + ("pendant-ecc",),
)
def _(inst):
    return equality(_lxi(inst, "vertex"), _thm34(inst.base)[0])


# -- subdivision edge join ----------------------------------------------------


@register("lem-3.7.i", K.CASE_TABLE, 2, "edge join eccentricities, G a star", STAR,
          note="centre of the star has eccentricity 2, its leaves 4")
def _(inst):
    c = _center(inst)
    table = {EDGE: 3, H1: 2}
    return pointwise(_ecc_rows(inst, "edge", _fixed(
        lambda t: (2 if t.index == c else 4) if t.role == ORIGINAL else table[t.role])))


@register("lem-3.7.ii", K.CASE_TABLE, 2, "edge join eccentricities, G not a star", NON_STAR)
def _(inst):
    ecc = inst.ecc
    table = {EDGE: 3, H1: 2}
    return pointwise(_ecc_rows(inst, "edge", _fixed(
        lambda t: (3 if ecc[t.index] == 1 else 4) if t.role == ORIGINAL else table[t.role])))


@register("lem-3.7.iii", K.CASE_TABLE, 2, "edge join second degrees", BASE)
def _(inst):
    n, m, n1 = inst.g.n, inst.g.m, inst.h1.n
    dg, dh = inst.g.degrees, inst.h1.degrees

    def val(t):
        if t.role == ORIGINAL:
            return dg[t.index] + n1
        if t.role == EDGE:
            return m - 1
        return n1 - 1 - dh[t.index] + n
    return pointwise(_d2_rows(inst, "edge", _fixed(val)))


@register("thm-3.8", K.EQUALITY, 2, "edge join index, G a star", STAR)
def _(inst):
    n, n1, m1 = inst.g.n, inst.h1.n, inst.h1.m
    rhs = (3 * n + 4 * n1 - 2) * (n - 1) + 2 * (n + n1 - 1) * (n1 + 1) - 4 * m1
    return equality(_lxi(inst, "edge"), rhs)


@register("thm-3.9", K.EQUALITY, 2, "edge join index with full-vertex correction, G not a star",
          NON_STAR)
def _(inst):
    b = inst.base
    n, m, n1, m1 = b["n"], b["m"], b["n1"], b["m1"]
    rhs = m * (3 * m + 5) + 2 * n1 * (n1 + 3 * n - 1) - 4 * m1 - (n + n1 - 1) * b["full"]
    return equality(_lxi(inst, "edge"), rhs)


# -- subdivision vertex-edge join -----------------------------------------------


@register("lem-3.11.i", K.CASE_TABLE, 3, "vertex-edge join eccentricities, G a star", STAR,
          note="centre of the star has eccentricity 2, its leaves 3")
def _(inst):
    c = _center(inst)
    return pointwise(_ecc_rows(inst, "vertex-edge", _fixed(
        lambda t: 2 if t.role == ORIGINAL and t.index == c else 3)))


@register("lem-3.11.ii", K.CASE_TABLE, 3, "vertex-edge join eccentricities, G not a star",
          NON_STAR)
def _(inst):
    return pointwise(_ecc_rows(inst, "vertex-edge", _fixed(lambda t: 3)))


@register("lem-3.11.iii", K.CASE_TABLE, 3, "vertex-edge join second degrees", BASE)
def _(inst):
    n, m, n1, n2 = inst.g.n, inst.g.m, inst.h1.n, inst.h2.n
    d1, d2 = inst.h1.degrees, inst.h2.degrees

    def val(t):
        if t.role == ORIGINAL:
            return n - 1 + n2
        if t.role == EDGE:
            return m - 1 + n1
        if t.role == H1:
            return n1 - 1 - d1[t.index] + m
        return n2 - 1 - d2[t.index] + n
    return pointwise(_d2_rows(inst, "vertex-edge", _fixed(val)))


@register("thm-3.12", K.EQUALITY, 3, "vertex-edge join index, G a star", STAR)
def _(inst):
    b = inst.base
    n, n1, n2 = b["n"], b["n1"], b["n2"]
    rhs = (3 * (n + n1 - 2) * (n + n1 - 1) + (n + n2 - 1) * (3 * n + 3 * n2 - 1)
           - 6 * (b["m1"] + b["m2"]))
    return equality(_lxi(inst, "vertex-edge"), rhs)


@register("thm-3.13", K.EQUALITY, 3, "vertex-edge join index, G not a star", NON_STAR)
def _(inst):
    b = inst.base
    n, m, n1, n2 = b["n"], b["m"], b["n1"], b["n2"]
    rhs = (3 * (n + n2 - 1) * (n + n2) + 3 * (m + n1 - 1) * (m + n1)
           - 6 * (b["m1"] + b["m2"]))
    return equality(_lxi(inst, "vertex-edge"), rhs)


# -- counts ----------------------------------------------------------------------


def _count(inst: Instance, kind: str, vertices: int, edges: int):
    x = inst.join(kind).graph
    return pointwise([("vertices", x.n, vertices, vertices), ("edges", x.m, edges, edges)])


@register("count.vertex-join", K.CASE_TABLE, 2, "vertex join has n+m+n1 vertices, 2m+n*n1+m1 edges",
          ("n>=2", "h-connected"))
def _(inst):
    n, m, n1, m1 = inst.g.n, inst.g.m, inst.h1.n, inst.h1.m
    return _count(inst, "vertex", n + m + n1, 2 * m + n * n1 + m1)


@register("count.edge-join", K.CASE_TABLE, 2, "edge join has n+m+n1 vertices, 2m+m*n1+m1 edges",
          ("n>=2", "h-connected"))
def _(inst):
    n, m, n1, m1 = inst.g.n, inst.g.m, inst.h1.n, inst.h1.m
    return _count(inst, "edge", n + m + n1, 2 * m + m * n1 + m1)


@register(
    "count.vertex-edge-join", K.CASE_TABLE, 3,
    "vertex-edge join has n+m+n1+n2 vertices, 2m+n*n1+m*n2+m1+m2 edges", ("n>=2", "h-connected"),
)
def _(inst):
    n, m = inst.g.n, inst.g.m
    n1, m1, n2, m2 = inst.h1.n, inst.h1.m, inst.h2.n, inst.h2.m
    return _count(inst, "vertex-edge", n + m + n1 + n2, 2 * m + n * n1 + m * n2 + m1 + m2)


__all__: list[str] = []
