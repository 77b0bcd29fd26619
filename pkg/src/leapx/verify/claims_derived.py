"""Claims about L(G), S(G), Q(G), R(G), T(G) and their leap indices."""

from __future__ import annotations

from ..constructions import EDGE, ORIGINAL, Tag
from ..graph import all_pairs_distances, is_c3c4_free, is_triangle_free
from ..invariants import leap_ecc_connectivity
from .core import (
    Instance,
    StatementKind as K,
    Status,
    Outcome,
    conditional_upper,
    d2_of,
    ecc_of,
    equality,
    pointwise,
    pointwise_conditional,
    register,
    sandwich,
)

TREE_LIKE = ("c3c4-free",)


def _split(inst: Instance, kind: str, values):
    n = inst.g.n
    return values[:n], values[n:]


def _vertex_rows(inst: Instance, actual, lo, hi):
    return [(Tag(ORIGINAL, v), actual[v], lo[v], hi[v]) for v in range(inst.g.n)]


def _edge_rows(inst: Instance, actual, lo, hi):
    return [(Tag(EDGE, j), actual[j], lo[j], hi[j]) for j in range(inst.g.m)]


def _ecc_parts(inst: Instance, kind: str):
    return _split(inst, kind, ecc_of(inst.derived(kind).graph))


def _d2_parts(inst: Instance, kind: str):
    return _split(inst, kind, d2_of(inst.derived(kind).graph))


def _line_ecc(inst: Instance):
    return ecc_of(inst.derived("L").graph)


def _line_d2(inst: Instance):
    return d2_of(inst.derived("L").graph)


def _lxi(inst: Instance, kind: str) -> int:
    return leap_ecc_connectivity(inst.derived(kind).graph)


# -- eccentricity sandwiches ----------------------------------------------


@register("lem-2.1.i", K.SANDWICH, 1, "2e(v|G) <= e(v|S(G)) <= 2e(v|G)+1 for v in V(G)", ())
def _(inst):
    ev, _ = _ecc_parts(inst, "S")
    e = inst.ecc
    return pointwise(_vertex_rows(inst, ev, [2 * x for x in e], [2 * x + 1 for x in e]))


@register("lem-2.1.ii", K.SANDWICH, 1, "2e(e|L(G)) <= e(e|S(G)) <= 2e(e|L(G))+1 for e in E(G)", ())
def _(inst):
    _, ee = _ecc_parts(inst, "S")
    el = _line_ecc(inst)
    return pointwise(_edge_rows(inst, ee, [2 * x for x in el], [2 * x + 1 for x in el]))


@register(
    "obs-2.s-bipartite", K.EQUALITY, 1, "e(v|S(G)) = 2e(v|G) when G is bipartite", ("bipartite",)
)
def _(inst):
    ev, _ = _ecc_parts(inst, "S")
    twice = [2 * x for x in inst.ecc]
    return pointwise(_vertex_rows(inst, ev, twice, twice))


@register(
    "obs-2.s-pendant-edge", K.EQUALITY, 1,
    "e(e|S(G)) = 2e(e|L(G))+1 when every eccentricity is attained at a pendant vertex",
    ("pendant-ecc",),
)
def _(inst):
    _, ee = _ecc_parts(inst, "S")
    target = [2 * x + 1 for x in _line_ecc(inst)]
    return pointwise(_edge_rows(inst, ee, target, target))


@register("lem-2.8.i", K.EQUALITY, 1, "e(v|Q(G)) = e(v|G)+1 for v in V(G)", ("n>=2",),
          note="K1 excluded: Q(K1)=K1 has eccentricity 0")
def _(inst):
    ev, _ = _ecc_parts(inst, "Q")
    t = [x + 1 for x in inst.ecc]
    return pointwise(_vertex_rows(inst, ev, t, t))


@register("lem-2.8.ii", K.SANDWICH, 1, "e(e|L(G)) <= e(e|Q(G)) <= e(e|L(G))+1", ())
def _(inst):
    _, ee = _ecc_parts(inst, "Q")
    el = _line_ecc(inst)
    return pointwise(_edge_rows(inst, ee, el, [x + 1 for x in el]))


@register(
    "obs-2.q-pendant-edge", K.EQUALITY, 1,
    "e(e|Q(G)) = e(e|L(G))+1 for {C3,C4}-free bipartite G with the pendant property",
    ("bipartite", "c3c4-free", "pendant-ecc"),
)
def _(inst):
    _, ee = _ecc_parts(inst, "Q")
    t = [x + 1 for x in _line_ecc(inst)]
    return pointwise(_edge_rows(inst, ee, t, t))


@register("lem-2.12.i", K.SANDWICH, 1, "e(v|G) <= e(v|R(G)) <= e(v|G)+1", ())
def _(inst):
    ev, _ = _ecc_parts(inst, "R")
    e = inst.ecc
    return pointwise(_vertex_rows(inst, ev, e, [x + 1 for x in e]))


@register("lem-2.12.ii", K.EQUALITY, 1, "e(e|R(G)) = e(e|L(G))+1", ())
def _(inst):
    _, ee = _ecc_parts(inst, "R")
    t = [x + 1 for x in _line_ecc(inst)]
    return pointwise(_edge_rows(inst, ee, t, t))


@register(
    "obs-2.r-bipartite", K.EQUALITY, 1, "e(v|R(G)) = e(v|G) for {C3,C4}-free bipartite G",
    ("bipartite", "c3c4-free"),
)
def _(inst):
    ev, _ = _ecc_parts(inst, "R")
    return pointwise(_vertex_rows(inst, ev, inst.ecc, inst.ecc))


@register(
    "obs-2.r-odd-cycle", K.EQUALITY, 1,
    "e(v|R(G)) = e(v|G)+1 for {C3,C4}-free G containing an odd cycle",
    ("non-bipartite", "c3c4-free"),
)
def _(inst):
    ev, _ = _ecc_parts(inst, "R")
    t = [x + 1 for x in inst.ecc]
    return pointwise(_vertex_rows(inst, ev, t, t))


@register("lem-2.16.i", K.SANDWICH, 1, "e(v|G) <= e(v|T(G)) <= e(v|G)+1", ())
def _(inst):
    ev, _ = _ecc_parts(inst, "T")
    e = inst.ecc
    return pointwise(_vertex_rows(inst, ev, e, [x + 1 for x in e]))


@register("lem-2.16.ii", K.SANDWICH, 1, "e(e|L(G)) <= e(e|T(G)) <= e(e|L(G))+1", ())
def _(inst):
    _, ee = _ecc_parts(inst, "T")
    el = _line_ecc(inst)
    return pointwise(_edge_rows(inst, ee, el, [x + 1 for x in el]))


@register(
    "obs-2.t-bipartite", K.EQUALITY, 1, "e(v|T(G)) = e(v|G) for {C3,C4}-free bipartite G",
    ("bipartite", "c3c4-free"),
)
def _(inst):
    ev, _ = _ecc_parts(inst, "T")
    return pointwise(_vertex_rows(inst, ev, inst.ecc, inst.ecc))


@register(
    "obs-2.t-pendant-edge", K.EQUALITY, 1,
    "e(e|T(G)) = e(e|L(G))+1 for {C3,C4}-free G with the pendant property",
    ("c3c4-free", "pendant-ecc"),
)
def _(inst):
    _, ee = _ecc_parts(inst, "T")
    t = [x + 1 for x in _line_ecc(inst)]
    return pointwise(_edge_rows(inst, ee, t, t))


# -- distances -------------------------------------------------------------


@register(
    "lem-2.2", K.CASE_TABLE, 1,
    "distance relations between S, Q, R, T, G and L(G) for distinct pairs", (),
    note="the +1 relations are asserted for distinct pairs only",
)
def _(inst):
    n, m = inst.g.n, inst.g.m
    dg = all_pairs_distances(inst.g).dist
    dl = all_pairs_distances(inst.derived("L").graph).dist
    ds = {k: all_pairs_distances(inst.derived(k).graph).dist for k in "SQRT"}
    rows = []
    for a in range(n):
        for b in range(a + 1, n):
            base = dg[a][b]
            for k, expect in (("S", 2 * base), ("Q", base + 1), ("R", base), ("T", base)):
                rows.append((f"d_{k}(v{a},v{b})", ds[k][a][b], expect, expect))
    for a in range(m):
        for b in range(a + 1, m):
            base = dl[a][b]
            for k, expect in (("S", 2 * base), ("Q", base), ("R", base + 1), ("T", base)):
                rows.append((f"d_{k}(e{a},e{b})", ds[k][n + a][n + b], expect, expect))
    return pointwise(rows)


# -- second degrees ----------------------------------------------------------


@register(
    "lem-2.3", K.UPPER_BOUND, 1,
    "sum of d2(v|G) <= M1(G) - 2m, equality iff G is {C3,C4}-free", (),
)
def _(inst):
    r = inst.report
    return conditional_upper(r.sum_d2, r.M1 - 2 * r.m, is_c3c4_free(inst.g))


@register("lem-2.4.i", K.EQUALITY, 1, "d2(v|S(G)) = d1(v|G)", ())
def _(inst):
    dv, _ = _d2_parts(inst, "S")
    d1 = inst.g.degrees
    return pointwise(_vertex_rows(inst, dv, d1, d1))


@register("lem-2.4.ii", K.EQUALITY, 1, "d2(e|S(G)) = d1(e|L(G))", ())
def _(inst):
    _, de = _d2_parts(inst, "S")
    dl = inst.line_degrees
    return pointwise(_edge_rows(inst, de, dl, dl))


def _cond_rows(labels, actual, ref):
    return [(lab, a, r) for lab, a, r in zip(labels, actual, ref)]


def _vtags(inst):
    return [Tag(ORIGINAL, v) for v in range(inst.g.n)]


def _etags(inst):
    return [Tag(EDGE, j) for j in range(inst.g.m)]


@register(
    "lem-2.9.i", K.LOWER_BOUND, 1,
    "d2(v|Q(G)) >= d1(v|G) + d2(v|G), equality iff {C3,C4}-free", (),
)
def _(inst):
    dv, _ = _d2_parts(inst, "Q")
    ref = [a + b for a, b in zip(inst.g.degrees, d2_of(inst.g))]
    return pointwise_conditional(_cond_rows(_vtags(inst), dv, ref), "ge", is_c3c4_free(inst.g))


@register(
    "lem-2.9.ii", K.UPPER_BOUND, 1,
    "d2(e|Q(G)) <= d1(e|L(G)) + d2(e|L(G)), equality iff C3-free", (),
)
def _(inst):
    _, de = _d2_parts(inst, "Q")
    ref = [a + b for a, b in zip(inst.line_degrees, _line_d2(inst))]
    return pointwise_conditional(_cond_rows(_etags(inst), de, ref), "le", is_triangle_free(inst.g))


@register(
    "lem-2.13.i", K.LOWER_BOUND, 1, "d2(v|R(G)) >= 2 d2(v|G), equality iff {C3,C4}-free", (),
)
def _(inst):
    dv, _ = _d2_parts(inst, "R")
    ref = [2 * x for x in d2_of(inst.g)]
    return pointwise_conditional(_cond_rows(_vtags(inst), dv, ref), "ge", is_c3c4_free(inst.g))


@register(
    "lem-2.13.ii", K.UPPER_BOUND, 1, "d2(e|R(G)) <= 2 d1(e|L(G)), equality iff C3-free", (),
)
def _(inst):
    _, de = _d2_parts(inst, "R")
    ref = [2 * x for x in inst.line_degrees]
    return pointwise_conditional(_cond_rows(_etags(inst), de, ref), "le", is_triangle_free(inst.g))


@register(
    "lem-2.17.i", K.LOWER_BOUND, 1, "d2(v|T(G)) >= 2 d2(v|G), equality iff {C3,C4}-free", (),
)
def _(inst):
    dv, _ = _d2_parts(inst, "T")
    ref = [2 * x for x in d2_of(inst.g)]
    return pointwise_conditional(_cond_rows(_vtags(inst), dv, ref), "ge", is_c3c4_free(inst.g))


@register(
    "lem-2.17.ii", K.UPPER_BOUND, 1,
    "d2(e|T(G)) <= d1(e|L(G)) + d2(e|L(G)), equality iff C3-free", (),
)
def _(inst):
    _, de = _d2_parts(inst, "T")
    ref = [a + b for a, b in zip(inst.line_degrees, _line_d2(inst))]
    return pointwise_conditional(_cond_rows(_etags(inst), de, ref), "le", is_triangle_free(inst.g))


# -- degrees and counts --------------------------------------------------------


def _degree_table(inst: Instance, kind: str, v_factor: int, e_line: bool) -> Outcome:
    deg = inst.derived(kind).graph.degrees
    n = inst.g.n
    rows = [(Tag(ORIGINAL, v), deg[v], v_factor * d, v_factor * d) for v, d in enumerate(inst.g.degrees)]
    for j, dl in enumerate(inst.line_degrees):
        want = 2 + (dl if e_line else 0)
        rows.append((Tag(EDGE, j), deg[n + j], want, want))
    return pointwise(rows)


@register("lem-4.1.i", K.CASE_TABLE, 1, "degrees in S(G) by vertex class", ())
def _(inst):
    return _degree_table(inst, "S", 1, False)


@register("lem-4.1.ii", K.CASE_TABLE, 1, "degrees in Q(G) by vertex class", ())
def _(inst):
    return _degree_table(inst, "Q", 1, True)


@register("lem-4.1.iii", K.CASE_TABLE, 1, "degrees in R(G) by vertex class", ())
def _(inst):
    return _degree_table(inst, "R", 2, False)


@register("lem-4.1.iv", K.CASE_TABLE, 1, "degrees in T(G) by vertex class", ())
def _(inst):
    return _degree_table(inst, "T", 2, True)


@register(
    "count.derived", K.CASE_TABLE, 1,
    "vertex and edge counts of L, S, Q, R, T; |E(L(G))| = M1/2 - m", (),
)
def _(inst):
    n, m = inst.g.n, inst.g.m
    r = inst.report
    mL = inst.derived("L").graph.m
    rows = [("|E(L)| = M1/2 - m", 2 * mL, r.M1 - 2 * m, r.M1 - 2 * m),
            ("|V(L)|", inst.derived("L").graph.n, m, m)]
    expected_edges = {"S": 2 * m, "Q": 2 * m + mL, "R": 3 * m, "T": 3 * m + mL}
    for k in "SQRT":
        x = inst.derived(k).graph
        rows.append((f"|V({k})|", x.n, n + m, n + m))
        rows.append((f"|E({k})|", x.m, expected_edges[k], expected_edges[k]))
    return pointwise(rows)


# -- leap eccentric connectivity of S, Q, R, T -------------------------------------


@register("thm-2.5", K.SANDWICH, 1, "LxiC(S(G)) between 2xiC(G)+2xiC(L) and that plus 2m+2|E(L)|", ())
def _(inst):
    b = inst.base
    lower = 2 * b["xiC"] + 2 * b["xiCL"]
    return sandwich(_lxi(inst, "S"), lower, lower + 2 * b["m"] + 2 * b["mL"])


@register("cor-2.6", K.SANDWICH, 1, "LxiC(S(G)) bounds for bipartite G", ("bipartite",))
def _(inst):
    b = inst.base
    lower = 2 * b["xiC"] + 2 * b["xiCL"]
    return sandwich(_lxi(inst, "S"), lower, lower + 2 * b["mL"])


@register(
    "cor-2.7", K.EQUALITY, 1, "LxiC(S(G)) = 2xiC(G)+2xiC(L)+2|E(L)| (bipartite, pendant property)",
    ("bipartite", "pendant-ecc"),
)
def _(inst):
    b = inst.base
    return equality(_lxi(inst, "S"), 2 * b["xiC"] + 2 * b["xiCL"] + 2 * b["mL"])


def _q_bounds(b):
    lower = b["xiC"] + b["LxiC"] + b["M1"] + b["xiCL"] + b["LxiCL"]
    return lower, lower + b["M1L"]


@register("thm-2.10", K.SANDWICH, 1, "LxiC(Q(G)) bounds for {C3,C4}-free G", TREE_LIKE)
def _(inst):
    return sandwich(_lxi(inst, "Q"), *_q_bounds(inst.base))


@register(
    "cor-2.11", K.EQUALITY, 1, "LxiC(Q(G)) equals the upper bound ({C3,C4}-free, bipartite, pendant)",
    ("bipartite", "c3c4-free", "pendant-ecc"),
)
def _(inst):
    return equality(_lxi(inst, "Q"), _q_bounds(inst.base)[1])


def _r_bounds(b):
    lower = 2 * b["LxiC"] + 2 * b["xiCL"] + 4 * b["mL"]
    upper = 2 * b["LxiC"] + 2 * b["M1"] - 4 * b["m"] + 2 * b["xiCL"] + 4 * b["mL"]
    return lower, upper


@register("thm-2.14", K.SANDWICH, 1, "LxiC(R(G)) bounds for {C3,C4}-free G", TREE_LIKE)
def _(inst):
    return sandwich(_lxi(inst, "R"), *_r_bounds(inst.base))


@register(
    "cor-2.15", K.EQUALITY, 1, "LxiC(R(G)) equals the lower bound ({C3,C4}-free bipartite)",
    ("bipartite", "c3c4-free"),
)
def _(inst):
    return equality(_lxi(inst, "R"), _r_bounds(inst.base)[0])


def _t_bounds(b):
    lower = 2 * b["LxiC"] + b["xiCL"] + b["LxiCL"]
    upper = 2 * b["LxiC"] + 2 * b["M1"] - 4 * b["m"] + b["xiCL"] + b["LxiCL"] + b["M1L"]
    return lower, upper


@register(
    "thm-2.18", K.SANDWICH, 1, "LxiC(T(G)) bounds for {C3,C4}-free G", TREE_LIKE,
    note="upper bound encoded with a single '+' between xiC(L) and LxiC(L), as the derivation requires",
)
def _(inst):
    return sandwich(_lxi(inst, "T"), *_t_bounds(inst.base))


def _t_bip_upper(b):
    return 2 * b["LxiC"] + b["xiCL"] + b["LxiCL"] + b["M1L"]


@register(
    "cor-2.19", K.SANDWICH, 1, "LxiC(T(G)) bounds for {C3,C4}-free bipartite G",
    ("bipartite", "c3c4-free"),
)
def _(inst):
    b = inst.base
    return sandwich(_lxi(inst, "T"), _t_bounds(b)[0], _t_bip_upper(b))


@register(
    "cor-2.20", K.EQUALITY, 1,
    "LxiC(T(G)) equals the bipartite upper bound ({C3,C4}-free, bipartite, pendant)",
    ("bipartite", "c3c4-free", "pendant-ecc"),
)
def _(inst):
    return equality(_lxi(inst, "T"), _t_bip_upper(inst.base))


__all__: list[str] = []
del Status
