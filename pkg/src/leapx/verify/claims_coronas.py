"""Claims about the four double coronas G^(X) o {H1, H2}.

Closed forms use the shorthands A = n1^2 - n1 - 2 m1 and B = n2^2 + n2 - 2 m2.
"""

from __future__ import annotations

from ..coronas import corona_d2_table, corona_ecc_table
from ..invariants import leap_ecc_connectivity
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

BASE = ("n>=2", "h-nonempty")
GIRTH5 = BASE + ("c3c4-free",)
GIRTH5_BIP = GIRTH5 + ("bipartite",)


def _lxi(inst: Instance, kind: str) -> int:
    return leap_ecc_connectivity(inst.corona(kind).graph)


def _vals(inst: Instance):
    b = dict(inst.base)
    b["A"] = b["n1"] ** 2 - b["n1"] - 2 * b["m1"]
    b["B"] = b["n2"] ** 2 + b["n2"] - 2 * b["m2"]
    return b


def _table_rows(inst: Instance, kind: str, actual, table):
    c = inst.corona(kind)
    return [(tag, actual[x], table[tag], table[tag]) for x, tag in enumerate(c.provenance)]


def _ecc_claim(kind: str):
    def evaluate(inst):
        c = inst.corona(kind)
        return pointwise(_table_rows(inst, kind, ecc_of(c.graph), corona_ecc_table(c)))
    return evaluate


def _d2_claim(kind: str):
    def evaluate(inst):
        c = inst.corona(kind)
        return pointwise(_table_rows(inst, kind, d2_of(c.graph), corona_d2_table(c)))
    return evaluate


_LEMMA = {"S": "4.3", "Q": "4.8", "R": "4.12", "T": "4.16"}
for _kind, _num in _LEMMA.items():
    register(
        f"lem-{_num}.i", K.CASE_TABLE, 3,
        f"{_kind}-corona eccentricity: anchor eccentricity in {_kind}(G) plus 1 or 2", BASE,
        note="K1 excluded: a copy vertex of K1's corona need not reach eccentricity 2",
    )(_ecc_claim(_kind))
    register(
        f"lem-{_num}.ii", K.CASE_TABLE, 3, f"{_kind}-corona second degrees by vertex class", BASE,
    )(_d2_claim(_kind))


def _count_claim(kind: str):
    def evaluate(inst):
        b = inst.base
        n, m, mL = b["n"], b["m"], b["mL"]
        n1, m1, n2, m2 = b["n1"], b["m1"], b["n2"], b["m2"]
        base_edges = {"S": 2 * m, "Q": 2 * m + mL, "R": 3 * m, "T": 3 * m + mL}[kind]
        x = inst.corona(kind).graph
        nv = n * (n1 + 1) + m * (n2 + 1)
        ne = base_edges + n * (m1 + n1) + m * (m2 + n2)
        return pointwise([("vertices", x.n, nv, nv), ("edges", x.m, ne, ne)])
    return evaluate


for _kind in _LEMMA:
    register(
        f"count.corona-{_kind}", K.CASE_TABLE, 3,
        f"{_kind}-corona has n(n1+1)+m(n2+1) vertices", ("h-nonempty",),
    )(_count_claim(_kind))


# -- S --------------------------------------------------------------------------


def _s_common(b):
    return (2 * (b["n1"] + b["n2"] + 1) * b["xiC"] + 2 * b["A"] * b["theta"] + 2 * b["xiCL"]
            + 2 * (2 * b["n1"] + b["B"]) * b["thetaL"])


def _s_lower(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_s_common(b) + 2 * b["mL"]
            + 2 * b["m"] * (3 * n1 + n2 ** 2 + 2 * n2 - 2 * m2 + 1) + 2 * b["n"] * b["A"])


def _s_upper(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_s_common(b) + 4 * b["mL"]
            + b["m"] * (10 * n1 + 3 * n2 ** 2 + 7 * n2 - 6 * m2 + 4) + 3 * b["n"] * b["A"])


def _s_bip_upper(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_s_common(b) + 4 * b["mL"]
            + b["m"] * (8 * n1 + 3 * n2 ** 2 + 5 * n2 - 6 * m2 + 2) + 2 * b["n"] * b["A"])


@register("thm-4.4", K.SANDWICH, 3, "S-corona index bounds", BASE)
def _(inst):
    b = _vals(inst)
    return sandwich(_lxi(inst, "S"), _s_lower(b), _s_upper(b))


@register("cor-4.5", K.SANDWICH, 3, "S-corona index bounds, G bipartite", BASE + ("bipartite",))
def _(inst):
    b = _vals(inst)
    return sandwich(_lxi(inst, "S"), _s_lower(b), _s_bip_upper(b))


@register("cor-4.6", K.EQUALITY, 3, "S-corona index, G bipartite with the pendant property",
          BASE + ("bipartite", "pendant-ecc"))
def _(inst):
    return equality(_lxi(inst, "S"), _s_bip_upper(_vals(inst)))


# -- Q --------------------------------------------------------------------------


def _q_common(b):
    n1, n2 = b["n1"], b["n2"]
    return (b["LxiC"] + (n1 + n2 + 1) * b["xiC"] + b["A"] * b["theta"] + 2 * b["M1"]
            + b["LxiCL"] + (2 * n2 + 1) * b["xiCL"] + (2 * n1 + b["B"]) * b["thetaL"]
            + 3 * b["n"] * b["A"])


def _q_lower(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_q_common(b) + b["M1L"] + 6 * n2 * b["mL"]
            + 2 * b["m"] * (4 * n1 + n2 ** 2 + 3 * n2 - 2 * m2))


def _q_upper(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_q_common(b) + 2 * b["M1L"] + 10 * n2 * b["mL"]
            + b["m"] * (10 * n1 + 3 * n2 ** 2 + 7 * n2 - 6 * m2))


@register("thm-4.9", K.SANDWICH, 3, "Q-corona index bounds, G {C3,C4}-free", GIRTH5)
def _(inst):
    b = _vals(inst)
    return sandwich(_lxi(inst, "Q"), _q_lower(b), _q_upper(b))


@register("cor-4.10", K.EQUALITY, 3,
          "Q-corona index equals the upper bound ({C3,C4}-free, bipartite, pendant)",
          GIRTH5_BIP + ("pendant-ecc",))
def _(inst):
    return equality(_lxi(inst, "Q"), _q_upper(_vals(inst)))


# -- R --------------------------------------------------------------------------


def _r_common(b):
    n1, n2 = b["n1"], b["n2"]
    return (2 * b["LxiC"] + (3 * n1 + n2) * b["xiC"] + b["A"] * b["theta"]
            + 2 * b["xiCL"] + (2 * n1 + b["B"]) * b["thetaL"] + 8 * b["mL"])


def _r_lower(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_r_common(b) + 2 * b["M1"]
            + b["m"] * (14 * n1 + 3 * n2 ** 2 + 5 * n2 - 6 * m2 - 4) + 2 * b["n"] * b["A"])


def _r_upper(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_r_common(b) + 4 * b["M1"]
            + b["m"] * (20 * n1 + 3 * n2 ** 2 + 7 * n2 - 6 * m2 - 8) + 3 * b["n"] * b["A"])


@register("thm-4.13", K.SANDWICH, 3, "R-corona index bounds, G {C3,C4}-free", GIRTH5)
def _(inst):
    b = _vals(inst)
    return sandwich(_lxi(inst, "R"), _r_lower(b), _r_upper(b))


@register("cor-4.14", K.EQUALITY, 3, "R-corona index equals the lower bound ({C3,C4}-free bipartite)",
          GIRTH5_BIP)
def _(inst):
    return equality(_lxi(inst, "R"), _r_lower(_vals(inst)))


# -- T --------------------------------------------------------------------------


def _t_common(b):
    n1, n2 = b["n1"], b["n2"]
    return (2 * b["LxiC"] + (3 * n1 + n2) * b["xiC"] + b["A"] * b["theta"]
            + b["LxiCL"] + (2 * n2 + 1) * b["xiCL"] + (2 * n1 + b["B"]) * b["thetaL"])


def _t_lower(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_t_common(b) + 2 * b["M1"] + b["M1L"] + 6 * n2 * b["mL"]
            + 2 * b["m"] * (6 * n1 + n2 ** 2 + 2 * n2 - 2 * m2 - 2) + 2 * b["n"] * b["A"])


def _t_upper(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_t_common(b) + 4 * b["M1"] + 2 * b["M1L"] + 10 * n2 * b["mL"]
            + b["m"] * (20 * n1 + 3 * n2 ** 2 + 7 * n2 - 6 * m2 - 8) + 3 * b["n"] * b["A"])


def _t_bip_upper(b):
    n1, n2, m2 = b["n1"], b["n2"], b["m2"]
    return (_t_common(b) + 2 * b["M1"] + 2 * b["M1L"] + 10 * n2 * b["mL"]
            + b["m"] * (14 * n1 + 3 * n2 ** 2 + 5 * n2 - 6 * m2 - 4) + 2 * b["n"] * b["A"])


@register("thm-4.17", K.SANDWICH, 3, "T-corona index bounds, G {C3,C4}-free", GIRTH5)
def _(inst):
    b = _vals(inst)
    return sandwich(_lxi(inst, "T"), _t_lower(b), _t_upper(b))


@register("cor-4.18", K.SANDWICH, 3, "T-corona index bounds, G {C3,C4}-free bipartite", GIRTH5_BIP)
def _(inst):
    b = _vals(inst)
    return sandwich(_lxi(inst, "T"), _t_lower(b), _t_bip_upper(b))


@register("cor-4.19", K.EQUALITY, 3,
          "T-corona index equals the bipartite upper bound ({C3,C4}-free, bipartite, pendant)",
          GIRTH5_BIP + ("pendant-ecc",))
def _(inst):
    return equality(_lxi(inst, "T"), _t_bip_upper(_vals(inst)))


__all__: list[str] = []
