"""Exhaustive search for the smallest graph refuting a property."""

from __future__ import annotations

from typing import Callable

from ..constructions import subdivision
from ..formats import write_graph6
from ..generators import enumerate_connected
from ..graph import Graph, eccentricity_tuple, is_bipartite, is_c3c4_free, is_connected
from .core import REGISTRY, Instance, Status


class UnknownProperty(KeyError):
    pass


# A property maps a graph to None (holds) or a witness dict (refuted).
Property = Callable[[Graph], "dict | None"]


def _s_ecc_doubles(g: Graph) -> dict | None:
    """e(v|S(G)) = 2 e(v|G) for every original vertex v."""
    if g.n == 0 or not is_connected(g):
        return None
    ecc_g = eccentricity_tuple(g)
    ecc_s = eccentricity_tuple(subdivision(g).graph)
    for v in range(g.n):
        if ecc_s[v] != 2 * ecc_g[v]:
            return {"vertex": v, "ecc_G": ecc_g[v], "ecc_S": ecc_s[v]}
    return None


PROPERTIES: dict[str, Property] = {"yarahmadi-s-ecc": _s_ecc_doubles}

RESTRICTIONS: dict[str, Callable[[Graph], bool]] = {
    "bipartite": is_bipartite,
    "c3c4-free": is_c3c4_free,
}


def _claim_property(claim_id: str) -> Property:
    claim = REGISTRY[claim_id]

    def prop(g: Graph) -> dict | None:
        inst = Instance([g])
        if claim.applicability(inst) is not None:
            return None
        o = claim.evaluate(inst)
        if o.status != Status.VIOLATION:
            return None
        out = {"lhs": o.lhs}
        if o.bounds is not None:
            out["lower"], out["upper"] = o.bounds
        if o.witness:
            out.update(o.witness)
        return out
    return prop


def resolve(property_id: str) -> Property:
    if property_id in PROPERTIES:
        return PROPERTIES[property_id]
    claim = REGISTRY.get(property_id)
    if claim is not None and claim.arity == 1:
        return _claim_property(property_id)
    raise UnknownProperty(property_id)


def find_counterexample(
    property_id: str, max_n: int, restrict: str | None = None
) -> tuple[Graph, dict] | None:
    """Smallest-n (then first in enumeration order) graph refuting the property."""
    prop = resolve(property_id)
    keep = RESTRICTIONS.get(restrict) if restrict else None
    if restrict and keep is None:
        raise ValueError(f"unknown restriction {restrict!r}")
    for g in enumerate_connected(max_n):
        if keep is not None and not keep(g):
            continue
        witness = prop(g)
        if witness is not None:
            return g, witness
    return None


def counterexample_report(property_id: str, max_n: int, restrict: str | None = None) -> dict:
    hit = find_counterexample(property_id, max_n, restrict)
    out: dict = {"kind": "counterexample", "property": property_id, "max_n": max_n,
                 "restrict": restrict, "found": hit is not None}
    if hit is not None:
        g, witness = hit
        out["graph6"] = write_graph6(g)
        out["n"] = g.n
        out["edges"] = [list(e) for e in g.edges]
        out["witness"] = witness
    return out
