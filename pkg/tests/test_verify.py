from __future__ import annotations

import json
from pathlib import Path

import jsonschema
import pytest

from leapx.formats import parse_graph6
from leapx.generators import complete, cycle, named, path, star
from leapx.graph import from_edge_list
from leapx.invariants import index_report
from leapx.verify import (
    PROPERTIES,
    REGISTRY,
    ArityMismatch,
    Instance,
    Status,
    UnknownClaim,
    UnknownProperty,
    check_claim,
    evaluate,
    expand_ids,
    find_counterexample,
    get_claim,
    sweep,
)
from leapx.verify.core import (
    PREDICATES,
    conditional_upper,
    equality,
    pointwise,
    pointwise_conditional,
    sandwich,
)
from leapx.verify.counterexample import counterexample_report
from leapx.verify.sweep import family_graphs, h_graphs

SCHEMA = json.loads((Path(__file__).parents[1] / "docs" / "report.schema.json").read_text())


def g(spec):
    try:
        return named(spec)
    except ValueError:
        return parse_graph6(spec)


# -- outcome builders ----------------------------------------------------------


def test_builders():
    assert equality(3, 3).status == Status.EQUALITY_HOLDS
    assert equality(3, 4).status == Status.VIOLATION
    assert sandwich(5, 5, 5).status == Status.EQUALITY_HOLDS
    assert sandwich(5, 4, 6).status == Status.BOUND_HOLDS
    assert sandwich(7, 4, 6).witness == {"failed": "upper"}
    assert conditional_upper(4, 8, False).status == Status.STRICT
    assert conditional_upper(8, 8, True).status == Status.EQUALITY_HOLDS
    assert conditional_upper(8, 8, False).witness["failed"] == "equality-iff"
    assert conditional_upper(9, 8, True).witness == {"failed": "upper"}


def test_pointwise_builders():
    assert pointwise([("a", 1, 1, 1)]).status == Status.EQUALITY_HOLDS
    assert pointwise([("a", 1, 1, 2)]).status == Status.BOUND_HOLDS
    o = pointwise([("a", 1, 1, 1), ("b", 5, 2, 3), ("c", 9, 0, 0)])
    assert o.status == Status.VIOLATION and o.lhs == 1 and o.bounds == (3, 3)
    assert o.witness == {"vertex": "b", "actual": 5, "expected": [2, 3], "failures": 2}
    assert pointwise_conditional([("a", 2, 2)], "ge", True).status == Status.EQUALITY_HOLDS
    assert pointwise_conditional([("a", 3, 2)], "ge", False).status == Status.STRICT
    assert pointwise_conditional([("a", 1, 2)], "ge", False).witness["failed"] == "direction"
    assert pointwise_conditional([("a", 3, 2)], "le", True).witness["failed"] == "direction"
    assert pointwise_conditional([("a", 3, 2)], "ge", True).witness["failed"] == "equality-in-class"
    assert pointwise_conditional([("a", 2, 2)], "ge", False).witness["failed"] == "equality-off-class"


# -- registry ----------------------------------------------------------------------


def test_registry_shape():
    assert len(REGISTRY) == 81
    for cid, claim in REGISTRY.items():
        assert claim.id == cid and claim.arity in (1, 2, 3)
        assert set(claim.requires) <= set(PREDICATES)
    for cid in ("thm-2.5", "thm-2.10", "thm-2.14", "thm-2.18", "thm-3.3", "thm-3.4", "thm-3.8",
                "thm-3.9", "thm-3.12", "thm-3.13", "thm-4.4", "thm-4.9", "thm-4.13", "thm-4.17",
                "lem-2.2", "lem-2.3", "lem-4.1.iv", "count.corona-T"):
        assert cid in REGISTRY


def test_expand_ids():
    assert expand_ids(["lem-2.4"]) == ["lem-2.4.i", "lem-2.4.ii"]
    assert expand_ids(["thm-2.5", "thm-2.5"]) == ["thm-2.5"]
    assert expand_ids(["all"]) == list(REGISTRY)
    with pytest.raises(UnknownClaim):
        expand_ids(["thm-9.9"])
    with pytest.raises(UnknownClaim):
        get_claim("lem-2")


def test_arity_mismatch():
    with pytest.raises(ArityMismatch):
        check_claim("thm-3.3", path(3))
    with pytest.raises(ArityMismatch):
        evaluate(get_claim("thm-2.5"), Instance([cycle(4), complete(1)]))


def test_not_applicable_names_first_failing_predicate():
    r = check_claim("thm-2.10", cycle(4))
    assert r.status == Status.NOT_APPLICABLE and r.detail == {"failed_predicate": "c3c4-free"}
    assert check_claim("thm-2.5", from_edge_list(3, [(0, 1)])).detail == {
        "failed_predicate": "connected"}
    assert check_claim("cor-3.5", path(3), complete(1)).detail == {"failed_predicate": "non-star"}
    assert check_claim("thm-3.3", path(4), complete(1)).detail == {"failed_predicate": "star"}
    assert check_claim("lem-2.8.i", complete(1)).note


# -- frozen outcomes, each re-derived from the plain index computation --------


@pytest.mark.parametrize(
    "cid, graphs, status, lhs, bounds",
    [
        ("lem-2.3", ["C4"], "STRICT", 4, (None, 8)),
        ("lem-2.3", ["C5"], "EQUALITY_HOLDS", 10, (None, 10)),
        ("thm-2.5", ["C4"], "BOUND_HOLDS", 64, (64, 80)),
        ("thm-3.3", ["P3", "K2"], "EQUALITY_HOLDS", 42, (42, 42)),
        ("thm-3.8", ["P3", "K3"], "EQUALITY_HOLDS", 66, (66, 66)),
        ("thm-3.9", ["C4", "K2"], "EQUALITY_HOLDS", 116, (116, 116)),
        ("thm-3.12", ["P3", "K2", "K1"], "EQUALITY_HOLDS", 63, (63, 63)),
        ("thm-3.13", ["P4", "K1", "K1"], "EQUALITY_HOLDS", 96, (96, 96)),
        ("cor-2.7", ["P4"], "EQUALITY_HOLDS", 44, (44, 44)),
        ("cor-2.11", ["K1,3"], "VIOLATION", 45, (51, 51)),
        ("thm-4.9", ["F??Fw", "K1", "K1"], "VIOLATION", 642, (648, 882)),
    ],
)
def test_frozen(cid, graphs, status, lhs, bounds):
    r = check_claim(cid, *map(g, graphs))
    assert (r.status.value, r.lhs, r.bounds) == (status, lhs, bounds)


def test_frozen_lhs_matches_direct_index():
    from leapx.compositions import sd_edge_join, sd_vertex_edge_join, sd_vertex_join
    from leapx.constructions import construct
    from leapx.coronas import double_corona

    assert index_report(construct("S", cycle(4)).graph).LxiC == 64
    assert index_report(sd_vertex_join(path(3), complete(2)).graph).LxiC == 42
    assert index_report(sd_edge_join(path(3), complete(3)).graph).LxiC == 66
    assert index_report(sd_edge_join(cycle(4), complete(2)).graph).LxiC == 116
    assert index_report(sd_vertex_edge_join(path(3), complete(2), complete(1)).graph).LxiC == 63
    assert index_report(double_corona("Q", g("F??Fw"), complete(1), complete(1)).graph).LxiC == 642


def test_observed_edge_eccentricities():
    r = check_claim("lem-3.2.ii", path(4), complete(2))
    assert r.status == Status.BOUND_HOLDS and r.detail == {"edge_eccentricities": [3, 4]}


def test_result_dicts_validate():
    for cid, gs in [("thm-2.5", ["C4"]), ("cor-2.11", ["K1,3"]), ("cor-3.5", ["P3", "K1"]),
                    ("lem-2.2", ["P4"]), ("obs-2.s-pendant-edge", ["D{_"])]:
        d = check_claim(cid, *map(g, gs)).as_dict()
        jsonschema.validate(d, SCHEMA["$defs"]["claim_result"] | {"$defs": SCHEMA["$defs"]})


# -- counterexamples -------------------------------------------------------------


def test_counterexample_triangle():
    hit = find_counterexample("yarahmadi-s-ecc", 3)
    assert hit is not None
    graph, witness = hit
    assert graph == cycle(3)
    assert witness == {"vertex": 0, "ecc_G": 1, "ecc_S": 3}
    assert find_counterexample("yarahmadi-s-ecc", 2) is None


def test_counterexample_restrictions_and_claims():
    assert find_counterexample("yarahmadi-s-ecc", 5, restrict="bipartite") is None
    graph, w = find_counterexample("cor-2.11", 4)
    assert graph == star(4) and w["lhs"] == 45
    with pytest.raises(UnknownProperty):
        find_counterexample("nope", 3)
    with pytest.raises(UnknownProperty):
        find_counterexample("thm-3.3", 3)  # arity 2
    with pytest.raises(ValueError):
        find_counterexample("yarahmadi-s-ecc", 3, restrict="planar")
    assert set(PROPERTIES) == {"yarahmadi-s-ecc"}


def test_counterexample_report_schema():
    for rep in (counterexample_report("yarahmadi-s-ecc", 3),
                counterexample_report("yarahmadi-s-ecc", 4, "bipartite")):
        jsonschema.validate(rep, SCHEMA)
    assert counterexample_report("yarahmadi-s-ecc", 3)["graph6"] == "Bw"


# -- sweeps ---------------------------------------------------------------------------


def test_family_graphs():
    assert len(family_graphs("all-connected", 4)) == 1 + 1 + 4 + 38
    assert family_graphs("stars", 4) == [star(2), star(3), star(4)]
    a = family_graphs("trees", 9, samples=20, seed=5)
    assert a == family_graphs("trees", 9, samples=20, seed=5)
    assert a != family_graphs("trees", 9, samples=20, seed=6)
    assert all(2 <= t.n <= 9 for t in a)
    with pytest.raises(ValueError, match="seed"):
        family_graphs("trees", 5)
    with pytest.raises(ValueError):
        family_graphs("custom", 5)
    with pytest.raises(ValueError):
        family_graphs("planar", 5)


def test_h_graphs():
    assert h_graphs() == [named(x) for x in ("K1", "K2", "P3", "C4", "K3")]
    assert h_graphs("K2,Bw") == [complete(2), cycle(3)]


def test_sweep_report():
    rep = sweep(["thm-2.5", "thm-3.3", "thm-3.12"], "stars", 5)
    d = rep.as_dict()
    jsonschema.validate(d, SCHEMA)
    assert d["seed"] is None and d["family"]["g_instances"] == 4
    t = d["tallies"]
    assert t["thm-2.5"]["instances"] == 4
    assert t["thm-3.3"]["instances"] == 4 * 5
    assert t["thm-3.12"]["instances"] == 4 * 25
    for tally in t.values():
        assert tally["instances"] == sum(v for k, v in tally.items() if k != "instances")
    assert rep.violation_count == 0


def test_sweep_deduplicates_and_records_violations():
    rep = sweep(["cor-2.11"], "custom", 4, graphs=[star(4), star(4), path(3)])
    assert rep.family["g_instances"] == 2
    assert rep.tallies["cor-2.11"]["VIOLATION"] == 1
    v = rep.violations[0]
    assert v["instance"] == ["Cs"] and (v["lhs"], v["lower"], v["upper"]) == (45, 51, 51)


def test_sweep_workers_do_not_change_report():
    kw = dict(family="trees", max_n=7, samples=12, seed=3)
    ids = ["lem-3.2", "thm-3.4", "cor-3.5"]
    assert sweep(ids, workers=1, **kw).as_dict() == sweep(ids, workers=2, **kw).as_dict()


def test_sweep_observed_union():
    rep = sweep(["lem-3.2.ii"], "custom", 4, graphs=[path(4)], h_family="K1")
    assert rep.observed == {"lem-3.2.ii": {"edge_eccentricities": [3, 4]}}
