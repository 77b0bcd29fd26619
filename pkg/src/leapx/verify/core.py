"""Claim objects, per-instance context and the outcome vocabulary.

A claim is checked on an *instance*: one, two or three graphs (G, then H or
H1, H2).  The left-hand side of every claim is computed by BFS on the graph
that is actually constructed; the right-hand side comes from closed forms in
terms of invariants of G, L(G) and the H's.  Nothing computed for one claim's
right-hand side is reused as another claim's left-hand side.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Callable, Iterable, Sequence

from ..compositions import JOINS, JoinGraph
from ..constructions import DerivedGraph, Tag, construct
from ..coronas import CoronaGraph, double_corona
from ..formats import write_graph6
from ..graph import (
    Graph,
    eccentricity_tuple,
    is_bipartite,
    is_c3c4_free,
    is_connected,
    is_star,
    pendant_ecc_property,
    second_degrees,
)
from ..invariants import IndexReport, index_report


class UnknownClaim(KeyError):
    pass


class ArityMismatch(ValueError):
    pass


class StatementKind(str, Enum):
    EQUALITY = "EQUALITY"
    LOWER_BOUND = "LOWER_BOUND"
    UPPER_BOUND = "UPPER_BOUND"
    SANDWICH = "SANDWICH"
    CASE_TABLE = "CASE_TABLE"


class Status(str, Enum):
    EQUALITY_HOLDS = "EQUALITY_HOLDS"
    STRICT = "STRICT"
    BOUND_HOLDS = "BOUND_HOLDS"
    VIOLATION = "VIOLATION"
    NOT_APPLICABLE = "NOT_APPLICABLE"


STATUS_ORDER = tuple(Status)


class Instance:
    """One to three input graphs plus lazily built derived objects."""

    def __init__(self, graphs: Sequence[Graph]):
        self.graphs = tuple(graphs)
        self._derived: dict[str, DerivedGraph] = {}
        self._joins: dict[str, JoinGraph] = {}
        self._coronas: dict[str, CoronaGraph] = {}

    @property
    def g(self) -> Graph:
        return self.graphs[0]

    @property
    def h1(self) -> Graph:
        return self.graphs[1]

    @property
    def h2(self) -> Graph:
        return self.graphs[2]

    @cached_property
    def descriptor(self) -> tuple[str, ...]:
        return tuple(write_graph6(x) for x in self.graphs)

    def derived(self, kind: str) -> DerivedGraph:
        if kind not in self._derived:
            self._derived[kind] = construct(kind, self.g)
        return self._derived[kind]

    def join(self, kind: str) -> JoinGraph:
        if kind not in self._joins:
            self._joins[kind] = JOINS[kind](*self.graphs)
        return self._joins[kind]

    def corona(self, kind: str) -> CoronaGraph:
        if kind not in self._coronas:
            self._coronas[kind] = double_corona(kind, *self.graphs)
        return self._coronas[kind]

    @cached_property
    def report(self) -> IndexReport:
        return index_report(self.g)

    @cached_property
    def line_report(self) -> IndexReport:
        return index_report(self.derived("L").graph)

    @cached_property
    def ecc(self) -> tuple[int, ...]:
        return eccentricity_tuple(self.g)

    @cached_property
    def line_degrees(self) -> tuple[int, ...]:
        return self.derived("L").graph.degrees

    # invariants of G and L(G) used by the closed forms
    @cached_property
    def base(self) -> dict[str, int]:
        r, lr = self.report, self.line_report
        out = {
            "n": r.n, "m": r.m, "M1": r.M1, "theta": r.theta, "xiC": r.xiC,
            "LxiC": r.LxiC, "mL": lr.m, "M1L": lr.M1, "thetaL": lr.theta,
            "xiCL": lr.xiC, "LxiCL": lr.LxiC,
            "full": sum(1 for e in self.ecc if e == 1),
        }
        for i, h in enumerate(self.graphs[1:], 1):
            out[f"n{i}"] = h.n
            out[f"m{i}"] = h.m
        return out


def ecc_of(x: Graph) -> tuple[int, ...]:
    return eccentricity_tuple(x)


def d2_of(x: Graph) -> tuple[int, ...]:
    return second_degrees(x)


# -- applicability predicates ----------------------------------------------

PREDICATES: dict[str, Callable[[Instance], bool]] = {
    "connected": lambda i: i.g.n >= 1 and is_connected(i.g),
    "n>=2": lambda i: i.g.n >= 2,
    "n>=3": lambda i: i.g.n >= 3,
    "star": lambda i: is_star(i.g),
    "non-star": lambda i: not is_star(i.g),
    "bipartite": lambda i: is_bipartite(i.g),
    "non-bipartite": lambda i: not is_bipartite(i.g),
    "c3c4-free": lambda i: is_c3c4_free(i.g),
    "pendant-ecc": lambda i: pendant_ecc_property(i.g),
    "h-connected": lambda i: all(h.n >= 1 and is_connected(h) for h in i.graphs[1:]),
    "h-nonempty": lambda i: all(h.n >= 1 for h in i.graphs[1:]),
}

# evaluated in this order so that later predicates may assume earlier ones
_PREDICATE_ORDER = list(PREDICATES)


# -- outcomes ----------------------------------------------------------------


@dataclass(frozen=True)
class Outcome:
    status: Status
    lhs: int
    bounds: tuple[int | None, int | None] | None = None
    witness: dict | None = None
    detail: dict | None = None


@dataclass(frozen=True)
class ClaimResult:
    claim_id: str
    instance: tuple[str, ...]
    status: Status
    lhs: int | None = None
    bounds: tuple[int | None, int | None] | None = None
    witness: dict | None = None
    detail: dict | None = None
    note: str | None = None

    def as_dict(self) -> dict:
        out: dict = {
            "claim_id": self.claim_id,
            "instance": list(self.instance),
            "status": self.status.value,
        }
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.bounds is not None:
            out["lower"], out["upper"] = self.bounds
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail is not None:
            out["detail"] = self.detail
        if self.note is not None:
            out["note"] = self.note
        return out


@dataclass(frozen=True)
class Claim:
    id: str
    kind: StatementKind
    arity: int
    summary: str
    requires: tuple[str, ...]
    evaluate: Callable[[Instance], Outcome] = field(repr=False)
    note: str = ""

    def applicability(self, inst: Instance) -> str | None:
        """Name of the first failing predicate, or ``None`` when the claim applies."""
        wanted = set(self.requires) | {"connected"}
        for name in _PREDICATE_ORDER:
            if name in wanted and not PREDICATES[name](inst):
                return name
        return None


REGISTRY: dict[str, Claim] = {}


def register(
    claim_id: str,
    kind: StatementKind,
    arity: int,
    summary: str,
    requires: Iterable[str],
    note: str = "",
):
    reqs = tuple(requires)
    unknown = set(reqs) - set(PREDICATES)
    if unknown:
        raise ValueError(f"unknown predicates {sorted(unknown)} for {claim_id}")

    def deco(fn: Callable[[Instance], Outcome]) -> Callable[[Instance], Outcome]:
        if claim_id in REGISTRY:
            raise ValueError(f"duplicate claim id {claim_id}")
        REGISTRY[claim_id] = Claim(claim_id, kind, arity, summary, reqs, fn, note)
        return fn

    return deco


def tag_json(tag) -> dict | str:
    if isinstance(tag, Tag):
        return tag.as_dict()
    return tag


def equality(lhs: int, rhs: int) -> Outcome:
    if lhs == rhs:
        return Outcome(Status.EQUALITY_HOLDS, lhs, (rhs, rhs))
    return Outcome(Status.VIOLATION, lhs, (rhs, rhs))


def sandwich(lhs: int, lower: int, upper: int) -> Outcome:
    if lower <= lhs <= upper:
        status = Status.EQUALITY_HOLDS if lower == upper else Status.BOUND_HOLDS
        return Outcome(status, lhs, (lower, upper))
    side = "lower" if lhs < lower else "upper"
    return Outcome(Status.VIOLATION, lhs, (lower, upper), {"failed": side})


def conditional_upper(lhs: int, upper: int, in_class: bool) -> Outcome:
    """``lhs <= upper`` with equality exactly when ``in_class``."""
    if lhs > upper:
        return Outcome(Status.VIOLATION, lhs, (None, upper), {"failed": "upper"})
    if (lhs == upper) != in_class:
        return Outcome(
            Status.VIOLATION, lhs, (None, upper),
            {"failed": "equality-iff", "in_class": in_class},
        )
    return Outcome(Status.EQUALITY_HOLDS if in_class else Status.STRICT, lhs, (None, upper))


Row = tuple  # (label, actual, lo, hi)


def pointwise(rows: Sequence[Row], detail: dict | None = None) -> Outcome:
    """Each row asserts ``lo <= actual <= hi``; lhs counts the rows that hold."""
    total = len(rows)
    exact = True
    held = 0
    first_bad = None
    for label, actual, lo, hi in rows:
        if lo <= actual <= hi:
            held += 1
            exact = exact and lo == hi
        elif first_bad is None:
            first_bad = {"vertex": tag_json(label), "actual": actual, "expected": [lo, hi]}
    if first_bad is not None:
        first_bad["failures"] = total - held
        return Outcome(Status.VIOLATION, held, (total, total), first_bad, detail)
    status = Status.EQUALITY_HOLDS if exact else Status.BOUND_HOLDS
    return Outcome(status, held, (total, total), None, detail)


def pointwise_conditional(
    rows: Sequence[tuple], direction: str, in_class: bool
) -> Outcome:
    """Rows ``(label, actual, reference)``: ``actual >= reference`` (``ge``) or
    ``<=`` (``le``) everywhere, with equality at every row exactly when
    ``in_class``."""
    total = len(rows)
    ok = 0
    strict_label = None
    for label, actual, ref in rows:
        good = actual >= ref if direction == "ge" else actual <= ref
        if not good:
            return Outcome(
                Status.VIOLATION, ok, (total, total),
                {"vertex": tag_json(label), "actual": actual, "reference": ref,
                 "failed": "direction"},
            )
        ok += 1
        if actual != ref and strict_label is None:
            strict_label = (label, actual, ref)
    all_equal = strict_label is None
    if all_equal == in_class:
        return Outcome(Status.EQUALITY_HOLDS if in_class else Status.STRICT, ok, (total, total))
    if in_class:
        label, actual, ref = strict_label
        witness = {"vertex": tag_json(label), "actual": actual, "reference": ref,
                   "failed": "equality-in-class"}
    else:
        witness = {"failed": "equality-off-class"}
    return Outcome(Status.VIOLATION, ok, (total, total), witness)
