"""Degree- and eccentricity-based topological indices.

All values are exact integers.  K1 is accepted everywhere (eccentricity 0, so
every index is 0); the empty graph likewise gives 0.
"""

from __future__ import annotations

from dataclasses import asdict, dataclass

from .graph import Graph, eccentricity_tuple, second_degrees


@dataclass(frozen=True)
class IndexReport:
    n: int
    m: int
    M1: int
    LM1: int
    theta: int
    xiC: int
    LxiC: int
    sum_d2: int

    def as_dict(self) -> dict[str, int]:
        return asdict(self)


def first_zagreb(g: Graph) -> int:
    return sum(d * d for d in g.degrees)


def first_leap_zagreb(g: Graph) -> int:
    eccentricity_tuple(g)  # connectivity check
    return sum(d * d for d in second_degrees(g))


def eccentricity_sum(g: Graph) -> int:
    return sum(eccentricity_tuple(g))


def ecc_connectivity(g: Graph) -> int:
    return sum(d * e for d, e in zip(g.degrees, eccentricity_tuple(g)))


def leap_ecc_connectivity(g: Graph) -> int:
    return sum(d * e for d, e in zip(second_degrees(g), eccentricity_tuple(g)))


def index_report(g: Graph) -> IndexReport:
    ecc = eccentricity_tuple(g)
    d1 = g.degrees
    d2 = second_degrees(g)
    return IndexReport(
        n=g.n,
        m=g.m,
        M1=sum(d * d for d in d1),
        LM1=sum(d * d for d in d2),
        theta=sum(ecc),
        xiC=sum(d * e for d, e in zip(d1, ecc)),
        LxiC=sum(d * e for d, e in zip(d2, ecc)),
        sum_d2=sum(d2),
    )
