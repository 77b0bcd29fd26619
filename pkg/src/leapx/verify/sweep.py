"""Family sweeps: evaluate claims over many instances and tally the outcomes.

Instances are de-duplicated by graph6 descriptor and evaluated in sorted
descriptor order, so the report does not depend on how work is split across
worker processes.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterable, Sequence

from ..formats import parse_graph6, write_graph6
from ..generators import (
    enumerate_connected,
    named,
    random_bipartite,
    random_connected,
    random_girth5,
    random_tree,
    star,
)
from ..graph import Graph
from .core import REGISTRY, STATUS_ORDER, Instance, Status

RANDOM_FAMILIES = ("trees", "bipartite", "girth5", "connected")
FAMILIES = ("all-connected", "stars", "custom") + RANDOM_FAMILIES
SMALL_H = ("K1", "K2", "P3", "C4", "K3")
DEFAULT_SAMPLES = 100
DEFAULT_P = 0.3


@dataclass
class SweepReport:
    family: dict
    seed: int | None
    claims: list[str]
    tallies: dict[str, dict[str, int]]
    violations: list[dict] = field(default_factory=list)
    observed: dict[str, dict[str, list]] = field(default_factory=dict)

    @property
    def violation_count(self) -> int:
        return len(self.violations)

    def as_dict(self) -> dict:
        return {
            "kind": "sweep",
            "family": self.family,
            "seed": self.seed,
            "claims": self.claims,
            "tallies": self.tallies,
            "violations": self.violations,
            "observed": self.observed,
        }


def family_graphs(
    family: str,
    max_n: int,
    samples: int | None = None,
    seed: int | None = None,
    n_min: int = 2,
    p: float = DEFAULT_P,
    graphs: Sequence[Graph] | None = None,
) -> list[Graph]:
    """The G-side instances of a family (before de-duplication)."""
    if family == "all-connected":
        return list(enumerate_connected(max_n, n_min=1))
    if family == "stars":
        return [star(n) for n in range(max(n_min, 2), max_n + 1)]
    if family == "custom":
        if not graphs:
            raise ValueError("family 'custom' needs an explicit list of graphs")
        return list(graphs)
    if family not in RANDOM_FAMILIES:
        raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    if seed is None:
        raise ValueError(f"family {family!r} is random and needs a seed")
    if max_n < n_min:
        raise ValueError(f"max_n={max_n} is below the minimum size {n_min}")
    rng = random.Random(seed)
    out = []
    for _ in range(DEFAULT_SAMPLES if samples is None else samples):
        n = rng.randint(n_min, max_n)
        sub = rng.randrange(2**32)
        if family == "trees":
            out.append(random_tree(n, sub))
        elif family == "connected":
            out.append(random_connected(n, p, sub))
        elif family == "girth5":
            out.append(random_girth5(n, p, sub))
        else:
            a = rng.randint(1, n - 1) if n >= 2 else 1
            out.append(random_bipartite(a, max(n - a, 1), p, sub))
    return out


def h_graphs(spec: str | Sequence[Graph] = "small") -> list[Graph]:
    """``"small"`` or a comma-separated list of names / graph6 strings."""
    if not isinstance(spec, str):
        return list(spec)
    names = SMALL_H if spec == "small" else [s for s in spec.split(",") if s.strip()]
    out = []
    for s in names:
        try:
            out.append(named(s))
        except ValueError:
            out.append(parse_graph6(s))
    return out


def _evaluate_chunk(args):
    claim_ids, descriptors = args
    from . import evaluate  # noqa: PLC0415  (import inside worker)

    rows = []
    for desc in descriptors:
        inst = Instance([parse_graph6(s) for s in desc])
        for cid in claim_ids:
            rows.append(evaluate(REGISTRY[cid], inst).as_dict())
    return rows


def _chunks(items: list, k: int) -> list[list]:
    size = max(1, -(-len(items) // k))
    return [items[i:i + size] for i in range(0, len(items), size)]


def _run(claim_ids: list[str], descriptors: list[tuple[str, ...]], workers: int) -> list[dict]:
    if workers <= 1 or len(descriptors) < 2:
        return _evaluate_chunk((claim_ids, descriptors))
    jobs = [(claim_ids, c) for c in _chunks(descriptors, workers * 4)]
    rows: list[dict] = []
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_evaluate_chunk, jobs):
            rows.extend(part)
    return rows


def sweep(
    claim_ids: Iterable[str],
    family: str,
    max_n: int,
    samples: int | None = None,
    seed: int | None = None,
    h_family: str | Sequence[Graph] = "small",
    graphs: Sequence[Graph] | None = None,
    workers: int = 1,
    n_min: int = 2,
    p: float = DEFAULT_P,
) -> SweepReport:
    """Evaluate every claim on every instance of the family; never stops early."""
    from . import expand_ids  # noqa: PLC0415

    ids = expand_ids(list(claim_ids))
    g_list = family_graphs(family, max_n, samples, seed, n_min, p, graphs)
    g_desc = sorted({write_graph6(g) for g in g_list})
    hs = sorted({write_graph6(h) for h in h_graphs(h_family)})

    by_arity: dict[int, list[str]] = {}
    for cid in ids:
        by_arity.setdefault(REGISTRY[cid].arity, []).append(cid)

    rows: list[dict] = []
    for arity in sorted(by_arity):
        descs = sorted((g,) + rest for g in g_desc for rest in product(hs, repeat=arity - 1))
        rows.extend(_run(by_arity[arity], descs, workers))

    tallies = {cid: {"instances": 0, **{s.value: 0 for s in STATUS_ORDER}} for cid in ids}
    observed: dict[str, dict[str, set]] = {}
    violations = []
    for r in rows:
        t = tallies[r["claim_id"]]
        t["instances"] += 1
        t[r["status"]] += 1
        if r["status"] == Status.VIOLATION.value:
            violations.append(r)
        for key, val in (r.get("detail") or {}).items():
            if isinstance(val, list):
                observed.setdefault(r["claim_id"], {}).setdefault(key, set()).update(val)
    violations.sort(key=lambda r: (ids.index(r["claim_id"]), r["instance"]))

    fam = {"name": family, "max_n": max_n, "n_min": n_min}
    if family in RANDOM_FAMILIES:
        fam.update(samples=DEFAULT_SAMPLES if samples is None else samples, p=p)
    fam["g_instances"] = len(g_desc)
    fam["h_family"] = hs
    return SweepReport(
        family=fam,
        seed=seed if family in RANDOM_FAMILIES else None,
        claims=ids,
        tallies=tallies,
        violations=violations,
        observed={c: {k: sorted(v) for k, v in sorted(d.items())} for c, d in sorted(observed.items())},
    )
