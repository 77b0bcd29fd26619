"""Claim registry, single-instance checks, sweeps and counterexample search."""

from __future__ import annotations

from ..graph import Graph
# import order fixes the registry (and listing) order
from . import claims_derived  # noqa: F401, I001
from . import claims_joins  # noqa: F401
from . import claims_coronas  # noqa: F401
from .core import (
    REGISTRY,
    STATUS_ORDER,
    ArityMismatch,
    Claim,
    ClaimResult,
    Instance,
    StatementKind,
    Status,
    UnknownClaim,
)


def get_claim(claim_id: str) -> Claim:
    try:
        return REGISTRY[claim_id]
    except KeyError:
        raise UnknownClaim(claim_id) from None


def expand_ids(ids) -> list[str]:
    """Resolve exact ids or group prefixes ("lem-2.4" covers lem-2.4.i and .ii)."""
    out: list[str] = []
    for cid in ids:
        if cid in ("all", "*"):
            hits = list(REGISTRY)
        elif cid in REGISTRY:
            hits = [cid]
        else:
            hits = [k for k in REGISTRY if k.startswith(cid + ".")]
            if not hits:
                raise UnknownClaim(cid)
        out.extend(h for h in hits if h not in out)
    return out


def evaluate(claim: Claim, inst: Instance) -> ClaimResult:
    if len(inst.graphs) != claim.arity:
        raise ArityMismatch(
            f"{claim.id} needs {claim.arity} graph(s), got {len(inst.graphs)}"
        )
    failing = claim.applicability(inst)
    note = claim.note or None
    if failing is not None:
        return ClaimResult(claim.id, inst.descriptor, Status.NOT_APPLICABLE,
                           detail={"failed_predicate": failing}, note=note)
    o = claim.evaluate(inst)
    return ClaimResult(claim.id, inst.descriptor, o.status, o.lhs, o.bounds, o.witness,
                       o.detail, note)


def check_claim(claim_id: str, *graphs: Graph) -> ClaimResult:
    """Check one registered claim on an instance of one to three graphs."""
    return evaluate(get_claim(claim_id), Instance(graphs))


from .counterexample import PROPERTIES, UnknownProperty, find_counterexample  # noqa: E402
from .sweep import FAMILIES, SweepReport, sweep  # noqa: E402

__all__ = [
    "REGISTRY", "STATUS_ORDER", "ArityMismatch", "Claim", "ClaimResult", "Instance",
    "StatementKind", "Status", "UnknownClaim", "check_claim", "evaluate", "expand_ids",
    "get_claim", "PROPERTIES", "UnknownProperty", "find_counterexample", "FAMILIES",
    "SweepReport", "sweep",
]
