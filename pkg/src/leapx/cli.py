"""``leapx`` command-line front end.

Exit status: 0 on success, 1 on usage or I/O errors, 2 when ``verify`` finds
at least one VIOLATION (the report is still written).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from pathlib import Path
from typing import Sequence

from .compositions import JOINS
from .constructions import BUILDERS, DerivedGraph
from .coronas import KINDS, double_corona
from .formats import FormatError, parse_edgelist, parse_graph6, read_graphs, write_graph6
from .generators import named
from .graph import Graph, is_connected
from .invariants import index_report

EXIT_OK, EXIT_USAGE, EXIT_VIOLATION = 0, 1, 2
CONSTRUCT_OPS = {"line": "L", "L": "L", "S": "S", "Q": "Q", "R": "R", "T": "T"}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


# -- graph arguments ---------------------------------------------------------------


def load_graphs(arg: str, fmt: str) -> list[Graph]:
    """A file path, a small graph name (``C4``, ``K1,3``, ``P5``) or a graph6 string."""
    path = Path(arg)
    if path.is_file():
        return read_graphs(path, fmt)
    try:
        return [named(arg)]
    except ValueError:
        pass
    if fmt == "edgelist":
        return [parse_edgelist(arg.replace(";", "\n"))]
    return [parse_graph6(arg)]


def _collect(args_graphs: Sequence[str], fmt: str) -> list[Graph]:
    out: list[Graph] = []
    for a in args_graphs:
        out.extend(load_graphs(a, fmt))
    return out


def _exactly(graphs: list[Graph], k: int, what: str) -> list[Graph]:
    if len(graphs) != k:
        raise UsageError(f"{what} needs exactly {k} graph(s), got {len(graphs)}")
    return graphs


# -- rendering -------------------------------------------------------------------------


def _json(obj) -> str:
    return json.dumps(obj, indent=2, ensure_ascii=False) + "\n"


def _csv(header: list[str], rows: list[list]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


def _derived_payload(d: DerivedGraph, inputs: list[Graph], extra: dict) -> dict:
    out = {"kind": extra.pop("kind"), **extra}
    out["inputs"] = [write_graph6(g) for g in inputs]
    out["graph6"] = write_graph6(d.graph)
    out["n"] = d.graph.n
    out["m"] = d.graph.m
    if d.graph.n and is_connected(d.graph):
        out["indices"] = index_report(d.graph).as_dict()
    out["provenance"] = [t.as_dict() for t in d.provenance]
    return out


def _render_derived(payload: dict, output: str) -> str:
    if output == "json":
        return _json(payload)
    if output == "csv":
        rows = [[x, t["role"], t["index"], t.get("copy", "")] for x, t in enumerate(payload["provenance"])]
        return _csv(["vertex", "role", "index", "copy"], rows)
    lines = [payload["graph6"], f"# n={payload['n']} m={payload['m']}"]
    if "indices" in payload:
        lines.append("# " + " ".join(f"{k}={v}" for k, v in payload["indices"].items()
                                     if k not in ("n", "m")))
    return "\n".join(lines) + "\n"


def _write_sidecar(path: str | None, payload: dict) -> None:
    if path:
        side = {"graph6": payload["graph6"], "provenance": payload["provenance"]}
        Path(path).write_text(_json(side))


# -- subcommands --------------------------------------------------------------------------


def cmd_indices(args) -> tuple[str, int]:
    graphs = _collect(args.graphs, args.format)
    reports = [{"graph6": write_graph6(g), **index_report(g).as_dict()} for g in graphs]
    if args.output == "json":
        return _json({"kind": "indices", "graphs": reports}), EXIT_OK
    header = list(reports[0]) if reports else ["graph6"]
    if args.output == "csv":
        return _csv(header, [[r[k] for k in header] for r in reports]), EXIT_OK
    lines = [" ".join(f"{k}={r[k]}" for k in header) for r in reports]
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_construct(args) -> tuple[str, int]:
    (g,) = _exactly(_collect(args.graphs, args.format), 1, "construct")
    d = BUILDERS[CONSTRUCT_OPS[args.op]](g)
    payload = _derived_payload(d, [g], {"kind": "construct", "op": CONSTRUCT_OPS[args.op]})
    _write_sidecar(args.sidecar, payload)
    return _render_derived(payload, args.output), EXIT_OK


def cmd_join(args) -> tuple[str, int]:
    k = 3 if args.kind == "vertex-edge" else 2
    graphs = _exactly(_collect(args.graphs, args.format), k, f"join --kind {args.kind}")
    j = JOINS[args.kind](*graphs)
    payload = _derived_payload(j, graphs, {"kind": "join", "join": args.kind,
                                           "params": list(j.params)})
    _write_sidecar(args.sidecar, payload)
    return _render_derived(payload, args.output), EXIT_OK


def cmd_corona(args) -> tuple[str, int]:
    graphs = _exactly(_collect(args.graphs, args.format), 3, "corona")
    c = double_corona(args.kind, *graphs)
    payload = _derived_payload(c, graphs, {"kind": "corona", "corona": args.kind,
                                           "params": list(c.params)})
    _write_sidecar(args.sidecar, payload)
    return _render_derived(payload, args.output), EXIT_OK


def _split_ids(values: Sequence[str]) -> list[str]:
    return [p for v in values for p in v.split(",") if p]


def cmd_verify(args) -> tuple[str, int]:
    from .verify import sweep

    custom = _collect(args.graphs, args.format) if args.graphs else None
    family = args.family or ("custom" if custom else "all-connected")
    report = sweep(
        _split_ids(args.claims or ["all"]), family, args.max_n, samples=args.samples, seed=args.seed,
        h_family=args.h_family, graphs=custom, workers=args.workers, n_min=args.n_min,
    )
    status = EXIT_VIOLATION if report.violations else EXIT_OK
    d = report.as_dict()
    if args.output == "json":
        return _json(d), status
    statuses = ["EQUALITY_HOLDS", "STRICT", "BOUND_HOLDS", "VIOLATION", "NOT_APPLICABLE"]
    header = ["claim_id", "instances"] + statuses
    rows = [[cid, t["instances"]] + [t[s] for s in statuses] for cid, t in d["tallies"].items()]
    if args.output == "csv":
        return _csv(header, rows), status
    fam = d["family"]
    lines = [f"family={fam['name']} max_n={fam['max_n']} seed={d['seed']} "
             f"g_instances={fam['g_instances']}"]
    width = max((len(r[0]) for r in rows), default=8)
    for r in rows:
        counts = " ".join(f"{s.lower()}={v}" for s, v in zip(statuses, r[2:]) if v)
        lines.append(f"{r[0]:<{width}}  n={r[1]:<6} {counts}")
    for v in d["violations"]:
        lines.append(f"VIOLATION {v['claim_id']} {' '.join(v['instance'])} "
                     f"lhs={v.get('lhs')} lower={v.get('lower')} upper={v.get('upper')}")
    return "\n".join(lines) + "\n", status


def cmd_counterexample(args) -> tuple[str, int]:
    from .verify.counterexample import counterexample_report

    rep = counterexample_report(args.property, args.max_n, args.restrict)
    if args.output == "json":
        return _json(rep), EXIT_OK
    keys = ["property", "max_n", "restrict", "found", "graph6"]
    if args.output == "csv":
        return _csv(keys, [[rep.get(k, "") for k in keys]]), EXIT_OK
    if not rep["found"]:
        return f"no counterexample to {args.property} with n <= {args.max_n}\n", EXIT_OK
    return (f"{rep['graph6']}  n={rep['n']} edges={rep['edges']} "
            f"witness={json.dumps(rep['witness'])}\n"), EXIT_OK


def cmd_claims(args) -> tuple[str, int]:
    from .verify import REGISTRY

    rows = [[c.id, c.kind.value, c.arity, ";".join(c.requires), c.summary, c.note]
            for c in REGISTRY.values()]
    header = ["claim_id", "kind", "arity", "requires", "summary", "note"]
    if args.output == "json":
        return _json({"kind": "claims", "claims": [dict(zip(header, r)) for r in rows]}), EXIT_OK
    if args.output == "csv":
        return _csv(header, rows), EXIT_OK
    return "".join(f"{r[0]:<24} {r[1]:<12} {r[2]}  {r[4]}\n" for r in rows), EXIT_OK


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("graph6", "edgelist"), default="graph6",
                        help="input format for graph files and inline graphs")
    common.add_argument("--output", choices=("json", "csv", "human"), default="json")

    p = _Parser(prog="leapx", description="Leap eccentric connectivity toolkit")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("indices", parents=[common], help="index report per input graph")
    s.add_argument("graphs", nargs="+")
    s.set_defaults(func=cmd_indices)

    s = sub.add_parser("construct", parents=[common], help="L, S, Q, R or T of a graph")
    s.add_argument("--op", required=True, choices=sorted(CONSTRUCT_OPS, key=str.lower))
    s.add_argument("--sidecar", help="also write graph6 + provenance JSON to this file")
    s.add_argument("graphs", nargs=1)
    s.set_defaults(func=cmd_construct)

    s = sub.add_parser("join", parents=[common], help="subdivision joins")
    s.add_argument("--kind", required=True, choices=tuple(JOINS))
    s.add_argument("--sidecar")
    s.add_argument("graphs", nargs="+", help="G H, or G H1 H2 for vertex-edge")
    s.set_defaults(func=cmd_join)

    s = sub.add_parser("corona", parents=[common], help="double coronas")
    s.add_argument("--kind", required=True, choices=KINDS)
    s.add_argument("--sidecar")
    s.add_argument("graphs", nargs=3, metavar="GRAPH", help="G H1 H2")
    s.set_defaults(func=cmd_corona)

    s = sub.add_parser("verify", parents=[common], help="sweep claims over a family")
    s.add_argument("--claims", action="append",
                   help="claim ids or group prefixes, comma separated; repeatable (default: all)")
    s.add_argument("--family", choices=("all-connected", "trees", "bipartite", "girth5",
                                        "connected", "stars", "custom"))
    s.add_argument("--max-n", type=int, default=5)
    s.add_argument("--n-min", type=int, default=2, help="smallest n for sampled families")
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--h-family", default="small",
                   help="'small' (K1,K2,P3,C4,K3) or comma-separated names / graph6")
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("graphs", nargs="*", help="instances for --family custom")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("counterexample", parents=[common], help="smallest refuting graph")
    s.add_argument("--property", required=True)
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--restrict", choices=("bipartite", "c3c4-free"))
    s.set_defaults(func=cmd_counterexample)

    s = sub.add_parser("claims", parents=[common], help="list registered claims")
    s.set_defaults(func=cmd_claims)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "family", None) in ("trees", "bipartite", "girth5", "connected") \
            and args.seed is None:
        parser.error(f"--family {args.family} is random and requires --seed")
    try:
        text, status = args.func(args)
    except (UsageError, FormatError, OSError, ValueError, KeyError) as exc:
        msg = f"unknown id {exc.args[0]!r}" if isinstance(exc, KeyError) and exc.args else exc
        print(f"leapx: error: {msg}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
