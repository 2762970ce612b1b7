"""Command-line front end: group info, lattice stats/export, homology, and
the verification suite.  Output is deterministic JSON (or CSV tables)."""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .groups import (
    DEFAULT_MAX_ORDER,
    CapExceeded,
    GroupSpecError,
    OrderCapExceeded,
    build_group,
    conjugacy_classes,
    group_properties,
)
from .lattice import (
    DEFAULT_NODE_BUDGET,
    BudgetExceeded,
    all_maximal_chain_lengths,
    atoms,
    coatoms,
    enumerate_subracks,
    export_lattice_text,
    gradedness,
)
from .racks import RackAxiomError, rack_from_spec
from .topology import DEFAULT_SIMPLEX_BUDGET, order_complex, reduced_homology
from .verify import CHECKS, VerifyConfig, report_to_csv, report_to_json, run_checks

_USAGE_ERROR = 2


def _env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"environment variable {name} must be an integer, got {raw!r}")


def _emit(obj: dict, fmt: str = "json") -> None:
    if fmt == "json":
        sys.stdout.write(json.dumps(obj, indent=2, sort_keys=True) + "\n")
    else:
        raise AssertionError(fmt)


def cmd_group(args: argparse.Namespace) -> int:
    G = build_group(args.spec, max_order=args.max_order)
    cd = conjugacy_classes(G)
    props = group_properties(G)
    out = {
        "spec": args.spec,
        "order": G.order,
        "class_sizes": list(cd.sizes),
        "class_count": len(cd.classes),
        "center_size": cd.center.bit_count(),
        "labels": list(G.labels),
    }
    out["properties"] = {
        "abelian": props.abelian,
        "nilpotent": props.nilpotent,
        "solvable": props.solvable,
        "supersolvable": props.supersolvable,
        "simple": props.simple,
    }
    _emit(out)
    return 0


def cmd_lattice(args: argparse.Namespace) -> int:
    rack = rack_from_spec(args.spec, max_order=args.max_order)
    lat = enumerate_subracks(rack, args.budget_nodes)
    grad = gradedness(lat)
    out = {
        "spec": args.spec,
        "rack_size": rack.size,
        "nodes": lat.n,
        "cover_edges": lat.edge_count(),
        "atoms": len(atoms(lat)),
        "coatoms": len(coatoms(lat)),
        "graded": grad.is_graded,
        "min_maximal_chain": grad.min_maximal_chain,
        "max_maximal_chain": grad.max_maximal_chain,
        "chain_lengths": list(all_maximal_chain_lengths(lat)),
    }
    if args.export:
        with open(args.export, "w", encoding="utf-8") as fh:
            fh.write(export_lattice_text(lat))
        out["export"] = args.export
    _emit(out)
    return 0


def cmd_homology(args: argparse.Namespace) -> int:
    t0 = time.monotonic()
    rack = rack_from_spec(args.spec, max_order=args.max_order)
    lat = enumerate_subracks(rack, args.budget_nodes)
    K = order_complex(lat, args.budget_simplices)
    H = reduced_homology(K, collapse=not args.no_collapse)
    out = {"spec": args.spec, "rack_size": rack.size, "nodes": lat.n}
    out.update(H.to_jsonable())
    sphere_dim = None
    nz = H.nonzero_dimensions()
    if H.empty_complex:
        sphere_dim = -1
    elif len(nz) == 1 and H.betti.get(nz[0]) == 1 and not H.torsion:
        sphere_dim = nz[0]
    out["sphere_dimension"] = sphere_dim
    out["seconds"] = round(time.monotonic() - t0, 3) if args.timings else None
    _emit(out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.all and args.check:
        raise SystemExit("--all and --check are mutually exclusive")
    ids = None if args.all or not args.check else list(args.check)
    cfg = VerifyConfig(
        max_order=args.max_order,
        node_budget=args.budget_nodes,
        simplex_budget=args.budget_simplices,
        timings=args.timings,
    )
    report = run_checks(ids, cfg, workers=args.workers)
    if args.format == "json":
        sys.stdout.write(report_to_json(report))
    else:
        sys.stdout.write(report_to_csv(report))
    return 1 if report["status"] == "fail" else 0


def build_parser() -> argparse.ArgumentParser:
    env_max_order = _env_int("RACKLAB_MAX_ORDER", DEFAULT_MAX_ORDER)
    env_nodes = _env_int("RACKLAB_BUDGET_NODES", DEFAULT_NODE_BUDGET)
    env_simplices = _env_int("RACKLAB_BUDGET_SIMPLICES", DEFAULT_SIMPLEX_BUDGET)

    p = argparse.ArgumentParser(
        prog="racklab",
        description="finite groups, conjugation racks, subrack lattices and their homology",
    )
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, max_order_default):
        sp.add_argument("--max-order", type=int, default=max_order_default,
                        help="largest group order to construct")
        sp.add_argument("--budget-nodes", type=int, default=env_nodes,
                        help="lattice node budget")
        sp.add_argument("--budget-simplices", type=int, default=env_simplices,
                        help="order-complex simplex budget")
        sp.add_argument("--timings", action="store_true",
                        help="include wall-clock timings (non-deterministic output)")

    g = sub.add_parser("group", help="order, classes, center and properties of a group")
    g.add_argument("spec", help='group spec, e.g. "S4", "D8xZ3", "SL(2,3)"')
    common(g, env_max_order)
    g.set_defaults(func=cmd_group)

    l = sub.add_parser("lattice", help="enumerate the subrack lattice of a rack spec")
    l.add_argument("spec", help='rack spec, e.g. "S4:cycles(4)", "D8:noncentral", "Z4"')
    l.add_argument("--export", metavar="PATH", help="write the line-oriented lattice export")
    common(l, env_max_order)
    l.set_defaults(func=cmd_lattice)

    h = sub.add_parser("homology", help="reduced integer homology of the order complex")
    h.add_argument("spec", help="rack spec")
    h.add_argument("--no-collapse", action="store_true",
                   help="skip the collapse preprocessing (results are identical)")
    common(h, env_max_order)
    h.set_defaults(func=cmd_homology)

    v = sub.add_parser("verify", help="run the verification suite")
    v.add_argument("--all", action="store_true", help="run every check")
    v.add_argument("--check", action="append", metavar="ID",
                   help=f"run a single check (repeatable); one of: {', '.join(sorted(CHECKS))}")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--max-order", type=int, default=None,
                   help="restrict checks to groups of at most this order")
    v.add_argument("--budget-nodes", type=int, default=env_nodes)
    v.add_argument("--budget-simplices", type=int, default=env_simplices)
    v.add_argument("--timings", action="store_true")
    v.add_argument("--workers", type=int, default=1,
                   help="run checks concurrently in this many processes")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (GroupSpecError, RackAxiomError) as exc:
        print(f"racklab: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    except (OrderCapExceeded, CapExceeded, BudgetExceeded) as exc:
        print(f"racklab: {exc}", file=sys.stderr)
        return _USAGE_ERROR
    except KeyError as exc:
        print(f"racklab: {exc}", file=sys.stderr)
        return _USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
