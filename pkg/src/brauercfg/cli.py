"""Command-line interface.

Exit codes: 0 success (or every verdict passed), 1 domain violation or a
failed verdict, 2 I/O or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import groups
from .config import Configuration
from .errors import BrauerError, GroupAxiomError, UnknownIdError
from .quiver import build_quiver
from .relations import relations_text
from .representation import cartan_matrix, dimension_report
from .serialize import SchemaError, config_to_dict, load_config

EXIT_OK, EXIT_DOMAIN, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _config(args) -> Configuration:
    try:
        return load_config(args.config)
    except (OSError, json.JSONDecodeError, SchemaError, UnknownIdError, ValueError) as exc:
        raise InputError(f"cannot read configuration {args.config}: {exc}") from None


def cmd_validate(args) -> int:
    cfg = _config(args)
    report = cfg.validate()
    if report.is_valid:
        _emit(args, "valid Brauer configuration\n")
        return EXIT_OK
    _emit(args, "".join(f"{v.condition} violated: {v.message}\n" for v in report.violations))
    return EXIT_DOMAIN


def cmd_quiver(args) -> int:
    q = build_quiver(_config(args))
    if args.dot:
        _emit(args, q.to_dot())
        return EXIT_OK
    lines = [
        f"quiver: {len(q.vertices)} vertices, {len(q.arrows)} arrows",
        "vertices: " + " ".join(f"v{p}" for p in q.vertices),
    ]
    lines += [f"{a.label}: v{a.source} -> v{a.target}" for a in q.arrows]
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_cartan(args) -> int:
    cm = cartan_matrix(_config(args))
    _emit(args, cm.to_csv() if args.format == "csv" else cm.to_grid())
    return EXIT_OK


def cmd_report(args) -> int:
    report = dimension_report(_config(args))
    _emit(args, report.to_json())
    return EXIT_OK if report.ok else EXIT_DOMAIN


def cmd_relations(args) -> int:
    _emit(args, relations_text(build_quiver(_config(args))))
    return EXIT_OK


def _group_from_tokens(tokens: list[str]) -> groups.FiniteGroup:
    if len(tokens) == 1 and Path(tokens[0]).is_file():
        try:
            spec = json.loads(Path(tokens[0]).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise InputError(f"cannot read group spec {tokens[0]}: {exc}") from None
        return groups.build_group(spec)
    family, params = tokens[0].lower(), tokens[1:]
    try:
        if ":" in family or "*" in family or not params:
            return groups.build_group(tokens[0])
        if family == "product":
            return groups.build_group({"family": "product", "params": params})
        return groups.build_group({"family": family, "params": [int(p) for p in params]})
    except ValueError as exc:
        if isinstance(exc, BrauerError):
            raise
        raise InputError(f"cannot parse group spec {' '.join(tokens)!r}: {exc}") from None


def _mu(args, group) -> tuple[int, ...]:
    if not args.mu:
        return groups.constant_mu(group)
    try:
        values = json.loads(Path(args.mu).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read mu file {args.mu}: {exc}") from None
    if not isinstance(values, dict):
        raise InputError("mu file must map element labels to integers")
    return groups.mu_from_labels(group, values)


def cmd_group(args) -> int:
    g = _group_from_tokens(args.spec)
    if args.action == "verify":
        verdicts = groups.verify_group(g, samples=args.samples, seed=args.seed, bound=args.bound)
        failed = [v for v in verdicts if not v.holds]
        if args.format == "json":
            text = json.dumps({
                "group": g.name, "seed": args.seed, "checks": len(verdicts), "failed": [str(v) for v in failed],
            }, indent=2) + "\n"
        else:
            lines = [f"group {g.name} (order {g.order}), seed {args.seed}"]
            lines += [str(v) for v in (verdicts if args.verbose else failed)]
            lines.append(f"{len(verdicts) - len(failed)}/{len(verdicts)} verdicts PASS")
            text = "\n".join(lines) + "\n"
        _emit(args, text)
        return EXIT_DOMAIN if failed else EXIT_OK

    lat = groups.subgroup_lattice(g, args.bound)
    if args.action == "lattice":
        text = json.dumps(lat.to_dict(), indent=2) + "\n" if args.format == "json" else lat.to_text()
    elif args.action == "occ":
        if args.format == "json":
            text = json.dumps(lat.to_dict()["occurrence"], indent=2) + "\n"
        else:
            text = lat.occurrence_table()
    else:
        cfg = groups.induced_configuration(g, lat, _mu(args, g))
        if isinstance(cfg, groups.DegenerateConfiguration):
            text = json.dumps({
                "degenerate": True, "group": cfg.group_name, "algebra": cfg.algebra, "center_dim": cfg.center_dim,
            }, indent=2) + "\n"
        else:
            text = json.dumps(config_to_dict(cfg), indent=2) + "\n"
    _emit(args, text)
    return EXIT_OK


def cmd_zn(args) -> int:
    verdicts = groups.zn_sweep(args.n) if args.sweep else groups.zn_identities(args.n)
    failed = [v for v in verdicts if not v.holds]
    lines = [str(v) for v in (verdicts if args.verbose or not args.sweep else failed)]
    lines.append(f"{len(verdicts) - len(failed)}/{len(verdicts)} verdicts PASS")
    _emit(args, "\n".join(lines) + "\n")
    return EXIT_DOMAIN if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write output to this file instead of stdout")

    p = argparse.ArgumentParser(prog="brauercfg", description="Brauer configuration algebras and subgroup occurrence")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("validate", parents=[common], help="check conditions C1-C3 and the orientation")
    s.add_argument("config")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("quiver", parents=[common], help="print the induced quiver")
    s.add_argument("config")
    s.add_argument("--dot", action="store_true", help="emit Graphviz DOT")
    s.set_defaults(func=cmd_quiver)

    s = sub.add_parser("cartan", parents=[common], help="print the Cartan matrix")
    s.add_argument("config")
    s.add_argument("--format", choices=("grid", "csv"), default="grid")
    s.set_defaults(func=cmd_cartan)

    s = sub.add_parser("report", parents=[common], help="dimension report as JSON")
    s.add_argument("config")
    s.set_defaults(func=cmd_report)

    s = sub.add_parser("relations", parents=[common], help="list the defining relations")
    s.add_argument("config")
    s.set_defaults(func=cmd_relations)

    s = sub.add_parser(
        "group", parents=[common], help="subgroup lattice, occurrence, induced configuration, verification",
        description="SPEC is a family and parameter (cyclic 12, symmetric 4, quaternion, "
        "product cyclic:2 cyclic:4), a compact form (cyclic:2*cyclic:4) or a JSON file.",
    )
    s.add_argument("spec", nargs="+")
    s.add_argument("action", choices=("lattice", "occ", "induce", "verify"))
    s.add_argument("--format", choices=("text", "json"), default="text")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--samples", type=int, default=50, help="random mu assignments for verify")
    s.add_argument("--bound", type=int, default=groups.DEFAULT_BOUND, help="largest group order to enumerate")
    s.add_argument("--mu", help="JSON file mapping element labels to multiplicities (induce)")
    s.add_argument("-v", "--verbose", action="store_true", help="print every verdict")
    s.set_defaults(func=cmd_group)

    s = sub.add_parser("zn", parents=[common], help="divisor-sum identities for Z_n")
    s.add_argument("n", type=int)
    s.add_argument("--sweep", action="store_true", help="check every n' <= n and coprime pairs with product <= n")
    s.add_argument("-v", "--verbose", action="store_true")
    s.set_defaults(func=cmd_zn)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except GroupAxiomError as exc:
        print(f"error: not a group: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except BrauerError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
