"""Command line explorer for the partition/crystal toolkit.

Subcommands emit JSON by default (stable key order, deterministic bytes) or
plain text with --plain.  Exit status: 0 on success, 1 when a verification
subcommand finds failures, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .partitions import is_regular, size, transpose
from .rimhooks import ell_core, is_core
from .jm import (
    compose_jm,
    count_jm,
    decompose_jm,
    enumerate_jm,
    fayers_witness,
    is_ell_partition,
    is_generalized_ell_partition,
    is_jm,
    star_condition,
)
from .regular import (
    NotRegularError,
    deregularize,
    is_L_partition,
    is_ladder_node,
    is_weak_ell_partition,
    mullineux,
    reg_class,
    regularize,
)
from .graph import build_crystal, export_dot, theorem_suite, verify_isomorphism
from .strings import format_partition, parse_partition


def _emit(payload, plain_lines: list[str], plain: bool) -> None:
    if plain:
        for line in plain_lines:
            print(line)
    else:
        print(json.dumps(payload, indent=2))


def _cmd_info(args) -> int:
    lam = parse_partition(args.partition)
    ell = args.ell
    core, weight = ell_core(lam, ell)
    try:
        weak = is_weak_ell_partition(lam, ell)
        weak_note = None
    except NotRegularError:
        weak = False
        weak_note = f"not {ell}-regular"
    payload = {
        "partition": format_partition(lam),
        "ell": ell,
        "size": size(lam),
        "length": len(lam),
        "transpose": format_partition(transpose(lam)),
        "regular": is_regular(lam, ell),
        "core": format_partition(core),
        "weight": weight,
        "star": star_condition(lam, ell),
        "ell_partition": is_ell_partition(lam, ell),
        "jm": is_jm(lam, ell),
        "L_partition": is_L_partition(lam, ell),
        "weak": weak,
        "ladder_node": is_ladder_node(lam, ell),
    }
    if weak_note:
        payload["weak_note"] = weak_note
    _emit(payload, [f"{k}: {v}" for k, v in payload.items()], args.plain)
    return 0


def _cmd_core(args) -> int:
    lam = parse_partition(args.partition)
    core, weight = ell_core(lam, args.ell)
    payload = {
        "partition": format_partition(lam),
        "ell": args.ell,
        "core": format_partition(core),
        "weight": weight,
        "is_core": is_core(lam, args.ell),
    }
    _emit(payload, [f"{format_partition(core)} {weight}"], args.plain)
    return 0


def _cmd_jm_check(args) -> int:
    lam = parse_partition(args.partition)
    witness = fayers_witness(lam, args.ell)
    payload = {
        "partition": format_partition(lam),
        "ell": args.ell,
        "is_jm": witness is None,
        "generalized": is_generalized_ell_partition(lam, args.ell),
        "witness": None
        if witness is None
        else {
            "base": list(witness.base),
            "row_mate": list(witness.row_mate),
            "col_mate": list(witness.col_mate),
        },
    }
    _emit(payload, ["true" if witness is None else "false"], args.plain)
    return 0


def _cmd_jm_count(args) -> int:
    core = parse_partition(args.core)
    n = count_jm(core, args.weight, args.ell)
    _emit(n, [str(n)], args.plain)
    return 0


def _cmd_jm_enumerate(args) -> int:
    core = parse_partition(args.core)
    found = enumerate_jm(core, args.weight, args.ell)
    names = [format_partition(lam) for lam in found]
    _emit(names, names, args.plain)
    return 0


def _cmd_jm_decompose(args) -> int:
    lam = parse_partition(args.partition)
    dec = decompose_jm(lam, args.ell)
    payload = {
        "partition": format_partition(lam),
        "ell": args.ell,
        "mu": format_partition(dec.mu),
        "r": dec.r,
        "s": dec.s,
        "rho": format_partition(dec.rho),
        "sigma": format_partition(dec.sigma),
    }
    roundtrip = compose_jm(dec, args.ell)
    if roundtrip != lam:
        raise AssertionError(f"decomposition of {lam} does not recompose: {roundtrip}")
    plain = [f"mu={payload['mu']} r={dec.r} s={dec.s} rho={payload['rho']} sigma={payload['sigma']}"]
    _emit(payload, plain, args.plain)
    return 0


def _cmd_crystal_build(args) -> int:
    graph = build_crystal(args.ell, args.depth, args.model)
    payload = {
        "model": graph.model,
        "ell": graph.ell,
        "depth": graph.depth,
        "level_sizes": [len(level) for level in graph.levels],
        "levels": [[format_partition(lam) for lam in level] for level in graph.levels],
        "edges": [
            [format_partition(src), format_partition(dst), i] for src, dst, i in graph.edges
        ],
    }
    if args.dot:
        Path(args.dot).write_text(export_dot(graph), encoding="utf-8")
    plain = [
        f"level {n}: " + " ".join(format_partition(lam) for lam in level)
        for n, level in enumerate(graph.levels)
    ]
    _emit(payload, plain, args.plain)
    return 0


def _report_exit(report, plain: bool) -> int:
    payload = report.to_dict()
    plain_lines = [
        f"suite {report.suite} ell={report.ell} checks={report.checks} failures={len(report.failures)}"
    ]
    plain_lines += [
        f"FAIL input={f['input']} residue={f['residue']} expected={f['expected']} actual={f['actual']}"
        for f in report.failures
    ]
    _emit(payload, plain_lines, plain)
    return 0 if report.passed else 1


def _cmd_crystal_verify(args) -> int:
    return _report_exit(verify_isomorphism(args.ell, args.depth), args.plain)


def _cmd_suite(args) -> int:
    return _report_exit(theorem_suite(args.ell, args.nmax), args.plain)


def _cmd_regularize(args) -> int:
    lam = parse_partition(args.partition)
    name = format_partition(regularize(lam, args.ell))
    _emit(name, [name], args.plain)
    return 0


def _cmd_deregularize(args) -> int:
    lam = parse_partition(args.partition)
    name = format_partition(deregularize(lam, args.ell))
    _emit(name, [name], args.plain)
    return 0


def _cmd_regclass(args) -> int:
    lam = parse_partition(args.partition)
    cls = reg_class(lam, args.ell)
    payload = {
        "partition": format_partition(lam),
        "ell": args.ell,
        "representative": format_partition(cls.representative),
        "members": [format_partition(mu) for mu in cls.members],
    }
    _emit(payload, [format_partition(mu) for mu in cls.members], args.plain)
    return 0


def _cmd_mullineux(args) -> int:
    lam = parse_partition(args.partition)
    name = format_partition(mullineux(lam, args.ell))
    _emit(name, [name], args.plain)
    return 0


def _add_common(parser, partition=True, ell=True) -> None:
    if partition:
        parser.add_argument("partition", help='partition like "3,2^2,1^5", or "empty"')
    if ell:
        parser.add_argument("--ell", type=int, required=True, help="modulus (>= 2; JM needs >= 3)")
    parser.add_argument("--plain", action="store_true", help="plain text instead of JSON")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="laddercrystal", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="summary of one partition")
    _add_common(p)
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("core", help="ell-core and weight")
    _add_common(p)
    p.set_defaults(func=_cmd_core)

    jm = sub.add_parser("jm", help="JM partition tools")
    jm_sub = jm.add_subparsers(dest="jm_command", required=True)
    p = jm_sub.add_parser("check", help="test the (ell,0)-JM property")
    _add_common(p)
    p.set_defaults(func=_cmd_jm_check)
    p = jm_sub.add_parser("count", help="count JM partitions for a core and weight")
    p.add_argument("--core", required=True, help="an ell-core partition")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=_cmd_jm_count)
    p = jm_sub.add_parser("enumerate", help="list JM partitions for a core and weight")
    p.add_argument("--core", required=True, help="an ell-core partition")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=_cmd_jm_enumerate)
    p = jm_sub.add_parser("decompose", help="core frame and hook multiplicities")
    _add_common(p)
    p.set_defaults(func=_cmd_jm_decompose)

    crystal = sub.add_parser("crystal", help="crystal graph tools")
    crystal_sub = crystal.add_subparsers(dest="crystal_command", required=True)
    p = crystal_sub.add_parser("build", help="breadth-first crystal graph from empty")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--model", choices=["classical", "ladder"], default="classical")
    p.add_argument("--dot", help="write a DOT rendering to this path")
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=_cmd_crystal_build)
    p = crystal_sub.add_parser("verify", help="check the regularization isomorphism")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=_cmd_crystal_verify)

    p = sub.add_parser("regularize", help="slide boxes to the tops of their ladders")
    _add_common(p)
    p.set_defaults(func=_cmd_regularize)

    p = sub.add_parser("deregularize", help="slide unlocked boxes down their ladders")
    _add_common(p)
    p.set_defaults(func=_cmd_deregularize)

    p = sub.add_parser("regclass", help="all partitions with the same regularization")
    _add_common(p)
    p.set_defaults(func=_cmd_regclass)

    p = sub.add_parser("mullineux", help="Mullineux image of a regular partition")
    _add_common(p)
    p.set_defaults(func=_cmd_mullineux)

    p = sub.add_parser("suite", help="run the theorem checks up to a size bound")
    p.add_argument("--ell", type=int, required=True)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--plain", action="store_true")
    p.set_defaults(func=_cmd_suite)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
