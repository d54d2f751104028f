"""Command-line surface.

Subcommands: analyze, certify, replay, iso, catalog-verify, expected.
Every command prints one JSON document on stdout with sorted keys, so
output is byte-for-byte reproducible. Exit codes: 0 success/pass,
1 verification negative (certificate still printed), 2 input problems.
``-`` stands for standard input wherever a file is expected.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import canonical, catalog, structure
from .core import FiniteGroup
from .errors import (DeltaCertError, InputError, PropertyViolation,
                     UniquenessViolated, VerificationError)
from .groupspec import SpecialSpec, builtin_spec, certify

PASS, FAIL, BAD_INPUT = 0, 1, 2


def _emit(doc: dict) -> None:
    sys.stdout.write(json.dumps(doc, sort_keys=True, indent=2) + "\n")


def _read_json(path: str):
    if path == "-":
        text = sys.stdin.read()
        name = "<stdin>"
    else:
        try:
            with open(path, "r", encoding="utf-8") as fh:
                text = fh.read()
        except OSError as exc:
            raise InputError(f"cannot read {path}: {exc}")
        name = path
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {name}: {exc}")


def _load_group(path: str) -> FiniteGroup:
    return FiniteGroup.from_json_dict(_read_json(path))


def _load_spec(args) -> SpecialSpec:
    if args.builtin is not None:
        return builtin_spec(args.builtin)
    return SpecialSpec.from_json_dict(_read_json(args.spec))


def _cmd_analyze(args) -> int:
    group = _load_group(args.group)
    profile = structure.ClassProfile.of(group)
    ambivalent, _ = structure.is_ambivalent(group)
    _emit({"order": group.order,
           "num_classes": len(profile.entries),
           "classes": profile.to_json_list(),
           "ambivalent": ambivalent})
    return PASS


def _cmd_certify(args) -> int:
    group = _load_group(args.group)
    spec = _load_spec(args)
    cert = certify(group, spec)
    _emit(cert.to_json_dict())
    return PASS if cert.overall else FAIL


def _cmd_replay(args) -> int:
    group = _load_group(args.group)
    spec = builtin_spec(args.builtin)
    try:
        report = canonical.proof_replay(group, spec)
    except PropertyViolation as exc:
        _emit({"error": {"type": "PropertyViolation", "message": str(exc)}})
        return FAIL
    _emit(report.to_json_dict())
    return PASS


def _cmd_iso(args) -> int:
    g = _load_group(args.group_a)
    h = _load_group(args.group_b)
    iso = structure.are_isomorphic(g, h)
    if iso is None:
        _emit({"isomorphic": False, "mapping": None})
        return FAIL
    _emit({"isomorphic": True, "mapping": iso.mapping.tolist()})
    return PASS


def _cmd_catalog_verify(args) -> int:
    spec = builtin_spec(args.order)
    try:
        report = catalog.verify_uniqueness(args.order, spec)
    except UniquenessViolated as exc:
        _emit({"error": {"type": "UniquenessViolated", "message": str(exc)}})
        return FAIL
    _emit(report.to_json_dict())
    return PASS


def _cmd_expected(args) -> int:
    _emit(canonical.expected_group(args.c).to_json_dict())
    return PASS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="deltacert",
        description="Certify finite groups against class-data specs.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", help="class profile of a group file")
    p.add_argument("group", help="group JSON file, or - for stdin")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("certify", help="check a group against a spec")
    p.add_argument("group", help="group JSON file, or - for stdin")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--spec", help="spec JSON file, or - for stdin")
    src.add_argument("--builtin", type=int, metavar="C",
                     help="use the built-in spec for order C")
    p.set_defaults(func=_cmd_certify)

    p = sub.add_parser("replay", help="replay the structural argument")
    p.add_argument("group", help="group JSON file, or - for stdin")
    p.add_argument("--builtin", type=int, required=True, metavar="C",
                   help="built-in spec order (6, 24 or 120)")
    p.set_defaults(func=_cmd_replay)

    p = sub.add_parser("iso", help="search for an isomorphism")
    p.add_argument("group_a", help="group JSON file, or - for stdin")
    p.add_argument("group_b", help="group JSON file")
    p.set_defaults(func=_cmd_iso)

    p = sub.add_parser("catalog-verify",
                       help="uniqueness sweep over a catalog")
    p.add_argument("order", type=int, choices=(6, 24, 120))
    p.set_defaults(func=_cmd_catalog_verify)

    p = sub.add_parser("expected", help="emit the reference group of order C")
    p.add_argument("c", type=int)
    p.set_defaults(func=_cmd_expected)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return BAD_INPUT
    except VerificationError as exc:
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return FAIL
    except DeltaCertError as exc:
        # inconclusive outcomes (exhausted search budgets) count as input
        # problems: the result is neither a pass nor a refutation
        _emit({"error": {"type": type(exc).__name__, "message": str(exc)}})
        return BAD_INPUT


def entrypoint() -> None:
    raise SystemExit(main())
