"""Command line front end.

Subcommands: check, homology, cocycles, invariant.  Positional inputs
accept either a file path or the name of a bundled data item.  All
subcommands take --json for machine-readable output.

Exit codes: 0 success; 1 negative or over-budget result (axioms fail,
resource guard); 2 bad usage, unreadable or malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import data
from .algebra import check_axioms, cycle_notation, parse_birack, parse_birack_tables
from .diagram import parse_crossing_list, parse_gauss, reverse_component
from .errors import BirackError, ResourceLimitExceeded
from .homology import (
    cohomology_group,
    homology_group,
    parse_cochain,
    reduced_2_cocycles,
    reduced_2_cohomology,
)
from .invariants import cocycle_invariant, counting_invariant, framed_invariants


class _InputError(Exception):
    pass


def _read_path(value: str) -> str | None:
    p = Path(value)
    if p.is_file():
        try:
            return p.read_text()
        except OSError as e:
            raise _InputError(f"cannot read {value}: {e}") from None
    return None


def _load_birack(value: str):
    text = _read_path(value)
    if text is not None:
        return parse_birack(text)
    try:
        return data.load_birack(value)
    except KeyError:
        raise _InputError(
            f"{value!r} is neither a readable file nor a bundled birack "
            f"(bundled: {', '.join(data.available_biracks()) or 'none'})") from None


def _load_diagram(value: str):
    text = _read_path(value)
    if text is not None:
        stripped = text.lstrip()
        if value.endswith(".gauss") or stripped[:1] in ("O", "U", "o", "u"):
            return parse_gauss(text)
        return parse_crossing_list(text)
    try:
        return data.load_diagram(value)
    except KeyError:
        raise _InputError(
            f"{value!r} is neither a readable file nor a bundled diagram "
            f"(bundled: {', '.join(data.available_diagrams()) or 'none'})") from None


def _load_cochain(value: str, size: int):
    text = _read_path(value)
    if text is not None:
        return parse_cochain(text, size)
    try:
        return data.load_cochain(value, size)
    except KeyError:
        raise _InputError(
            f"{value!r} is neither a readable file nor a bundled cochain "
            f"(bundled: {', '.join(data.available_cochains()) or 'none'})") from None


def _emit(payload: dict, as_json: bool, lines) -> None:
    if as_json:
        print(json.dumps(payload, indent=2))
    else:
        for line in lines:
            print(line)


def _fmt_witnesses(witnesses, limit=8) -> str:
    shown = ", ".join(str(w) for w in witnesses[:limit])
    extra = len(witnesses) - limit
    return shown + (f", +{extra} more" if extra > 0 else "")


def cmd_check(args) -> int:
    # parse tables without constructing, so a failing structure still yields
    # a full report instead of a construction error
    text = _read_path(args.birack)
    if text is not None:
        alpha, beta = parse_birack_tables(text)
    else:
        try:
            b = data.load_birack(args.birack)
        except KeyError:
            raise _InputError(
                f"{args.birack!r} is neither a readable file nor a bundled "
                f"birack (bundled: {', '.join(data.available_biracks()) or 'none'})",
            ) from None
        alpha, beta = b.alpha, b.beta
    report = check_axioms(alpha, beta)
    lines = [f"size: {report.size}"]
    for check in report.checks:
        if check.passed:
            lines.append(f"axiom {check.name}: pass")
        else:
            lines.append(
                f"axiom {check.name}: FAIL at {_fmt_witnesses(check.witnesses)}")
    if report.pi is not None:
        lines.append(f"pi: {cycle_notation(report.pi)}")
        lines.append(f"N: {report.characteristic}")
    payload = {
        "size": report.size,
        "ok": report.ok,
        "axioms": {
            c.name: {"passed": c.passed, "witnesses": [list(w) for w in c.witnesses]}
            for c in report.checks
        },
        "pi": list(report.pi) if report.pi else None,
        "pi_cycles": cycle_notation(report.pi) if report.pi else None,
        "characteristic": report.characteristic,
    }
    _emit(payload, args.json, lines)
    return 0 if report.ok else 1


def cmd_homology(args) -> int:
    b = _load_birack(args.birack)
    if args.reduced:
        basis = reduced_2_cocycles(b, modulus=args.mod, max_cells=args.max_cells)
        lines = [f"reduced 2-cocycle space: dimension {len(basis)}"
                 + (f" over Z_{args.mod}" if args.mod else " over Z")]
        payload = {"reduced_dimension": len(basis), "mod": args.mod}
        if args.mod is None:
            quotient = reduced_2_cohomology(b, max_cells=args.max_cells)
            lines.append(f"quotient by coboundaries: {quotient.describe()}")
            payload["quotient"] = quotient.to_json_dict()
        _emit(payload, args.json, lines)
        return 0
    fn = cohomology_group if args.cohomology else homology_group
    group = fn(b, args.degree, modulus=args.mod, max_cells=args.max_cells)
    letter = "H^" if args.cohomology else "H_"
    coeff = f"; Z_{args.mod} coefficients" if args.mod else ""
    lines = [f"{letter}{args.degree} = {group.describe()}{coeff}"]
    payload = {
        "degree": args.degree,
        "cohomology": bool(args.cohomology),
        "mod": args.mod,
        **group.to_json_dict(),
    }
    _emit(payload, args.json, lines)
    return 0


def cmd_cocycles(args) -> int:
    b = _load_birack(args.birack)
    basis = reduced_2_cocycles(b, modulus=args.mod, max_cells=args.max_cells)
    ring = f"Z_{args.mod}" if args.mod else "Z"
    lines = [f"reduced 2-cocycles over {ring}: {len(basis)} basis elements"]
    lines.extend(f"  {phi}" for phi in basis)
    payload = {
        "mod": args.mod,
        "dimension": len(basis),
        "basis": [[[i, j, c] for i, j, c in phi.pairs()] for phi in basis],
    }
    if args.quotient and args.mod is None:
        quotient = reduced_2_cohomology(b, max_cells=args.max_cells)
        lines.append(f"quotient by coboundaries: {quotient.describe()}")
        payload["quotient"] = quotient.to_json_dict()
    _emit(payload, args.json, lines)
    return 0


def cmd_invariant(args) -> int:
    b = _load_birack(args.birack)
    d = _load_diagram(args.diagram)
    phi = _load_cochain(args.phi, b.size) if args.phi else None
    for comp in args.reverse or ():
        d = reverse_component(d, comp)

    if args.framed is not None:
        try:
            framing = tuple(int(t) for t in args.framed.replace(",", " ").split())
        except ValueError:
            raise _InputError(f"--framed expects integers, got {args.framed!r}") from None
        result = framed_invariants(d, b, phi, framing)
    elif phi is not None:
        import warnings as _w

        with _w.catch_warnings():
            _w.simplefilter("ignore")
            result = cocycle_invariant(d, b, phi, max_tile=args.max_tile)
    else:
        result = counting_invariant(d, b, max_tile=args.max_tile)

    lines = ["per-framing labeling counts:"]
    lines.extend(f"  {f}: {c}" for f, c in result.per_framing)
    lines.append(f"counting invariant: {result.phi_z}")
    if phi is not None:
        lines.append(f"weight polynomial: {result.poly}")
        lines.append("weight multiset: "
                     + " ".join(f"{w}:{m}" for w, m in result.multiset))
    if args.framed is None:
        for message in result.warnings:
            print(f"warning: {message}", file=sys.stderr)
    _emit(result.to_json_dict(), args.json, lines)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="birack",
        description="Finite augmented biracks: axioms, homology, "
                    "reduced cocycles, and link invariants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="verify the axioms of a birack file")
    p.add_argument("birack", help="birack file or bundled name")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("homology", help="homology or cohomology groups")
    p.add_argument("birack")
    p.add_argument("-n", "--degree", type=int, default=2)
    p.add_argument("--mod", type=int, default=None, metavar="M",
                   help="coefficients in Z_M instead of Z")
    p.add_argument("--cohomology", action="store_true")
    p.add_argument("--reduced", action="store_true",
                   help="report the reduced 2-cocycle space instead")
    p.add_argument("--max-cells", type=int, default=None,
                   help="override the chain-basis size guard "
                        "(also: BIRACKS_MAX_CELLS)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_homology)

    p = sub.add_parser("cocycles", help="basis of reduced 2-cocycles")
    p.add_argument("birack")
    p.add_argument("--mod", type=int, default=None, metavar="M")
    p.add_argument("--quotient", action="store_true",
                   help="also report cocycles modulo coboundaries")
    p.add_argument("--max-cells", type=int, default=None)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_cocycles)

    p = sub.add_parser("invariant", help="counting and cocycle invariants")
    p.add_argument("birack")
    p.add_argument("diagram", help="crossing list, Gauss code file, or bundled name")
    p.add_argument("--phi", default=None,
                   help="2-cochain file or bundled name for the weight polynomial")
    p.add_argument("--framed", default=None, metavar="W1,W2,...",
                   help="evaluate at one fixed framing instead of the tile")
    p.add_argument("--reverse", type=int, action="append", metavar="COMP",
                   help="reverse a component (0-based) before computing")
    p.add_argument("--max-tile", type=int, default=None,
                   help="override the framing-tile size guard "
                        "(also: BIRACKS_MAX_TILE)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_invariant)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except ResourceLimitExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
    except (_InputError, BirackError, ValueError, KeyError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
