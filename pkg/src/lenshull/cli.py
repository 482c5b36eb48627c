"""Command-line interface.

Exit codes: 0 success, 1 verification mismatch, 2 invalid or degenerate input.
"""
from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import List, Optional

from .certify import DEFAULT_SAMPLES, certify_triangulation
from .export import dumps, to_csv, to_off4, triangulation_document
from .group import GroupSpec, canonicalize, orbit_coords
from .hull_oracle import DEFAULT_EPSILON, compare, hull
from .predictor import Degenerate, predict

MAX_Q = 10**6
ORACLE_CAP = 120


class UsageError(Exception):
    pass


def parse_generators(text: str):
    """``"s,t;s,t;..."`` with each coordinate an integer or ``num/den``."""
    gens = []
    for chunk in text.split(";"):
        parts = [c.strip() for c in chunk.split(",")]
        if len(parts) != 2 or not all(parts):
            raise UsageError(f"cannot parse generator {chunk!r}")
        try:
            gens.append(tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse generator {chunk!r}: {exc}") from None
    return gens


def _spec(args) -> GroupSpec:
    if args.gens:
        return canonicalize(parse_generators(args.gens))
    if args.q is None or args.p is None:
        raise UsageError("give --p and --q, or --gens")
    if not 1 <= args.q <= MAX_Q:
        raise UsageError(f"q must be in [1, {MAX_Q}]")
    try:
        return GroupSpec(args.p, args.q, args.mu, args.nu)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _degenerate_doc(exc: Degenerate) -> dict:
    return {"spec": exc.spec.as_dict(), "degeneracy": exc.degeneracy.value,
            "dimension": exc.dimension}


def cmd_predict(args) -> int:
    spec = _spec(args)
    try:
        tri = predict(spec)
    except Degenerate as exc:
        doc = dumps(_degenerate_doc(exc))
        sys.stderr.write(doc)
        _emit(doc, args.out)
        return 2
    _emit(dumps(triangulation_document(tri, args.unit_sphere, args.samples)), args.out)
    return 0


def verify_spec(spec: GroupSpec, epsilon: float = DEFAULT_EPSILON, samples: int = DEFAULT_SAMPLES) -> dict:
    """Predict, certify, run the hull oracle and compare."""
    tri = predict(spec)
    cert = certify_triangulation(tri, samples)
    oracle = hull(orbit_coords(spec), epsilon=epsilon)
    diff = compare(tri, oracle)
    ok = diff.ok and cert.all_pass and tri.is_pseudomanifold() and tri.is_connected()
    return {
        "spec": spec.as_dict(),
        "facets": len(tri.facets),
        "oracle_facets": len(oracle.facets),
        "diff": diff.as_list(),
        "certificates_pass": cert.all_pass,
        "failures": sorted({f for r in cert.pairs for f in r.failures()}),
        "pseudomanifold": tri.is_pseudomanifold(),
        "connected": tri.is_connected(),
        "ok": ok,
    }


def cmd_verify(args) -> int:
    if args.grid:
        rows = []
        for q in range(5, args.qmax + 1):
            for p in range(2, q - 1):
                if math.gcd(p, q) == 1:
                    rows.append(verify_spec(GroupSpec(p, q), args.epsilon, args.samples))
        doc = {"grid": rows, "ok": all(r["ok"] for r in rows)}
        _emit(dumps(doc), args.out)
        return 0 if doc["ok"] else 1
    spec = _spec(args)
    if spec.order > ORACLE_CAP:
        raise UsageError(f"group order {spec.order} exceeds the oracle cap {ORACLE_CAP}")
    try:
        doc = verify_spec(spec, args.epsilon, args.samples)
    except Degenerate as exc:
        sys.stderr.write(dumps(_degenerate_doc(exc)))
        return 2
    _emit(dumps(doc), args.out)
    return 0 if doc["ok"] else 1


def cmd_group(args) -> int:
    if not args.gens:
        raise UsageError("--gens is required")
    spec = canonicalize(parse_generators(args.gens))
    doc = dict(spec.as_dict(), degeneracy=spec.degeneracy.value, order=spec.order)
    _emit(dumps(doc), args.out)
    return 0


def cmd_export(args) -> int:
    spec = _spec(args)
    if args.format not in ("json", "off4", "csv"):
        raise UsageError(f"unknown format {args.format!r}")
    try:
        tri = predict(spec)
    except Degenerate as exc:
        sys.stderr.write(dumps(_degenerate_doc(exc)))
        return 2
    if args.format == "json":
        text = dumps(triangulation_document(tri, args.unit_sphere, args.samples))
    elif args.format == "off4":
        text = to_off4(tri, args.unit_sphere)
    else:
        text = to_csv(tri, args.unit_sphere)
    _emit(text, args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="lenshull", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, spec=True):
        if spec:
            p.add_argument("--p", type=int)
            p.add_argument("--q", type=int)
            p.add_argument("--mu", type=int, default=1)
            p.add_argument("--nu", type=int, default=1)
        p.add_argument("--gens", help='generators, e.g. "1/2,0;0,1/3"')
        p.add_argument("--out", help="output file (default stdout)")
        p.add_argument("--samples", type=int, default=DEFAULT_SAMPLES)
        p.add_argument("--unit-sphere", action="store_true")

    p = sub.add_parser("predict", help="predicted facets as JSON")
    common(p)
    p.set_defaults(func=cmd_predict)

    p = sub.add_parser("verify", help="predict, certify and compare against the hull oracle")
    common(p)
    p.add_argument("--grid", action="store_true", help="all p in [2, q-2], 5 <= q <= qmax")
    p.add_argument("--qmax", type=int, default=30)
    p.add_argument("--epsilon", type=float, default=DEFAULT_EPSILON)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("group", help="canonical invariants of a generated subgroup")
    common(p, spec=False)
    p.set_defaults(func=cmd_group)

    p = sub.add_parser("export", help="write json, off4 or csv")
    common(p)
    p.add_argument("--format", default="json")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return args.func(args)
    except (UsageError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
