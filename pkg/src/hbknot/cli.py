"""Command-line front end.

Exit status: 0 on success, 1 when verification finds violations, 2 on usage
or constraint errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Any, Sequence

from hbknot.classify import annulus_census, classify, jsj_type
from hbknot.emknot import ConstraintError, HandlebodyKnot, Side, canonicalize, derived, format_knot_spec, parse_knot_spec
from hbknot.equivalence import EquivalenceVerdict, enumerate_family, equivalent, exteriors_homeomorphic
from hbknot.invariants import TypeK, TypeM, characteristic_slopes
from hbknot.projrat import ProjRat
from hbknot.verify import DEFAULT_BOUND, SUITES, run_suite

EXIT_OK, EXIT_VIOLATIONS, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _knot(text: str) -> HandlebodyKnot:
    try:
        return parse_knot_spec(text)
    except ConstraintError as exc:
        raise UsageError(f"{text}: violated constraint(s): {', '.join(exc.clauses)}") from None
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def knot_json(hk: HandlebodyKnot) -> dict[str, Any]:
    l, m, n, p = hk.params
    return {
        "spec": format_knot_spec(hk),
        "side": hk.side.value,
        "params": {"l": l, "m": m, "n": n, "p": p},
        "l_irrelevant": hk.side is Side.LEFT,
    }


def slopes_json(slopes: TypeM | TypeK) -> dict[str, Any]:
    if isinstance(slopes, TypeM):
        return {"r_a": slopes.r_a.to_json(), "r_b": slopes.r_b.to_json()}
    return {"r1": slopes.r1.to_json(), "r2": slopes.r2.to_json(), "r_c": slopes.r_c.to_json()}


def slopes_from_json(obj: dict[str, Any]) -> TypeM | TypeK:
    if "r_c" in obj:
        return TypeK(*(ProjRat.from_json(obj[k]) for k in ("r1", "r2", "r_c")))
    return TypeM(ProjRat.from_json(obj["r_a"]), ProjRat.from_json(obj["r_b"]))


def invariants_json(hk: HandlebodyKnot) -> dict[str, Any]:
    d = derived(hk.params)
    out = knot_json(hk)
    out.update(
        {
            "lambda": d.lam,
            "phi": d.phi,
            "delta": d.delta,
            "jsj_type": jsj_type(hk).value,
            "canonical": format_knot_spec(canonicalize(hk)),
            "slopes": slopes_json(characteristic_slopes(hk)),
        }
    )
    return out


def verdict_json(v: EquivalenceVerdict) -> dict[str, Any]:
    return {
        "equivalent": v.equivalent,
        "reason": v.reason.value,
        "witness": list(v.witness) if v.witness is not None else None,
    }


def _render_table(obj: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key, value in obj.items():
        if isinstance(value, dict) and set(value) == {"num", "den"}:
            lines.append(f"{pad}{key}: {ProjRat.from_json(value)}")
        elif isinstance(value, dict):
            lines.append(f"{pad}{key}:")
            lines.extend(_render_table(value, indent + 1))
        elif isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{pad}{key}:")
            for item in value:
                lines.extend(_render_table(item, indent + 1))
                lines.append("")
        else:
            lines.append(f"{pad}{key}: {value}")
    return lines


def _emit(obj: dict[str, Any], fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(obj, ensure_ascii=False))
    else:
        print("\n".join(_render_table(obj)))


def cmd_invariants(args: argparse.Namespace) -> int:
    _emit(invariants_json(_knot(args.spec)), args.format)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    hk = _knot(args.spec)
    c = classify(hk)
    out = knot_json(hk)
    out.update({"jsj_type": c.jsj_type.value, "mcg": c.mcg.value, "mcg_positive_equal": c.mcg_positive_equal})
    _emit(out, args.format)
    return EXIT_OK


def cmd_equiv(args: argparse.Namespace) -> int:
    a, b = _knot(args.spec_a), _knot(args.spec_b)
    _emit({"a": format_knot_spec(a), "b": format_knot_spec(b), **verdict_json(equivalent(a, b))}, args.format)
    return EXIT_OK


def cmd_exterior(args: argparse.Namespace) -> int:
    a, b = _knot(args.spec_a), _knot(args.spec_b)
    try:
        result = exteriors_homeomorphic(a, b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit({"a": format_knot_spec(a), "b": format_knot_spec(b), "exteriors_homeomorphic": result}, args.format)
    return EXIT_OK


def cmd_family(args: argparse.Namespace) -> int:
    if args.p_to < args.p_from:
        raise UsageError("p_to must not be smaller than p_from")
    try:
        report = enumerate_family(args.m, range(args.p_from, args.p_to + 1))
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(
        {
            "m": report.m,
            "members": [{"spec": format_knot_spec(x.knot), "r_c": x.r_c.to_json()} for x in report.members],
            "pairwise_inequivalent": report.pairwise_inequivalent,
            "exteriors_homeomorphic": report.exteriors_homeomorphic,
        },
        args.format,
    )
    return EXIT_OK


def cmd_census(args: argparse.Namespace) -> int:
    hk = _knot(args.spec)
    c = annulus_census(hk)
    out = knot_json(hk)
    out.update(
        {
            "jsj_type": jsj_type(hk).value,
            "type32_indices": sorted(c.type32_indices),
            "noncharacteristic_non41_count": c.noncharacteristic_non41_count,
            "has_type33": c.has_type33,
            "characteristic_count": c.characteristic_count,
            "type41_count": c.type41_count if c.type41_count is not None else "infinite",
        }
    )
    _emit(out, args.format)
    return EXIT_OK


def cmd_verify(args: argparse.Namespace) -> int:
    bound = args.bound
    if bound is None and os.environ.get("HBK_BOUND"):
        try:
            bound = int(os.environ["HBK_BOUND"])
        except ValueError:
            raise UsageError(f"HBK_BOUND must be an integer, got {os.environ['HBK_BOUND']!r}") from None
    if bound is not None and bound < 3:
        raise UsageError("bound must be at least 3")
    reports = run_suite(args.suite, bound)
    passed = all(r.passed for r in reports)
    if args.format == "json":
        print(json.dumps({"passed": passed, "reports": [r.to_json() for r in reports]}, ensure_ascii=False))
    else:
        for r in reports:
            for c in r.checks:
                status = "PASS" if c.passed else "FAIL"
                print(f"{status}  {c.name:45s} bound={r.box_bound} tested={c.instances_tested} violations={len(c.violations)}")
                for v in c.violations[:5]:
                    print(f"        {v}")
        print("PASS" if passed else "FAIL")
    return EXIT_OK if passed else EXIT_VIOLATIONS


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hbknot",
        description="Slope invariants and equivalence of handlebody-knots induced by Eudave-Muñoz knots.",
        epilog="Knot specs: R:l,m,n,p (right) or L:m,n,p (left, l omitted).",
    )
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("table", "json"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", parents=[fmt], help="Λ, Φ, Δ, JSJ type and characteristic slopes")
    p.add_argument("spec")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("classify", parents=[fmt], help="JSJ type and symmetry group")
    p.add_argument("spec")
    p.set_defaults(func=cmd_classify)

    for name, func, text in (
        ("equiv", cmd_equiv, "decide equivalence of two knots"),
        ("exterior", cmd_exterior, "decide whether two type-K knots have homeomorphic exteriors"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=text)
        p.add_argument("spec_a")
        p.add_argument("spec_b")
        p.set_defaults(func=func)

    p = sub.add_parser("family", parents=[fmt], help="the family V_L(*,m,0,p) for p in [p_from, p_to]")
    p.add_argument("m", type=int)
    p.add_argument("p_from", type=int)
    p.add_argument("p_to", type=int)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("census", parents=[fmt], help="essential annuli not of type 4-1")
    p.add_argument("spec")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("verify", parents=[fmt], help="replay the lemmas over a finite parameter box")
    p.add_argument("bound_pos", nargs="?", type=int, metavar="bound")
    p.add_argument("suite_pos", nargs="?", choices=(*SUITES, "all"), metavar="suite")
    p.add_argument("--bound", type=int, default=None, help=f"box bound (default {DEFAULT_BOUND}, 6 for collisions; env HBK_BOUND)")
    p.add_argument("--suite", choices=(*SUITES, "all"), default=None)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    if args.command == "verify":
        args.bound = args.bound if args.bound is not None else args.bound_pos
        args.suite = args.suite or args.suite_pos or "all"
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
