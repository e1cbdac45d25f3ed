"""Finite-box replay of every computational claim.

Each check walks the admissible parameters with all entries in
``[-bound, bound]`` in a fixed order, so a report is a deterministic function
of the bound.  Rational bounds are compared as ``Fraction``s (exact
cross-multiplication), never as floats.
"""
from __future__ import annotations

import itertools
import time
from collections import defaultdict
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Callable, Iterable

from hbknot.classify import type32_indices
from hbknot.emknot import (
    HandlebodyKnot,
    Side,
    canonicalize,
    delta,
    is_type_k_right,
    is_valid,
    lam,
    mirror,
    mirror_forms,
    phi,
)
from hbknot.equivalence import RewriteClosure, box_knots, box_tuples, neighbours
from hbknot.invariants import (
    Direction,
    _horizontal,
    characteristic_slopes,
    em_determinants,
    montesinos_det,
    rc_mod_one,
    slope_mod_one,
    slope_pair_specialized,
    tilde_rb,
    type_k_slopes,
    type_m_slopes,
    vertical_slopes,
)
from hbknot.projrat import ProjRat, cf_eval, mod_one
from hbknot.tangle import RationalTangle, b_prime, c_prime, em_tangles, rewrite_two_twist

DEFAULT_BOUND = 8
DEFAULT_COLLISION_BOUND = 6


@dataclass
class Check:
    name: str
    instances_tested: int = 0
    violations: list[tuple] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def record(self, ok: bool, instance: tuple) -> None:
        self.instances_tested += 1
        if not ok:
            self.violations.append(instance)


@dataclass
class VerificationReport:
    box_bound: int
    checks: list[Check]
    elapsed: float

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict[str, Any]:
        return {
            "box_bound": self.box_bound,
            "passed": self.passed,
            "elapsed_seconds": round(self.elapsed, 3),
            "checks": [
                {
                    "name": c.name,
                    "instances_tested": c.instances_tested,
                    "passed": c.passed,
                    "violations": [list(v) for v in c.violations],
                }
                for c in self.checks
            ],
        }


class _Checks:
    def __init__(self) -> None:
        self._by_name: dict[str, Check] = {}

    def __call__(self, name: str, ok: bool, instance: tuple) -> None:
        self._by_name.setdefault(name, Check(name)).record(ok, instance)

    def declare(self, *names: str) -> None:
        for name in names:
            self._by_name.setdefault(name, Check(name))

    def report(self, bound: int, started: float) -> VerificationReport:
        return VerificationReport(bound, list(self._by_name.values()), time.perf_counter() - started)


def _require_bound(bound: int) -> None:
    if bound < 3:
        raise ValueError(f"bound must be at least 3, got {bound}")


def _frac(x: ProjRat) -> Fraction:
    return x.to_fraction()


def _left_triples(bound: int) -> list[tuple[int, int, int]]:
    seen: dict[tuple[int, int, int], None] = {}
    for _, m, n, p in box_tuples(bound):
        seen.setdefault((m, n, p))
    return list(seen)


# -- lemmas -------------------------------------------------------------------

def verify_lemmas(bound: int = DEFAULT_BOUND) -> VerificationReport:
    _require_bound(bound)
    started = time.perf_counter()
    check = _Checks()
    check.declare(
        "eq:delta=-l*phi+2p-1",
        "lambda_odd",
        "lemma_3.5",
        "lemma_4.1",
        "lemma_4.5[±1 identity]",
        "lemma_4.5[nonvanishing]",
        "lemma_5.1[n∉{0,1}]",
        "lemma_5.1[n=1]",
        "lemma_5.1[p∉{0,1}]",
        "lemma_5.1[p=1]",
        "lemma_5.2[p∉{0,1}]",
        "lemma_5.2[p=1]",
        "lemma_5.3[|m|≥2]",
        "lemma_5.3[m=1]",
        "lemma_5.3[m=-1]",
        "lemma_5.5[p∉{0,1}]",
        "lemma_5.5[n∉{0,1}]",
        "lemma_5.5[p=1 or n=1]",
        "corollary_4.8[r_a≠r_b]",
        "theorem_3.6[type K has left form]",
        "lemma_3.7[census]",
    )
    for t in box_tuples(bound):
        l, m, n, p = t
        L, F, D = lam(m, n), phi(m, p), delta(l, m, p)
        check("eq:delta=-l*phi+2p-1", D == -l * F + 2 * p - 1, t)
        check("lambda_odd", L % 2 == 1, t)
        check("lemma_4.1", F != 0 and D != 0 and abs(L) > 2, t)
        check("lemma_4.5[±1 identity]", (2 - 4 * n) * F + (2 * p - 1) * L in (1, -1), t)
        check("lemma_4.5[nonvanishing]", (2 - 4 * n) + l * L != 0, t)
        if p not in (0, 1) and l not in (2, -2):
            ratio = _frac(cf_eval((p, -2, m, -l)))
            check("lemma_3.5", abs(ratio) >= Fraction(9, 4) and abs(F) >= 4 and abs(D) >= 9, t)

        if is_type_k_right(t):
            check("theorem_3.6[type K has left form]", canonicalize(HandlebodyKnot.right(*t)).side is Side.LEFT, t)
            continue
        slopes = type_m_slopes(l, m, n, p)
        ra, rb = _frac(slopes.r_a), _frac(slopes.r_b)
        check("corollary_4.8[r_a≠r_b]", ra != rb, t)
        if n != 0:
            if n != 1:
                check("lemma_5.1[n∉{0,1}]", abs(ra) >= Fraction(14, 3), t)
            else:
                check("lemma_5.1[n=1]", abs(ra) >= Fraction(8, 3), t)
        if p != 0:
            if p != 1:
                check("lemma_5.1[p∉{0,1}]", abs(ra) >= Fraction(41, 3), t)
                check("lemma_5.2[p∉{0,1}]", abs(rb) <= Fraction(7, 9), t)
            else:
                check("lemma_5.1[p=1]", abs(ra) >= Fraction(8, 3), t)
                check("lemma_5.2[p=1]", Fraction(7, 5) <= rb <= Fraction(7, 2), t)
        trb = _frac(tilde_rb(l, m))
        if abs(m) >= 2:
            check("lemma_5.3[|m|≥2]", abs(trb) <= Fraction(3, 5), t)
        elif m == 1:
            check("lemma_5.3[m=1]", Fraction(3, 4) <= trb <= Fraction(3, 2), t)
        else:
            check("lemma_5.3[m=-1]", Fraction(-3, 2) <= trb <= Fraction(-3, 4), t)

    census_window = range(-bound - 3, bound + 4)
    for m, n, p in _left_triples(bound):
        inst = ("L", m, n, p)
        rc = _frac(type_k_slopes(m, n, p).r_c)
        if p not in (0, 1):
            check("lemma_5.5[p∉{0,1}]", abs(rc) >= Fraction(16, 3), inst)
        if n not in (0, 1):
            check("lemma_5.5[n∉{0,1}]", abs(rc) <= Fraction(4, 5), inst)
        if p == 1 or n == 1:
            check("lemma_5.5[p=1 or n=1]", Fraction(4, 3) <= rc <= Fraction(8, 3), inst)
        # A_l is type 3-2 exactly when (l, m, n, p) is not admissible
        inadmissible = frozenset(x for x in census_window if not is_valid(x, m, n, p))
        check("lemma_3.7[census]", inadmissible == type32_indices(m, n, p), inst)
    return check.report(bound, started)


# -- oracles ------------------------------------------------------------------

R = RationalTangle

# name -> (parameters the identity depends on, (l, m, n, p) -> (lhs, rhs))
_TANGLE_IDENTITIES: dict[str, tuple[str, Callable[..., tuple[RationalTangle, RationalTangle]]]] = {
    "mirror C (p=0)": ("mn", lambda l, m, n, p: (R(n, -2, 1 - m, -2, 1), R(n - 1, 2, -m - 1, 2, 0))),
    "mirror B (n=0)": ("lmp", lambda l, m, n, p: (R(-p, 2, -m, l), R(1 - p, -2, 1 - m, l))),
    "mirror C (n=0)": ("m", lambda l, m, n, p: (R(1 - m, -2, 1), R(-m, 2, 0))),
    "rotation C": ("m", lambda l, m, n, p: (R(0, 2, -m, 2, 0), R(-m, 2, 0))),
    "flip A": ("l", lambda l, m, n, p: (R(1, -l), R(-l + 1))),
}


def tangle_identities(m: int, n: int, p: int, l: int) -> dict[str, tuple[RationalTangle, RationalTangle]]:
    """Pairs of tangles that the identities assert to be equal."""
    return {name: build(l, m, n, p) for name, (_, build) in _TANGLE_IDENTITIES.items()}


def verify_tangle_identities(bound: int) -> Check:
    """Every identity over all of its own parameters in ``[-bound, bound]``,
    plus the two-twist rewrite at an interior position of length-4 tangles."""
    check = Check("lemma_3.1[tangle identities]")
    rng = range(-bound, bound + 1)
    for name, (names, build) in _TANGLE_IDENTITIES.items():
        for values in itertools.product(rng, repeat=len(names)):
            env = dict.fromkeys("lmnp", 0) | dict(zip(names, values))
            lhs, rhs = build(**env)
            check.record(lhs.fraction == rhs.fraction, (name, *values))
    for a, c, d in itertools.product(rng, repeat=3):
        for sign in (1, -1):
            for t, index in ((RationalTangle(a, c, 2 * sign, d), 2), (RationalTangle(c, 2 * sign, d, a), 1)):
                check.record(rewrite_two_twist(t, index, sign).fraction == t.fraction, ("two-twist", *t.coeffs))
    return check


def verify_oracles(bound: int = DEFAULT_BOUND) -> VerificationReport:
    _require_bound(bound)
    started = time.perf_counter()
    check = _Checks()
    for t in box_tuples(bound):
        l, m, n, p = t
        F, D = phi(m, p), delta(l, m, p)
        A, B, C = em_tangles(l, m, n, p)
        r_ha, r_hb = _horizontal(l, m, n, p)
        r_va, r_vb = vertical_slopes(l, m, n, p)
        d_ha, d_va, d_hb, d_vb = em_determinants(l, m, n, p)
        det_ha, det_hb = montesinos_det("h_A", l, m, n, p), montesinos_det("h_B", l, m, n, p)

        # slopes modulo Z from the reversed continued fractions
        check("lemma_2.1[r_h^A]", mod_one(r_ha) == slope_mod_one(A, Direction.HORIZONTAL), t)
        check("lemma_2.1[r_h^B]", mod_one(r_hb) == slope_mod_one(B, Direction.HORIZONTAL), t)
        check("lemma_2.1[r_v^A]", mod_one(r_va) == slope_mod_one(A, Direction.VERTICAL), t)
        check("lemma_2.1[r_v^B]", mod_one(r_vb) == slope_mod_one(B, Direction.VERTICAL), t)

        # numerators are determinants
        check("lemma_2.2[d_h^A]", abs(r_ha.num) == abs(det_ha) == abs(d_ha), t)
        check("lemma_2.2[d_h^B]", abs(r_hb.num) == abs(det_hb) == abs(d_hb), t)
        check("lemma_2.2[d_v^A]", abs(r_va.num) == C.fraction.den * B.fraction.den == abs(d_va), t)
        check("lemma_2.2[d_v^B]", abs(r_vb.num) == C.fraction.den == abs(d_vb), t)
        check(
            "lemma_4.4[matrix rows]",
            ProjRat(D, F) == B.fraction
            and ProjRat(1 - 2 * n, 2 * m * n - m - n + 1) == c_prime(m, n).fraction
            and ProjRat(2 * p - 1, F) == b_prime(m, p).fraction,
            t,
        )

        # denominators
        check("corollary_4.3[beta_h^A=l]", r_ha.den == abs(l), t)
        check("corollary_4.3[beta_v^A=1]", r_va.den == 1, t)
        check("corollary_4.3[beta_h^B=Δ]", r_hb.den == abs(D), t)
        check("corollary_4.3[beta_v^B=Φ]", r_vb.den == abs(F), t)

        # specialised formulas agree with the generic ones
        if not is_type_k_right(t):
            check("theorem_4.8[specialisation]", type_m_slopes(l, m, n, p) == type_m_slopes_generic(l, m, n, p), t)
        check("theorem_4.9[specialisation]", slope_pair_specialized(m, n, p) == (r_va, r_vb), t)

        # characteristic slope of the type-K knot V_L(*, m, n, p)
        r_c = type_k_slopes(m, n, p).r_c
        check("lemma_5.4[r_c mod Z]", mod_one(r_c) == rc_mod_one(m, n), t)
        check("lemma_5.4[r_c numerator]", abs(r_c.num) == abs(montesinos_det("rc_numerator", l, m, n, p)) == 4 * abs(F), t)
        check("lemma_5.4[r_c denominator]", r_c.den == C.fraction.den, t)
        alt = cf_eval((m, -2, p)) if n == 0 else cf_eval((-2, 1 - m, -2, n, 0))
        scale = 4 if n == 0 else 1
        check("lemma_5.5[r_c continued fraction]", r_c == ProjRat(scale * alt.num, alt.den), t)
        if p != 0 and not is_type_k_right(t):
            check("lemma_5.2[r_b continued fraction]", r_hb == cf_eval((-l, m, -2, p, 0)), t)

        # mirror images negate the slope data
        for side in (Side.RIGHT, Side.LEFT):
            hk = HandlebodyKnot(side, t)
            slopes = characteristic_slopes(hk)
            for form in mirror_forms(t):
                check("lemma_3.1[mirror negates slopes]", characteristic_slopes(mirror(hk, form)) == slopes.negated(), (side.value, *t, form))

    check_list = check.report(bound, started)
    check_list.checks.append(verify_tangle_identities(max(bound, 10)))
    check_list.elapsed = time.perf_counter() - started
    return check_list


def type_m_slopes_generic(l: int, m: int, n: int, p: int):
    from hbknot.invariants import TypeM, horizontal_slopes

    return TypeM(*horizontal_slopes(l, m, n, p))


# -- collisions ---------------------------------------------------------------

def collision_search(bound: int = DEFAULT_COLLISION_BOUND, margin: int = 2) -> VerificationReport:
    """Equal slope data must mean connected by the identity rewrites.

    The rewrite closure is computed in the larger box ``bound + margin`` so
    that chains leaving the search box are not cut.
    """
    _require_bound(bound)
    started = time.perf_counter()
    closure = RewriteClosure(bound + margin).build()
    check = _Checks()
    check.declare("theorem_5.6/5.7[slopes determine knot]", "rewrites preserve slopes")

    groups: dict[tuple, list[HandlebodyKnot]] = defaultdict(list)
    for hk in box_knots(bound):
        slopes = characteristic_slopes(hk)
        groups[slopes.key].append(hk)
        for name, image, mirrored in neighbours(hk, bound + margin):
            expected = slopes.negated() if mirrored else slopes
            check("rewrites preserve slopes", characteristic_slopes(image).key == expected.key, (str(hk), name))

    for key in sorted(groups, key=repr):
        members = groups[key]
        components = {closure.component(hk) for hk in members}
        instance = tuple(str(hk) for hk in members)
        check("theorem_5.6/5.7[slopes determine knot]", len(components) == 1, instance)
    return check.report(bound, started)


SUITES: dict[str, Callable[[int], VerificationReport]] = {
    "lemmas": verify_lemmas,
    "oracles": verify_oracles,
    "collisions": collision_search,
}


def run_suite(suite: str, bound: int | None = None) -> list[VerificationReport]:
    names: Iterable[str] = SUITES if suite == "all" else [suite]
    reports = []
    for name in names:
        if name not in SUITES:
            raise ValueError(f"unknown suite {name!r}")
        if bound is None:
            b = DEFAULT_COLLISION_BOUND if name == "collisions" else DEFAULT_BOUND
        else:
            b = bound
        reports.append(SUITES[name](b))
    return reports
