"""Slope invariants of the handlebody-knots.

Closed forms come first; the mod-Z continued-fraction slopes and the
Montesinos determinants below are independent routes to the same numbers and
are what the verification harness compares against.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from hbknot.emknot import (
    HandlebodyKnot,
    Side,
    canonicalize,
    delta,
    is_type_k_right,
    is_valid,
    lam,
    phi,
)
from hbknot.projrat import ProjRat, cf_eval, invert, mod_one, negate
from hbknot.tangle import RationalTangle, em_tangles


class Direction(enum.Enum):
    HORIZONTAL = "h"
    VERTICAL = "v"


@dataclass(frozen=True)
class TypeM:
    r_a: ProjRat
    r_b: ProjRat

    def negated(self) -> TypeM:
        return TypeM(negate(self.r_a), negate(self.r_b))

    @property
    def key(self) -> tuple:
        # the two characteristic annuli are unlabeled
        return ("M", frozenset((self.r_a, self.r_b)))


@dataclass(frozen=True)
class TypeK:
    r1: ProjRat
    r2: ProjRat
    r_c: ProjRat

    def negated(self) -> TypeK:
        return TypeK(negate(self.r1), negate(self.r2), negate(self.r_c))

    @property
    def key(self) -> tuple:
        return ("K", self.r_c)


SlopeData = Union[TypeM, TypeK]


@dataclass(frozen=True)
class TangleSlopeRecord:
    r_h: ProjRat
    r_v: ProjRat
    d_h: int
    d_v: int
    beta_h: int
    beta_v: int


# -- mod-Z oracle -------------------------------------------------------------

def slope_mod_one(t: RationalTangle, direction: Direction) -> ProjRat:
    """Horizontal/vertical slope of ``t`` modulo Z from its reversed fraction.

    r_h ≡ (-1)^n [a_n, ..., a_1]^-1 and r_v ≡ (-1)^n [a_(n-1), ..., a_1]^-1.
    """
    coeffs = t.coeffs
    if direction is Direction.HORIZONTAL:
        if not coeffs:
            raise ValueError("horizontal slope of the empty tangle is undefined")
        inner = coeffs[::-1]
    else:
        inner = coeffs[:-1][::-1]
    value = invert(cf_eval(inner))
    if value.is_inf:
        raise ValueError(f"{direction.name.lower()} slope of {t} is infinite")
    if len(coeffs) % 2:
        value = negate(value)
    return mod_one(value)


def rc_mod_one(m: int, n: int) -> ProjRat:
    """Characteristic slope of a type-K knot modulo Z: -[2, m-1, 2, -n]^-1."""
    return mod_one(negate(invert(cf_eval((2, m - 1, 2, -n)))))


# -- determinant oracle -------------------------------------------------------

def det(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant by cofactor expansion along the first row."""
    size = len(matrix)
    if size == 1:
        return matrix[0][0]
    total = 0
    for j, entry in enumerate(matrix[0]):
        if entry:
            minor = [row[:j] + row[j + 1:] for row in matrix[1:]]
            total += (-1) ** j * entry * det(minor)
    return total


def montesinos_matrix(kind: str, l: int, m: int, n: int, p: int) -> list[list[int]]:
    """Linking matrix of the Montesinos link whose branched cover is the
    surgered manifold; its determinant is the relevant numerator."""
    c_num, c_den = 1 - 2 * n, 2 * m * n - m - n + 1
    if kind == "h_A":
        x_num, x_den = delta(l, m, p), phi(m, p)
    elif kind == "h_B":
        x_num, x_den = l, 1
    elif kind == "rc_numerator":
        x_num, x_den = 2, 1
        c_num, c_den = 2 * p - 1, phi(m, p)
    else:
        raise ValueError(f"unknown determinant kind {kind!r}")
    return [
        [-2, 0, 0, 1],
        [0, x_num, 0, x_den],
        [0, 0, c_num, c_den],
        [1, 1, 1, 0],
    ]


def montesinos_det(kind: str, l: int, m: int, n: int, p: int) -> int:
    return det(montesinos_matrix(kind, l, m, n, p))


def em_determinants(l: int, m: int, n: int, p: int) -> tuple[int, int, int, int]:
    """Closed forms (d_h^A, d_v^A, d_h^B, d_v^B), each up to sign."""
    L, F = lam(m, n), phi(m, p)
    return (-l * L * F + 4 * p * n - 1, L * F, 2 - 4 * n + l * L, L)


# -- closed forms -------------------------------------------------------------

def _horizontal(l: int, m: int, n: int, p: int) -> tuple[ProjRat, ProjRat]:
    L, F = lam(m, n), phi(m, p)
    return ProjRat(-L * F * l - 1, l), ProjRat(2 - 4 * n + l * L, 2 * p - 1 - l * F)


def horizontal_slopes(l: int, m: int, n: int, p: int) -> tuple[ProjRat, ProjRat]:
    """(r_h^A, r_h^B); the signs are only established for l≠±2 and Δ≠±2."""
    if not is_valid(l, m, n, p):
        raise ValueError(f"inadmissible parameters {(l, m, n, p)}")
    if is_type_k_right((l, m, n, p)):
        raise ValueError(f"horizontal slopes need l≠±2 and Δ≠±2, got {(l, m, n, p)}")
    return _horizontal(l, m, n, p)


def vertical_slopes(l: int, m: int, n: int, p: int) -> tuple[ProjRat, ProjRat]:
    """(r_v^A, r_v^B) = (-ΛΦ, -Λ/Φ)."""
    if not is_valid(l, m, n, p):
        raise ValueError(f"inadmissible parameters {(l, m, n, p)}")
    L, F = lam(m, n), phi(m, p)
    return ProjRat(-L * F, 1), ProjRat(-L, F)


def tangle_slope_records(l: int, m: int, n: int, p: int) -> tuple[TangleSlopeRecord, TangleSlopeRecord]:
    """Slopes of A and B with the determinant and denominator magnitudes
    obtained independently of the slope formulas."""
    r_ha, r_hb = _horizontal(l, m, n, p)
    r_va, r_vb = vertical_slopes(l, m, n, p)
    A, B, C = em_tangles(l, m, n, p)
    c_den, b_den = C.fraction.den, B.fraction.den
    rec_a = TangleSlopeRecord(
        r_h=r_ha, r_v=r_va,
        d_h=abs(montesinos_det("h_A", l, m, n, p)), d_v=c_den * b_den,
        beta_h=abs(l), beta_v=1,
    )
    rec_b = TangleSlopeRecord(
        r_h=r_hb, r_v=r_vb,
        d_h=abs(montesinos_det("h_B", l, m, n, p)), d_v=c_den,
        beta_h=abs(delta(l, m, p)), beta_v=abs(phi(m, p)),
    )
    return rec_a, rec_b


def type_m_slopes(l: int, m: int, n: int, p: int) -> TypeM:
    """(r_a, r_b) from the specialised p=0 and n=0 formulas."""
    if p == 0:
        L = lam(m, n)
        return TypeM(ProjRat(l * m * L - 1, l), ProjRat((4 * n - 2) * (l * m - 1) + l, l * m - 1))
    F = phi(m, p)
    return TypeM(ProjRat(l * (2 * m - 1) * F - 1, l), ProjRat(-2 * (l * m - 1) + l, delta(l, m, p)))


def type_k_slopes(m: int, n: int, p: int) -> TypeK:
    """(r1, r2, r_c) of the left knot V_L(*, m, n, p)."""
    L, F = lam(m, n), phi(m, p)
    return TypeK(ProjRat(-L * F, 1), ProjRat(-L, F), ProjRat(-4 * F, L))


def slope_pair_specialized(m: int, n: int, p: int) -> tuple[ProjRat, ProjRat]:
    if p == 0:
        L = lam(m, n)
        return ProjRat(L * m, 1), ProjRat(L, m)
    F = phi(m, p)
    return ProjRat((2 * m - 1) * F, 1), ProjRat(2 * m - 1, F)


def characteristic_slopes(hk: HandlebodyKnot) -> SlopeData:
    """Slopes of the characteristic annuli: TypeM for type-M right knots,
    TypeK (computed on the left form) otherwise."""
    canon = canonicalize(hk)
    l, m, n, p = canon.params
    if canon.side is Side.RIGHT:
        return type_m_slopes(l, m, n, p)
    return type_k_slopes(m, n, p)


def tilde_rb(l: int, m: int) -> ProjRat:
    """Diagnostic [-l, m, 0] = l/(lm-1) used in the r_b estimates."""
    return cf_eval((-l, m, 0))


__all__ = [
    "Direction",
    "SlopeData",
    "TangleSlopeRecord",
    "TypeK",
    "TypeM",
    "characteristic_slopes",
    "det",
    "em_determinants",
    "horizontal_slopes",
    "montesinos_det",
    "montesinos_matrix",
    "rc_mod_one",
    "slope_mod_one",
    "slope_pair_specialized",
    "tangle_slope_records",
    "tilde_rb",
    "type_k_slopes",
    "type_m_slopes",
    "vertical_slopes",
]
