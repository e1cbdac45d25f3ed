"""Projective rationals: Q together with a single point at infinity.

Python integers are unbounded, so nothing here can overflow; the values are
always stored in lowest terms with a non-negative denominator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable


@dataclass(frozen=True, order=False)
class ProjRat:
    """A reduced fraction ``num/den``; ``1/0`` is the point at infinity."""

    num: int
    den: int

    def __post_init__(self) -> None:
        num, den = self.num, self.den
        if num == 0 and den == 0:
            raise ValueError("0/0 is not a projective rational")
        if den == 0:
            num = 1
        else:
            g = gcd(num, den)
            num, den = num // g, den // g
            if den < 0:
                num, den = -num, -den
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def of(cls, value: int | Fraction | ProjRat) -> ProjRat:
        if isinstance(value, ProjRat):
            return value
        value = Fraction(value)
        return cls(value.numerator, value.denominator)

    @property
    def is_inf(self) -> bool:
        return self.den == 0

    def to_fraction(self) -> Fraction:
        if self.is_inf:
            raise ValueError("infinity has no Fraction value")
        return Fraction(self.num, self.den)

    def __neg__(self) -> ProjRat:
        return negate(self)

    def __abs__(self) -> ProjRat:
        return self if self.num >= 0 else negate(self)

    def __str__(self) -> str:
        if self.is_inf:
            return "inf"
        if self.den == 1:
            return str(self.num)
        return f"{self.num}/{self.den}"

    def to_json(self) -> dict[str, int]:
        return {"num": self.num, "den": self.den}

    @classmethod
    def from_json(cls, obj: dict[str, int]) -> ProjRat:
        return cls(int(obj["num"]), int(obj["den"]))


INF = ProjRat(1, 0)
ZERO = ProjRat(0, 1)


def cf_eval(seq: Iterable[int]) -> ProjRat:
    """Evaluate ``[a1, ..., an] = an + 1/(a(n-1) + 1/(... + 1/a1))``.

    The empty sequence evaluates to infinity, so its inverse is 0.
    """
    # (p, q) tracks the value p/q; x -> a + 1/x is (p, q) -> (a*p + q, p)
    p, q = 1, 0
    for a in seq:
        p, q = a * p + q, p
    return ProjRat(p, q)


def invert(x: ProjRat) -> ProjRat:
    return ProjRat(x.den, x.num)


def negate(x: ProjRat) -> ProjRat:
    return x if x.is_inf else ProjRat(-x.num, x.den)


def add_int(x: ProjRat, k: int) -> ProjRat:
    return x if x.is_inf else ProjRat(x.num + k * x.den, x.den)


def mod_one(x: ProjRat) -> ProjRat:
    """Representative of ``x`` modulo the integers, in ``[0, 1)``."""
    if x.is_inf:
        raise ValueError("infinity has no residue modulo Z")
    return ProjRat(x.num % x.den, x.den)


def congruent_mod_one(x: ProjRat, y: ProjRat) -> bool:
    return mod_one(x) == mod_one(y)
