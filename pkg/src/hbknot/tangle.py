"""Rational tangles R(a1, ..., an), compared through their fractions."""
from __future__ import annotations

import re
from dataclasses import dataclass

from hbknot.projrat import ProjRat, cf_eval


@dataclass(frozen=True)
class RationalTangle:
    coeffs: tuple[int, ...]

    def __init__(self, *coeffs: int) -> None:
        if len(coeffs) == 1 and not isinstance(coeffs[0], int):
            coeffs = tuple(coeffs[0])
        object.__setattr__(self, "coeffs", tuple(map(int, coeffs)))

    def __len__(self) -> int:
        return len(self.coeffs)

    def __str__(self) -> str:
        return "R(" + ",".join(str(a) for a in self.coeffs) + ")"

    @property
    def fraction(self) -> ProjRat:
        return fraction(self)


def fraction(t: RationalTangle) -> ProjRat:
    return cf_eval(t.coeffs)


def equivalent(t1: RationalTangle, t2: RationalTangle) -> bool:
    return fraction(t1) == fraction(t2)


def rewrite_two_twist(t: RationalTangle, index: int, sign: int) -> RationalTangle:
    """Apply ``R(..., c, ±2, d, ...) = R(..., c±1, ∓2, d±1, ...)`` at ``index``.

    ``index`` is 0-based and must have a neighbour on each side; the
    coefficient there must equal ``2 * sign``.
    """
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    a = list(t.coeffs)
    if not 0 < index < len(a) - 1:
        raise ValueError(f"index {index} is not an interior position of {t}")
    if a[index] != 2 * sign:
        raise ValueError(f"coefficient at {index} of {t} is {a[index]}, expected {2 * sign}")
    a[index - 1] += sign
    a[index] = -2 * sign
    a[index + 1] += sign
    return RationalTangle(a)


def em_tangles(l: int, m: int, n: int, p: int) -> tuple[RationalTangle, RationalTangle, RationalTangle]:
    """The three tangles (A, B, C) of the Eudave-Muñoz configuration."""
    return (
        RationalTangle(l),
        RationalTangle(p, -2, m, -l),
        RationalTangle(-n, 2, m - 1, 2, 0),
    )


def b_prime(m: int, p: int) -> RationalTangle:
    return RationalTangle(p, -2, m, 0)


def c_prime(m: int, n: int) -> RationalTangle:
    return RationalTangle(n, -2, 1 - m, 0)


_TANGLE_RE = re.compile(r"^R\((.*)\)$")


def parse_tangle(text: str) -> RationalTangle:
    """Parse ``"R(a1, a2, ...)"``; whitespace is ignored."""
    compact = "".join(text.split())
    match = _TANGLE_RE.match(compact)
    if match is None:
        raise ValueError(f"not a tangle: {text!r}")
    body = match.group(1)
    if not body:
        return RationalTangle()
    try:
        return RationalTangle(int(tok) for tok in body.split(","))
    except ValueError:
        raise ValueError(f"bad tangle coefficients: {text!r}") from None
