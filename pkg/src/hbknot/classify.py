"""JSJ type, symmetry group and the census of essential annuli."""
from __future__ import annotations

import enum
from dataclasses import dataclass

from hbknot.emknot import HandlebodyKnot, Side, canonicalize, is_type_k_right
from hbknot.invariants import TypeK, characteristic_slopes


class JSJType(enum.Enum):
    M = "M"
    K = "K"


class MCG(enum.Enum):
    Z2 = "Z2"
    Z2xZ2 = "Z2xZ2"


@dataclass(frozen=True)
class Classification:
    jsj_type: JSJType
    mcg: MCG
    mcg_positive_equal: bool = True


@dataclass(frozen=True)
class AnnulusCensus:
    """Essential annuli that are not of type 4-1.

    For type K the separating non-characteristic annuli A_l are indexed by
    the integers; ``type32_indices`` are those of type 3-2 and every other
    index is type 4-1.  For type M there are only finitely many annuli.
    """

    type32_indices: frozenset[int]
    noncharacteristic_non41_count: int
    has_type33: bool
    characteristic_count: int
    type41_count: int | None  # None: infinitely many


def jsj_type(hk: HandlebodyKnot) -> JSJType:
    if hk.side is Side.LEFT or is_type_k_right(hk.params):
        return JSJType.K
    return JSJType.M


def mcg(hk: HandlebodyKnot) -> MCG:
    slopes = characteristic_slopes(hk)
    if isinstance(slopes, TypeK) and slopes.r1 == slopes.r2:
        return MCG.Z2xZ2
    return MCG.Z2


def classify(hk: HandlebodyKnot) -> Classification:
    return Classification(jsj_type=jsj_type(hk), mcg=mcg(hk))


def type32_indices(m: int, n: int, p: int) -> frozenset[int]:
    """Indices l with A_l of type 3-2 for V_L(*, m, n, p)."""
    indices = {0, 1, -1}
    if (m, p) == (1, 0) or (m, n, p) == (2, 0, 1):
        indices.add(2)
    if (m, p) == (-1, 0):
        indices.add(-2)
    return frozenset(indices)


def annulus_census(hk: HandlebodyKnot) -> AnnulusCensus:
    if jsj_type(hk) is JSJType.M:
        return AnnulusCensus(
            type32_indices=frozenset(),
            noncharacteristic_non41_count=0,
            has_type33=False,
            characteristic_count=2,
            type41_count=1,
        )
    _, m, n, p = canonicalize(hk).params
    indices = type32_indices(m, n, p)
    return AnnulusCensus(
        type32_indices=indices,
        noncharacteristic_non41_count=len(indices) + 1,
        has_type33=True,
        characteristic_count=1,
        type41_count=None,
    )
