"""Eudave-Muñoz parameters (l, m, n, p), their admissibility constraints, the
derived integers Λ, Φ, Δ, and the tangle identities acting on parameters.

A handlebody-knot is a side (right or left) plus parameters.  The isotopy
type of a left knot does not depend on ``l``; the stored ``l`` is a
placeholder that only tangle-level code ever reads.
"""
from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterator, NamedTuple


class ConstraintError(ValueError):
    """Raised when parameters violate the admissibility constraints."""

    def __init__(self, params: tuple[int, int, int, int], clauses: list[str]):
        self.params = params
        self.clauses = clauses
        super().__init__(f"invalid parameters {params}: " + "; ".join(clauses))


class RewriteError(ValueError):
    """Raised when an identity does not apply, or its image is not admissible."""


class Side(enum.Enum):
    RIGHT = "R"
    LEFT = "L"

    @property
    def other(self) -> Side:
        return Side.LEFT if self is Side.RIGHT else Side.RIGHT


class EMParams(NamedTuple):
    l: int
    m: int
    n: int
    p: int


# Clause labels double as the CLI's diagnostics.
CLAUSE_NP = "n·p=0"
CLAUSE_L = "l∉{0,±1}"
CLAUSE_M0 = "m≠0"
CLAUSE_M01 = "m∉{0,1}"
CLAUSE_LM = "(l,m)≠(±2,±1)"
CLAUSE_MN = "(m,n)≠(1,0),(−1,1)"
CLAUSE_LMP = "(l,m,p)≠(2,2,1),(−2,−1,0)"


def check_constraints(l: int, m: int, n: int, p: int) -> list[str]:
    """Return the violated constraint clauses; an empty list means valid.

    When ``n = p = 0`` the ``p = 0`` clause set is used; the two sets agree
    there.
    """
    if n * p != 0:
        return [CLAUSE_NP]
    bad = []
    if l in (0, 1, -1):
        bad.append(CLAUSE_L)
    if p == 0:
        if m == 0:
            bad.append(CLAUSE_M0)
        if (l, m) in ((2, 1), (-2, -1)):
            bad.append(CLAUSE_LM)
        if (m, n) in ((1, 0), (-1, 1)):
            bad.append(CLAUSE_MN)
    else:
        if m in (0, 1):
            bad.append(CLAUSE_M01)
        if (l, m, p) == (2, 2, 1):
            bad.append(CLAUSE_LMP)
    return bad


def is_valid(l: int, m: int, n: int, p: int) -> bool:
    return not check_constraints(l, m, n, p)


def require_valid(params: tuple[int, int, int, int]) -> EMParams:
    params = EMParams(*params)
    bad = check_constraints(*params)
    if bad:
        raise ConstraintError(tuple(params), bad)
    return params


@dataclass(frozen=True)
class DerivedQuantities:
    lam: int
    phi: int
    delta: int
    lam0: int
    phi0: int
    delta0: int


def lam(m: int, n: int) -> int:
    return 4 * m * n - 2 * m + 1


def phi(m: int, p: int) -> int:
    return 2 * p * m - p - m


def delta(l: int, m: int, p: int) -> int:
    return -2 * l * m * p + l * m + l * p + 2 * p - 1


def derived(params: tuple[int, int, int, int]) -> DerivedQuantities:
    l, m, n, p = params
    return DerivedQuantities(
        lam=lam(m, n),
        phi=phi(m, p),
        delta=delta(l, m, p),
        lam0=-2 * m + 1,
        phi0=-m,
        delta0=m * l - 1,
    )


LEFT_PLACEHOLDERS = (3, -3, 2, -2)


def left_placeholder(m: int, n: int, p: int) -> int | None:
    """The ``l`` stored for a left knot given only (m, n, p)."""
    for l in LEFT_PLACEHOLDERS:
        if is_valid(l, m, n, p):
            return l
    return None


@dataclass(frozen=True, eq=False)
class HandlebodyKnot:
    side: Side
    params: EMParams

    def __post_init__(self) -> None:
        object.__setattr__(self, "params", require_valid(self.params))

    @classmethod
    def right(cls, l: int, m: int, n: int, p: int) -> HandlebodyKnot:
        return cls(Side.RIGHT, EMParams(l, m, n, p))

    @classmethod
    def left(cls, m: int, n: int, p: int, l: int | None = None) -> HandlebodyKnot:
        if l is None:
            l = left_placeholder(m, n, p)
            if l is None:
                l = 3  # no placeholder works; let validation name the clause
        return cls(Side.LEFT, EMParams(l, m, n, p))

    @property
    def key(self) -> tuple:
        """Identity of the knot presentation; ``l`` is dropped for left knots."""
        l, m, n, p = self.params
        if self.side is Side.LEFT:
            return ("L", m, n, p)
        return ("R", l, m, n, p)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, HandlebodyKnot):
            return NotImplemented
        return self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __str__(self) -> str:
        l, m, n, p = self.params
        if self.side is Side.LEFT:
            return f"V_L(*,{m},{n},{p})"
        return f"V_R({l},{m},{n},{p})"

    __repr__ = __str__


def _checked(side: Side, params: tuple[int, int, int, int], rule: str) -> HandlebodyKnot:
    bad = check_constraints(*params)
    if bad:
        raise RewriteError(f"{rule} produced non-admissible {tuple(params)}: {'; '.join(bad)}")
    return HandlebodyKnot(side, EMParams(*params))


def mirror_forms(params: tuple[int, int, int, int]) -> list[str]:
    """Which mirror identities apply: 'n' is the p=0 form, 'p' the n=0 form."""
    _, _, n, p = params
    forms = []
    if p == 0:
        forms.append("n")
    if n == 0:
        forms.append("p")
    return forms


def mirror(hk: HandlebodyKnot, form: str | None = None) -> HandlebodyKnot:
    """Parameters of the mirror image, with the same side.

    At ``n = p = 0`` both forms apply and give different (equivalent)
    presentations; ``form`` chooses one, defaulting to the ``p = 0`` form.
    """
    l, m, n, p = hk.params
    forms = mirror_forms(hk.params)
    if form is None:
        form = forms[0]
    if form not in forms:
        raise RewriteError(f"mirror form {form!r} does not apply to {hk}")
    if form == "n":
        image = (-l, -m, 1 - n, 0)
    else:
        image = (-l, 1 - m, 0, 1 - p)
    return _checked(hk.side, image, "mirror")


def horizontal_flip(hk: HandlebodyKnot) -> HandlebodyKnot:
    l, m, n, p = hk.params
    if p != 0 or m not in (1, -1):
        raise RewriteError(f"horizontal flip needs p=0 and m=±1, got {hk}")
    return _checked(hk.side, (-l + m, m, n, 0), "horizontal flip")


def _rotation_images(side: Side, params: tuple[int, int, int, int]) -> Iterator[tuple[str, tuple[int, int, int, int]]]:
    """All rotation-type identities matching ``params``, both directions."""
    l, m, n, p = params
    if p == 0:
        if l == 2:
            yield "rotation", (2, 1 - m, 0, n)
        if l == -2:
            yield "rotation(-2)", (-2, -m, 0, n)
        if (l, m) == (3, 1):
            yield "rotation(3,1)", (-2, -1, 0, n)
        if (l, m) == (-3, -1):
            yield "rotation(-3,-1)", (2, 2, 0, n)
    if n == 0:
        if l == 2:
            yield "rotation^-1", (2, 1 - m, p, 0)
        if l == -2:
            yield "rotation(-2)^-1", (-2, -m, p, 0)
        if (l, m) == (-2, -1):
            yield "rotation(3,1)^-1", (3, 1, p, 0)
        if (l, m) == (2, 2):
            yield "rotation(-3,-1)^-1", (-3, -1, p, 0)


def rotations(hk: HandlebodyKnot) -> list[tuple[str, HandlebodyKnot]]:
    """Every rotation identity applying to ``hk`` as stored."""
    return [
        (name, _checked(hk.side.other, image, name))
        for name, image in _rotation_images(hk.side, hk.params)
    ]


def rotate(hk: HandlebodyKnot) -> HandlebodyKnot:
    """Apply the first matching rotation identity; the side is swapped."""
    found = rotations(hk)
    if not found:
        raise RewriteError(f"no rotation identity matches {hk}")
    return found[0][1]


def left_presentations(hk: HandlebodyKnot) -> list[HandlebodyKnot]:
    """``hk`` with every admissible placeholder ``l`` that a rewrite can use."""
    if hk.side is Side.RIGHT:
        return [hk]
    _, m, n, p = hk.params
    out = [hk]
    for l in (2, -2, 3, -3):
        if l != hk.params.l and is_valid(l, m, n, p):
            out.append(HandlebodyKnot(Side.LEFT, EMParams(l, m, n, p)))
    return out


def identity_moves(hk: HandlebodyKnot) -> list[tuple[str, HandlebodyKnot, bool]]:
    """One-step images under the identities, as ``(name, image, mirrored)``.

    ``mirrored`` is true when the image presents the mirror image of ``hk``.
    Left knots are tried with every placeholder ``l``.
    """
    moves = []
    for form in mirror_forms(hk.params):
        moves.append((f"mirror[{form}]", mirror(hk, form), True))
    for pres in left_presentations(hk):
        l, m, n, p = pres.params
        if p == 0 and m in (1, -1):
            moves.append(("horizontal flip", horizontal_flip(pres), False))
        for name, image in rotations(pres):
            moves.append((name, image, False))
    return moves


def is_type_k_right(params: tuple[int, int, int, int]) -> bool:
    l, m, _, p = params
    return l in (2, -2) or delta(l, m, p) in (2, -2)


def canonicalize(hk: HandlebodyKnot) -> HandlebodyKnot:
    """Type-K knots in left form; type-M and left knots unchanged."""
    if hk.side is Side.LEFT or not is_type_k_right(hk.params):
        return hk
    for _, image in rotations(hk):
        return image
    l, m, n, p = hk.params
    if p == 0 and m in (1, -1):
        for _, image in rotations(horizontal_flip(hk)):
            return image
    # V_R(3,2,0,1) has Δ=-2 with p=1: its mirror is V_R(-3,-1,0,0)
    for form in mirror_forms(hk.params):
        for _, image in rotations(mirror(hk, form)):
            return mirror(image)
    raise AssertionError(f"type-K right knot {hk} matches no identity")


_SPEC_RE = re.compile(r"^([RL]):(.*)$")


def parse_knot_spec(text: str) -> HandlebodyKnot:
    """Parse ``"R:l,m,n,p"`` or ``"L:m,n,p"``.

    Raises ``ValueError`` on malformed text and ``ConstraintError`` naming
    the violated clauses on inadmissible parameters.
    """
    compact = "".join(text.split())
    match = _SPEC_RE.match(compact)
    if match is None:
        raise ValueError(f"knot spec must look like R:l,m,n,p or L:m,n,p, got {text!r}")
    side, body = match.groups()
    try:
        values = [int(tok) for tok in body.split(",")]
    except ValueError:
        raise ValueError(f"bad integers in knot spec {text!r}") from None
    if side == "R":
        if len(values) != 4:
            raise ValueError(f"right knot spec needs 4 integers, got {text!r}")
        return HandlebodyKnot.right(*values)
    if len(values) != 3:
        raise ValueError(f"left knot spec needs 3 integers (l is omitted), got {text!r}")
    return HandlebodyKnot.left(*values)


def format_knot_spec(hk: HandlebodyKnot) -> str:
    l, m, n, p = hk.params
    if hk.side is Side.LEFT:
        return f"L:{m},{n},{p}"
    return f"R:{l},{m},{n},{p}"
