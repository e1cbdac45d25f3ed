"""Equivalence, mirror-equivalence and exterior homeomorphism decisions.

Decisions are made from slope data alone.  The identity rewrites only supply
an informational witness chain, and the closure they generate is what the
collision search in ``hbknot.verify`` checks the decisions against.
"""
from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from hbknot.classify import jsj_type
from hbknot.emknot import HandlebodyKnot, Side, identity_moves, is_valid, mirror
from hbknot.invariants import SlopeData, TypeK, characteristic_slopes
from hbknot.projrat import ProjRat, mod_one, negate


class Reason(enum.Enum):
    TYPE_MISMATCH = "type-mismatch"
    SLOPE_MATCH = "slope-match"
    SLOPE_MISMATCH = "slope-mismatch"


@dataclass(frozen=True)
class EquivalenceVerdict:
    equivalent: bool
    reason: Reason
    witness: tuple[str, ...] | None = None


def slopes_match(s1: SlopeData, s2: SlopeData) -> bool:
    return s1.key == s2.key


def equivalent(hk1: HandlebodyKnot, hk2: HandlebodyKnot, witness: bool = True) -> EquivalenceVerdict:
    if jsj_type(hk1) is not jsj_type(hk2):
        return EquivalenceVerdict(False, Reason.TYPE_MISMATCH)
    if not slopes_match(characteristic_slopes(hk1), characteristic_slopes(hk2)):
        return EquivalenceVerdict(False, Reason.SLOPE_MISMATCH)
    chain = find_rewrite_chain(hk1, hk2) if witness else None
    return EquivalenceVerdict(True, Reason.SLOPE_MATCH, chain)


def mirror_equivalent(hk1: HandlebodyKnot, hk2: HandlebodyKnot, witness: bool = True) -> EquivalenceVerdict:
    """Whether the mirror image of ``hk1`` is equivalent to ``hk2``."""
    return equivalent(mirror(hk1), hk2, witness=witness)


def exteriors_homeomorphic(hk1: HandlebodyKnot, hk2: HandlebodyKnot) -> bool:
    """Type K only: characteristic slopes agree modulo Z and up to sign."""
    s1, s2 = characteristic_slopes(hk1), characteristic_slopes(hk2)
    if not (isinstance(s1, TypeK) and isinstance(s2, TypeK)):
        raise ValueError("exterior homeomorphism is only decided for type-K knots")
    r = mod_one(s1.r_c)
    return r == mod_one(s2.r_c) or r == mod_one(negate(s2.r_c))


@dataclass(frozen=True)
class FamilyMember:
    knot: HandlebodyKnot
    r_c: ProjRat


@dataclass(frozen=True)
class FamilyReport:
    m: int
    members: tuple[FamilyMember, ...]
    pairwise_inequivalent: bool
    exteriors_homeomorphic: bool


def enumerate_family(m: int, p_range: Iterable[int]) -> FamilyReport:
    """The knots V_L(*, m, 0, p): pairwise inequivalent, same exterior."""
    if m in (0, 1):
        raise ValueError(f"the family needs m∉{{0,1}}, got m={m}")
    members = []
    for p in p_range:
        hk = HandlebodyKnot.left(m, 0, p)
        members.append(FamilyMember(hk, characteristic_slopes(hk).r_c))
    inequivalent = all(
        not equivalent(a.knot, b.knot, witness=False).equivalent
        for i, a in enumerate(members) for b in members[i + 1:]
    )
    homeomorphic = all(exteriors_homeomorphic(members[0].knot, b.knot) for b in members[1:])
    return FamilyReport(m, tuple(members), inequivalent, homeomorphic)


# -- rewrite closure ----------------------------------------------------------

def _in_box(hk: HandlebodyKnot, bound: int) -> bool:
    params = hk.params[1:] if hk.side is Side.LEFT else hk.params
    return all(abs(v) <= bound for v in params)


def neighbours(hk: HandlebodyKnot, bound: int) -> list[tuple[str, HandlebodyKnot, bool]]:
    return [move for move in identity_moves(hk) if _in_box(move[1], bound)]


def find_rewrite_chain(
    hk1: HandlebodyKnot, hk2: HandlebodyKnot, max_steps: int = 6, margin: int = 2
) -> tuple[str, ...] | None:
    """Shortest chain of identities taking ``hk1`` to ``hk2`` (not its mirror).

    Best effort: the search stays within ``margin`` of the larger input and
    gives up after ``max_steps``.
    """
    bound = max(max(abs(v) for v in hk.params) for hk in (hk1, hk2)) + margin
    start, goal = (hk1, False), (hk2, False)
    if start == goal:
        return ()
    parents: dict[tuple[HandlebodyKnot, bool], tuple | None] = {start: None}
    frontier = deque([(start, 0)])
    while frontier:
        node, depth = frontier.popleft()
        if depth == max_steps:
            continue
        hk, mirrored = node
        for name, image, flips in neighbours(hk, bound):
            nxt = (image, mirrored ^ flips)
            if nxt in parents:
                continue
            parents[nxt] = (node, f"{name}: {hk} -> {image}")
            if nxt == goal:
                chain = []
                while parents[nxt] is not None:
                    nxt, step = parents[nxt]
                    chain.append(step)
                return tuple(reversed(chain))
            frontier.append((nxt, depth + 1))
    return None


@dataclass
class RewriteClosure:
    """Union-find over (knot, mirrored) for all admissible knots in a box."""

    bound: int
    _parent: dict = field(default_factory=dict, repr=False)

    def _find(self, x):
        parent = self._parent
        root = x
        while parent.setdefault(root, root) != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    def _union(self, a, b) -> None:
        ra, rb = self._find(a), self._find(b)
        if ra != rb:
            # deterministic representative regardless of visiting order
            lo, hi = sorted((ra, rb), key=_node_sort_key)
            self._parent[hi] = lo

    def build(self) -> RewriteClosure:
        for hk in box_knots(self.bound):
            for _, image, flips in neighbours(hk, self.bound):
                for mirrored in (False, True):
                    self._union((hk, mirrored), (image, mirrored ^ flips))
        return self

    def connected(self, hk1: HandlebodyKnot, hk2: HandlebodyKnot) -> bool:
        return self._find((hk1, False)) == self._find((hk2, False))

    def component(self, hk: HandlebodyKnot):
        return self._find((hk, False))


def _node_sort_key(node) -> tuple:
    hk, mirrored = node
    return (hk.key[0], hk.key[1:], mirrored)


def box_tuples(bound: int) -> Iterable[tuple[int, int, int, int]]:
    """Admissible (l, m, n, p) with every entry in [-bound, bound], in a fixed order."""
    rng = range(-bound, bound + 1)
    for l in rng:
        for m in rng:
            for n in rng:
                for p in rng:
                    if n * p == 0 and is_valid(l, m, n, p):
                        yield (l, m, n, p)


def box_knots(bound: int) -> list[HandlebodyKnot]:
    """Every right knot and every distinct left knot with parameters in the box."""
    knots: dict[HandlebodyKnot, None] = {}
    for l, m, n, p in box_tuples(bound):
        knots.setdefault(HandlebodyKnot.right(l, m, n, p))
        knots.setdefault(HandlebodyKnot.left(m, n, p))
    return list(knots)


__all__ = [
    "EquivalenceVerdict",
    "FamilyMember",
    "FamilyReport",
    "Reason",
    "RewriteClosure",
    "box_knots",
    "box_tuples",
    "enumerate_family",
    "equivalent",
    "exteriors_homeomorphic",
    "find_rewrite_chain",
    "mirror_equivalent",
    "slopes_match",
]
