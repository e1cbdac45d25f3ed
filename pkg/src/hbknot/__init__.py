"""Exact slope invariants, symmetry groups and equivalence decisions for
genus-two handlebody-knots induced by Eudave-Muñoz knots K(l, m, n, p)."""

from hbknot.projrat import INF, ProjRat, cf_eval, invert, mod_one
from hbknot.tangle import RationalTangle, em_tangles
from hbknot.emknot import EMParams, HandlebodyKnot, Side, check_constraints, derived
from hbknot.invariants import SlopeData, TypeK, TypeM, characteristic_slopes
from hbknot.classify import annulus_census, classify, jsj_type, mcg
from hbknot.equivalence import equivalent, exteriors_homeomorphic, mirror_equivalent

__all__ = [
    "INF",
    "ProjRat",
    "cf_eval",
    "invert",
    "mod_one",
    "RationalTangle",
    "em_tangles",
    "EMParams",
    "HandlebodyKnot",
    "Side",
    "check_constraints",
    "derived",
    "SlopeData",
    "TypeK",
    "TypeM",
    "characteristic_slopes",
    "annulus_census",
    "classify",
    "jsj_type",
    "mcg",
    "equivalent",
    "exteriors_homeomorphic",
    "mirror_equivalent",
]
