from fractions import Fraction

import pytest

from hbknot import equivalence
from hbknot.emknot import identity_moves as real_identity_moves
from hbknot.emknot import is_type_k_right
from hbknot.equivalence import box_tuples
from hbknot.invariants import type_m_slopes
from hbknot.verify import collision_search, run_suite, verify_lemmas, verify_tangle_identities


def _stable(report):
    out = report.to_json()
    out.pop("elapsed_seconds")
    return out


def test_reports_are_deterministic():
    assert _stable(verify_lemmas(4)) == _stable(verify_lemmas(4))
    assert _stable(collision_search(3)) == _stable(collision_search(3))


def test_bound_below_three_is_rejected():
    for suite in ("lemmas", "oracles", "collisions"):
        with pytest.raises(ValueError):
            run_suite(suite, 2)
    with pytest.raises(ValueError):
        run_suite("nonsense", 4)


def test_small_box_oracles_pass():
    (report,) = run_suite("oracles", 4)
    assert report.passed, [c.name for c in report.checks if not c.passed]


def test_every_declared_check_is_exercised():
    report = verify_lemmas(5)
    assert all(c.instances_tested > 0 for c in report.checks), [
        c.name for c in report.checks if c.instances_tested == 0
    ]


def test_tangle_identities_small():
    assert verify_tangle_identities(4).passed


def test_collision_search_detects_a_missing_identity(monkeypatch):
    def without_flip(hk):
        return [mv for mv in real_identity_moves(hk) if mv[0] != "horizontal flip"]

    monkeypatch.setattr(equivalence, "identity_moves", without_flip)
    report = collision_search(4)
    assert not report.check("theorem_5.6/5.7[slopes determine knot]").passed


def test_collision_search_small_box_passes():
    assert collision_search(4).passed


def test_ra_lower_bound_for_p_outside_01():
    # the sharp lower bound of |r_a| over p∉{0,1} is 35/3, attained at V_R(3,2,0,2);
    # the stated 41/3 is therefore violated and the lemma check reports it
    values = [
        abs(type_m_slopes(*t).r_a.to_fraction())
        for t in box_tuples(8)
        if t[3] not in (0, 1) and not is_type_k_right(t)
    ]
    assert min(values) == Fraction(35, 3)
    assert type_m_slopes(3, 2, 0, 2).r_a.to_fraction() == Fraction(35, 3)
    check = verify_lemmas(8).check("lemma_5.1[p∉{0,1}]")
    assert check.violations and (3, 2, 0, 2) in check.violations
