import itertools
from fractions import Fraction

import pytest

from hbknot.emknot import HandlebodyKnot, is_type_k_right, is_valid, phi
from hbknot.invariants import (
    Direction,
    TypeK,
    TypeM,
    characteristic_slopes,
    det,
    em_determinants,
    horizontal_slopes,
    montesinos_det,
    montesinos_matrix,
    slope_mod_one,
    tangle_slope_records,
    tilde_rb,
    vertical_slopes,
)
from hbknot.projrat import ProjRat, mod_one
from hbknot.tangle import RationalTangle

R, L = HandlebodyKnot.right, HandlebodyKnot.left
BOX = range(-5, 6)
VALID = [t for t in itertools.product(BOX, repeat=4) if is_valid(*t)]


def gauss_det(matrix):
    """Determinant by Fraction row reduction; independent of cofactor expansion."""
    a = [[Fraction(x) for x in row] for row in matrix]
    size, sign, result = len(a), 1, Fraction(1)
    for col in range(size):
        pivot = next((r for r in range(col, size) if a[r][col] != 0), None)
        if pivot is None:
            return 0
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            sign = -sign
        result *= a[col][col]
        for r in range(col + 1, size):
            factor = a[r][col] / a[col][col]
            a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return int(sign * result)


def test_slope_mod_one_examples():
    assert slope_mod_one(RationalTangle(3), Direction.HORIZONTAL) == ProjRat(2, 3)
    assert slope_mod_one(RationalTangle(3), Direction.VERTICAL) == ProjRat(0, 1)
    # B at (3,1,1,0), vertical: [1,-2,0]^-1 = -1; (2m-1)/Φ = -1
    got = slope_mod_one(RationalTangle(0, -2, 1, -3), Direction.VERTICAL)
    assert got == mod_one(ProjRat(2 * 1 - 1, phi(1, 0))) == ProjRat(0, 1)
    with pytest.raises(ValueError):
        slope_mod_one(RationalTangle(), Direction.HORIZONTAL)


def test_em_determinants_examples():
    assert em_determinants(3, 1, 1, 0) == (8, -3, 7, 3)


def test_montesinos_det_examples():
    assert montesinos_det("h_A", 3, 1, 1, 0) == 8
    assert montesinos_det("h_B", 3, 1, 1, 0) == 7
    with pytest.raises(ValueError):
        montesinos_det("nope", 3, 1, 1, 0)


def test_cofactor_det_matches_row_reduction():
    for t in itertools.product(range(-4, 5), repeat=4):
        for kind in ("h_A", "h_B", "rc_numerator"):
            matrix = montesinos_matrix(kind, *t)
            assert det(matrix) == gauss_det(matrix)


def test_montesinos_dets_match_closed_forms_everywhere():
    # not only admissible tuples: the closed forms are polynomial identities (n·p = 0)
    for l, m, k, s in itertools.product(range(-4, 5), repeat=4):
        for n, p in ((k, 0), (0, s)):
            d_ha, _, d_hb, _ = em_determinants(l, m, n, p)
            assert montesinos_det("h_A", l, m, n, p) == d_ha
            assert montesinos_det("h_B", l, m, n, p) == d_hb
            assert montesinos_det("rc_numerator", l, m, n, p) == 4 * phi(m, p)


def test_horizontal_slopes_examples():
    r_ha, _ = horizontal_slopes(3, 2, 1, 0)
    assert r_ha == ProjRat(29, 3)
    _, r_hb = horizontal_slopes(3, 2, 0, 2)
    assert r_hb == ProjRat(7, 9)
    assert mod_one(r_ha) == mod_one(ProjRat(-1, 3))
    with pytest.raises(ValueError):
        horizontal_slopes(3, 1, 1, 0)  # Δ = 2
    with pytest.raises(ValueError):
        horizontal_slopes(2, 3, 1, 0)  # l = 2


def test_vertical_slopes_examples():
    assert vertical_slopes(3, 1, 1, 0)[0] == ProjRat(3, 1)
    assert vertical_slopes(3, -1, 0, 2)[1] == ProjRat(3, 5)
    assert vertical_slopes(3, 2, 0, 1) == (ProjRat(3, 1), ProjRat(3, 1))


def test_characteristic_slopes_examples():
    assert characteristic_slopes(R(3, 2, 1, 0)) == TypeM(ProjRat(29, 3), ProjRat(13, 5))
    assert characteristic_slopes(L(1, 1, 0)) == TypeK(ProjRat(3, 1), ProjRat(3, 1), ProjRat(4, 3))
    for p in range(-5, 6):
        assert characteristic_slopes(L(-1, 0, p)).r_c == ProjRat(12 * p - 4, 3)


def test_left_slopes_do_not_depend_on_l():
    for _, m, n, p in VALID:
        values = {characteristic_slopes(L(m, n, p, l=l)) for l in range(-6, 7) if is_valid(l, m, n, p)}
        assert len(values) == 1


def test_type_m_pair_is_distinct_and_reduced():
    for t in VALID:
        if not is_type_k_right(t):
            s = characteristic_slopes(R(*t))
            assert s.r_a != s.r_b


def test_mirror_negates_slopes():
    from hbknot.emknot import Side, mirror, mirror_forms

    for t in VALID:
        for side in Side:
            hk = HandlebodyKnot(side, t)
            for form in mirror_forms(t):
                assert characteristic_slopes(mirror(hk, form)) == characteristic_slopes(hk).negated()


def test_tangle_records_satisfy_numerator_and_denominator_invariants():
    for t in VALID:
        rec_a, rec_b = tangle_slope_records(*t)
        for rec in (rec_a, rec_b):
            assert abs(rec.r_h.num) == rec.d_h and abs(rec.r_v.num) == rec.d_v
            assert rec.r_h.den == rec.beta_h and rec.r_v.den == rec.beta_v


def test_tilde_rb():
    for l, m in itertools.product((-4, -3, 3, 4), (-2, -1, 1, 2)):
        assert tilde_rb(l, m) == ProjRat(l, l * m - 1)
