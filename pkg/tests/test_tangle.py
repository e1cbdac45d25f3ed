import pytest
from hypothesis import given, strategies as st

from hbknot.projrat import ProjRat
from hbknot.tangle import (
    RationalTangle as R,
    b_prime,
    c_prime,
    em_tangles,
    equivalent,
    fraction,
    parse_tangle,
    rewrite_two_twist,
)
from conftest import nested_cf


def test_fraction_examples():
    assert fraction(R(3)) == ProjRat(3, 1)
    assert fraction(R(1, -3)) == ProjRat(-2, 1)
    assert fraction(R(-1, 2, 0, 2, 0)) == ProjRat(1, 3)


def test_equivalent_examples():
    assert equivalent(R(1, -3), R(-2))
    assert equivalent(R(-1, 2, 0, 2, 0), R(3, 0))
    assert not equivalent(R(2), R(-2))


def test_rewrite_examples():
    # R(n,-2,1-m,-2,1) = R(n-1,2,-m-1,2,0) at (m, n) = (1, 1), both 2/3
    lhs = R(1, -2, 0, -2, 1)
    step = rewrite_two_twist(rewrite_two_twist(lhs, 1, -1), 3, -1)
    assert step == R(0, 2, -2, 2, 0)
    assert fraction(lhs) == fraction(step) == ProjRat.of(nested_cf([1, -2, 0, -2, 1]))
    assert fraction(lhs) == ProjRat(2, 3)

    assert rewrite_two_twist(R(0, 2, 0), 1, 1) == R(1, -2, 1)
    assert fraction(R(0, 2, 0)) == fraction(R(1, -2, 1)) == ProjRat(0, 1)
    assert rewrite_two_twist(rewrite_two_twist(R(0, 2, 0), 1, 1), 1, -1) == R(0, 2, 0)


def test_rewrite_preconditions():
    with pytest.raises(ValueError):
        rewrite_two_twist(R(0, 3, 0), 1, 1)
    with pytest.raises(ValueError):
        rewrite_two_twist(R(2, 0, 0), 0, 1)
    with pytest.raises(ValueError):
        rewrite_two_twist(R(0, 2, 0), 1, -1)


@st.composite
def with_two_twist(draw):
    coeffs = draw(st.lists(st.integers(-9, 9), min_size=3, max_size=9))
    index = draw(st.integers(1, len(coeffs) - 2))
    sign = draw(st.sampled_from([1, -1]))
    coeffs[index] = 2 * sign
    return R(coeffs), index, sign


@given(with_two_twist())
def test_rewrite_preserves_fraction(case):
    t, index, sign = case
    image = rewrite_two_twist(t, index, sign)
    assert fraction(image) == fraction(t)
    assert rewrite_two_twist(image, index, -sign) == t


def test_em_tangles():
    assert em_tangles(3, 1, 1, 0) == (R(3), R(0, -2, 1, -3), R(-1, 2, 0, 2, 0))
    assert em_tangles(0, 0, 0, 0) == (R(0), R(0, -2, 0, 0), R(0, 2, -1, 2, 0))
    # the (3,1,1,0) picture: B = R(-2) and C = R(3,0)
    _, B, C = em_tangles(3, 1, 1, 0)
    assert equivalent(B, R(-2))
    assert equivalent(C, R(3, 0))
    assert b_prime(2, 5) == R(5, -2, 2, 0)
    assert c_prime(2, 5) == R(5, -2, -1, 0)


def test_parse_tangle():
    assert parse_tangle("R(1, -3)") == R(1, -3)
    assert parse_tangle(" R( -1,2 ,0,2,0 ) ") == R(-1, 2, 0, 2, 0)
    assert parse_tangle("R()") == R()
    for bad in ("(1,2)", "R(1,,2)", "R(a)"):
        with pytest.raises(ValueError):
            parse_tangle(bad)
