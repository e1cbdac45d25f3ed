import pytest
from hypothesis import given, strategies as st

from hbknot.projrat import INF, ProjRat, add_int, cf_eval, invert, mod_one, negate
from conftest import nested_cf

ints = st.integers(-10**6, 10**6)
finite = st.builds(lambda a, b: ProjRat(a, b), ints, ints.filter(lambda b: b != 0))
projective = st.one_of(finite, st.just(INF))


@pytest.mark.parametrize(
    "seq, expected",
    [
        ([1, -3], ProjRat(-2, 1)),
        ([], INF),
        ([-1, 2, 0, 2, 0], ProjRat(1, 3)),
        ([3, 0], ProjRat(1, 3)),
        ([7], ProjRat(7, 1)),
    ],
)
def test_cf_eval_examples(seq, expected):
    assert cf_eval(seq) == expected


def test_canonical_form():
    assert ProjRat(4, -6) == ProjRat(-2, 3)
    assert (ProjRat(4, -6).num, ProjRat(4, -6).den) == (-2, 3)
    assert ProjRat(-5, 0) == INF and ProjRat(-5, 0).num == 1
    with pytest.raises(ValueError):
        ProjRat(0, 0)


def test_invert_negate_add_examples():
    assert invert(ProjRat(1, 3)) == ProjRat(3, 1)
    assert invert(INF) == ProjRat(0, 1)
    assert invert(ProjRat(0, 1)) == INF
    assert invert(ProjRat(-2, 7)) == ProjRat(-7, 2)
    assert negate(ProjRat(4, 3)) == ProjRat(-4, 3)
    assert negate(INF) == INF
    assert add_int(ProjRat(1, 3), 2) == ProjRat(7, 3)
    assert add_int(INF, 5) == INF


def test_mod_one_examples():
    assert mod_one(ProjRat(29, 3)) == ProjRat(2, 3)
    assert mod_one(ProjRat(-1, 3)) == ProjRat(2, 3)
    assert mod_one(ProjRat(7, 1)) == ProjRat(0, 1)
    with pytest.raises(ValueError):
        mod_one(INF)


def test_no_overflow_on_huge_values():
    seq = [10**30, -(10**30), 3] * 20
    assert cf_eval(seq).to_fraction() == nested_cf(seq)


@given(st.lists(st.integers(-50, 50), max_size=12))
def test_cf_eval_matches_nested_reference(seq):
    ref = nested_cf(seq)
    got = cf_eval(seq)
    assert (got == INF) if ref is None else (got == ProjRat.of(ref))


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12))
def test_cf_eval_fold(seq):
    assert cf_eval(seq) == add_int(invert(cf_eval(seq[:-1])), seq[-1])


@given(finite, finite)
def test_mod_one_detects_integer_difference(x, y):
    diff = x.to_fraction() - y.to_fraction()
    assert (mod_one(x) == mod_one(y)) == (diff.denominator == 1)


@given(finite)
def test_mod_one_range(x):
    r = mod_one(x).to_fraction()
    assert 0 <= r < 1 and mod_one(x).den == x.den


@given(projective)
def test_involutions_and_canonical(x):
    assert invert(invert(x)) == x
    assert negate(negate(x)) == x
    for y in (x, invert(x), negate(x), add_int(x, 3)):
        assert y.den >= 0
        assert (y.den != 0) or y.num == 1
        from math import gcd
        assert gcd(y.num, y.den) == 1


def test_json_round_trip():
    for x in (ProjRat(-29, 3), INF, ProjRat(0, 1)):
        assert ProjRat.from_json(x.to_json()) == x
