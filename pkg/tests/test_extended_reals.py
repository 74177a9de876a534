from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rectdist.extended_reals import (
    NEG_INF,
    POS_INF,
    ZERO,
    DimensionMismatch,
    ExtReal,
    UndefinedArithmetic,
    add,
    ext_abs,
    halve,
    max_norm_dist,
    parse_ext,
    sub,
)

X = ExtReal

finite = st.fractions(max_denominator=50).map(ExtReal)
extreal = st.one_of(finite, st.sampled_from([POS_INF, NEG_INF]))


def test_add_examples():
    assert add(X(3), POS_INF) == POS_INF
    assert add(X("1/2"), X("1/3")) == X("5/6")
    assert add(NEG_INF, NEG_INF) == NEG_INF
    assert add(POS_INF, POS_INF) == POS_INF
    assert add(NEG_INF, X(-7)) == NEG_INF


@pytest.mark.parametrize("x, y", [(POS_INF, NEG_INF), (NEG_INF, POS_INF)])
def test_mixed_infinite_sum_is_undefined(x, y):
    with pytest.raises(UndefinedArithmetic):
        add(x, y)
    with pytest.raises(UndefinedArithmetic):
        x + y


def test_sub_examples():
    assert sub(POS_INF, POS_INF) == ZERO
    assert sub(NEG_INF, NEG_INF) == ZERO
    assert sub(X(5), X(2)) == X(3)
    assert sub(NEG_INF, X(7)) == NEG_INF
    assert sub(POS_INF, X(7)) == POS_INF
    assert sub(X(7), POS_INF) == NEG_INF
    assert sub(X(7), NEG_INF) == POS_INF
    assert sub(POS_INF, NEG_INF) == POS_INF
    assert sub(NEG_INF, POS_INF) == NEG_INF


def test_abs_and_halve():
    assert ext_abs(NEG_INF) == POS_INF
    assert ext_abs(X("-3/4")) == X("3/4")
    assert ext_abs(ZERO) == ZERO
    assert halve(POS_INF) == POS_INF
    assert halve(NEG_INF) == NEG_INF
    assert halve(X(3)) == X("3/2")
    assert halve(ZERO) == ZERO


def test_max_norm_dist_examples():
    assert max_norm_dist((POS_INF, X(1)), (POS_INF, X(3))) == X(2)
    assert max_norm_dist((X(0), X(0)), (X(0), X(0))) == ZERO
    assert max_norm_dist((NEG_INF, X(0)), (X(2), X(0))) == POS_INF
    with pytest.raises(DimensionMismatch):
        max_norm_dist((X(0),), (X(0), X(1)))


def test_order_and_rendering():
    assert NEG_INF < X(-10**9) < X(0) < X(10**9) < POS_INF
    assert sorted([POS_INF, X(1), NEG_INF, X("1/2")]) == [NEG_INF, X("1/2"), X(1), POS_INF]
    assert str(X(Fraction(6, 4))) == "3/2"
    assert str(X(4)) == "4"
    assert str(POS_INF) == "inf" and str(NEG_INF) == "-inf"
    assert X(2) == 2 and X("1/2") == Fraction(1, 2)


@pytest.mark.parametrize(
    "text, value",
    [("0.25", X("1/4")), ("0.1", X(Fraction(1, 10))), ("-7/14", X("-1/2")), ("inf", POS_INF),
     ("-inf", NEG_INF), ("+inf", POS_INF), ("12", X(12)), ("1e-2", X(Fraction(1, 100)))],
)
def test_parse(text, value):
    assert parse_ext(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1/0", "1/2/3", "nan", "--1"])
def test_parse_rejects(text):
    with pytest.raises(ValueError):
        parse_ext(text)


def test_floats_are_refused():
    with pytest.raises(TypeError):
        ExtReal(0.5)


@given(extreal)
def test_self_difference_is_zero(x):
    assert sub(x, x) == ZERO


@given(extreal, extreal)
def test_add_commutes_where_defined(x, y):
    try:
        left = add(x, y)
    except UndefinedArithmetic:
        with pytest.raises(UndefinedArithmetic):
            add(y, x)
        return
    assert left == add(y, x)


@given(st.lists(extreal, min_size=1, max_size=4).flatmap(
    lambda u: st.tuples(st.just(u), st.lists(extreal, min_size=len(u), max_size=len(u)))))
def test_max_norm_symmetric_and_zero_iff_equal(uv):
    u, v = uv
    d = max_norm_dist(u, v)
    assert d == max_norm_dist(v, u)
    assert d >= ZERO
    assert (d == ZERO) == (list(u) == list(v))


@given(st.fractions(), st.fractions())
def test_finite_ops_match_fraction_arithmetic(p, q):
    assert add(X(p), X(q)).fraction == p + q
    assert sub(X(p), X(q)).fraction == p - q
    assert ext_abs(X(p)).fraction == abs(p)
    assert halve(X(p)).fraction == p / 2


@given(extreal)
def test_parse_roundtrip(x):
    assert parse_ext(str(x)) == x
