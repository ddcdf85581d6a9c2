# -*- coding: utf-8 -*-
"""절단 멱급수 산술 테스트"""
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qseries import fps
from qseries.errors import (
    ConstructionError,
    NonIntegralError,
    NotAUnitError,
    NotDivisibleError,
    PrecisionError,
)
from qseries.fps import SeriesBuffer
from qseries.progression import dissect, reassemble

LAWS = settings(max_examples=100, deadline=None)

big_ints = st.integers(min_value=-(2 ** 80), max_value=2 ** 80)
small_fractions = st.fractions(min_value=-50, max_value=50, max_denominator=30)


@st.composite
def int_series(draw, min_size=1, max_size=24, elements=big_ints):
    coeffs = draw(st.lists(elements, min_size=min_size, max_size=max_size))
    return fps.make(coeffs, len(coeffs))


@st.composite
def rational_series(draw, min_size=1, max_size=16):
    coeffs = draw(st.lists(small_fractions, min_size=min_size, max_size=max_size))
    return fps.make(coeffs, len(coeffs))


any_series = st.one_of(int_series(), rational_series())


def naive_product(a, b, n):
    return [sum(a[i] * b[k - i] for i in range(k + 1)) for k in range(n)]


# ---------------------------------------------------------------------------
# 생성자와 기본 연산 예
# ---------------------------------------------------------------------------

def test_make_basic():
    assert fps.make([1], 1).tolist() == [1]
    assert fps.make([0, 1], 2).tolist() == [0, 1]


def test_make_length_mismatch():
    with pytest.raises(ConstructionError):
        fps.make([1, -1], 1)


def test_make_rejects_float():
    with pytest.raises(ConstructionError):
        fps.make([1.5], 1)


def test_make_accepts_strings_and_normalises_fractions():
    f = fps.make(["1/2", Fraction(4, 2)], 2)
    assert f.tolist() == [Fraction(1, 2), 2]
    assert isinstance(f[1], int)


def test_series_is_read_only():
    f = fps.make([1, 2], 2)
    with pytest.raises(ValueError):
        f.coeffs[0] = 5


def test_add_examples():
    assert fps.add(fps.make([1, 1], 2), fps.make([1, -1], 2)).tolist() == [2, 0]
    f = fps.make([3, -1, 4], 3)
    assert fps.add(f, fps.neg(f)) == fps.zero(3)
    assert fps.add(fps.zero(3), fps.zero(5)).prec == 3


def test_mul_examples():
    assert fps.mul(fps.make([1, 1, 0], 3), fps.make([1, -1, 0], 3)).tolist() == [1, 0, -1]
    f = fps.make([2, 0, 7, -3], 4)
    assert fps.mul(f, fps.one(4)) == f
    square = fps.mul(fps.make([1, 1, 0], 3), fps.make([1, 1, 0], 3))
    assert fps.mul(square, fps.make([1, 1, 0], 3))[2] == 3


def test_mul_zero_prec():
    assert fps.mul(fps.zero(0), fps.one(3)).prec == 0


def test_mul_rational():
    f = fps.make([Fraction(1, 2), Fraction(1, 3)], 2)
    g = fps.make([2, Fraction(3, 4)], 2)
    assert fps.mul(f, g).tolist() == [1, Fraction(3, 8) + Fraction(2, 3)]


def test_invert_examples():
    assert fps.invert(fps.make([1, -1, 0, 0], 4)).tolist() == [1, 1, 1, 1]
    assert fps.invert(fps.one(5)) == fps.one(5)
    with pytest.raises(NotAUnitError):
        fps.invert(fps.make([0, 1], 2))


def test_invert_rational_constant():
    g = fps.invert(fps.make([2, 1], 2))
    assert g.tolist() == [Fraction(1, 2), Fraction(-1, 4)]


def test_substitute_power_examples():
    assert fps.substitute_power(fps.make([1, 1], 2), 2).tolist() == [1, 0, 1, 0]
    assert fps.substitute_power(fps.make([1, 1, 1], 3), 1, -1).tolist() == [1, -1, 1]
    f = fps.make([5, 6, 7], 3)
    assert fps.substitute_power(f, 1) == f


def test_shift_examples():
    assert fps.shift(fps.make([1, 1], 2), 1).tolist() == [0, 1, 1]
    assert fps.shift(fps.make([0, 0, 1, 1], 4), -2).tolist() == [1, 1]
    with pytest.raises(NotDivisibleError):
        fps.shift(fps.make([1, 1], 2), -1)
    with pytest.raises(PrecisionError):
        fps.shift(fps.make([0, 0], 2), -3)


def test_coeff_examples():
    f = fps.make([1, 2], 2)
    assert fps.coeff(f, 1) == 2
    assert fps.coeff(f, 0) == 1
    with pytest.raises(PrecisionError):
        fps.coeff(f, 5)


def test_reduce_mod_examples():
    assert fps.reduce_mod(fps.make([1, 4, 6], 3), 4).tolist() == [1, 0, 2]
    assert fps.reduce_mod(fps.make([2, 2, 0, 2], 4), 2) == fps.zero(4)
    with pytest.raises(NonIntegralError):
        fps.reduce_mod(fps.make([Fraction(1, 2), 1], 2), 2)
    with pytest.raises(ConstructionError):
        fps.reduce_mod(fps.make([1], 1), 1)


def test_reduce_mod_negative_coefficients():
    assert fps.reduce_mod(fps.make([-1, -4, -7], 3), 4).tolist() == [3, 0, 1]


def test_truncate_beyond_prec():
    with pytest.raises(PrecisionError):
        fps.truncate(fps.one(3), 4)


def test_from_terms_drops_high_exponents():
    f = fps.from_terms({0: 1, 3: 2, 10: 5}, 5)
    assert f.tolist() == [1, 0, 0, 2, 0]


def test_valuation_and_leading():
    assert fps.valuation(fps.make([0, 0, 3], 3)) == 2
    assert fps.valuation(fps.zero(4)) is None
    assert fps.leading(fps.make([1, 2, 3, 4], 4), 2) == [1, 2]


def test_operators():
    f = fps.make([1, 1, 0], 3)
    assert (f * f).tolist() == [1, 2, 1]
    assert (f + 1).tolist() == [2, 1, 0]
    assert (1 - f).tolist() == [0, -1, 0]
    assert (2 * f).tolist() == [2, 2, 0]
    assert (f ** -1).tolist() == [1, -1, 1]


def test_repr_shows_truncation():
    assert "O(q^3)" in repr(fps.make([1, 0, 2], 3))


def test_series_is_unhashable():
    with pytest.raises(TypeError):
        hash(fps.one(1))


# ---------------------------------------------------------------------------
# 이항 인수
# ---------------------------------------------------------------------------

@pytest.mark.parametrize("c", [1, -1, 3, Fraction(-2, 5)])
@pytest.mark.parametrize("e", [1, 2, 5])
def test_binomial_division_inverts_multiplication(c, e):
    f = fps.make([1, -2, 3, 0, 5, 7, -1, 2, 2, 9], 10)
    assert fps.div_binomial(fps.mul_binomial(f, c, e), c, e) == f
    factor = fps.from_terms({0: 1, e: -c}, 10)
    assert fps.mul_binomial(f, c, e) == fps.mul(f, factor)


def test_div_binomial_geometric():
    assert fps.div_binomial(fps.one(7), 1, 3).tolist() == [1, 0, 0, 1, 0, 0, 1]
    assert fps.div_binomial(fps.one(5), -1, 1).tolist() == [1, -1, 1, -1, 1]


def test_binomial_rejects_bad_exponent():
    with pytest.raises(ConstructionError):
        fps.div_binomial(fps.one(3), 1, 0)
    with pytest.raises(ConstructionError):
        fps.mul_binomial(fps.one(3), 1, -1)


# ---------------------------------------------------------------------------
# SeriesBuffer
# ---------------------------------------------------------------------------

def test_buffer_add_shifted():
    buffer = SeriesBuffer(5)
    buffer.add_shifted(fps.one(5), 0)
    buffer.add_shifted(fps.make([1, 1, 1], 3), 2, scalar=3)
    assert buffer.freeze().tolist() == [1, 0, 3, 3, 3]


def test_buffer_rejects_short_terms():
    buffer = SeriesBuffer(6)
    with pytest.raises(PrecisionError):
        buffer.add_shifted(fps.one(2), 3)


def test_buffer_geometric():
    buffer = SeriesBuffer(8)
    buffer.add_geometric(1, 3, scalar=2)
    buffer.add_geometric(0, 2, scalar=1, ratio=-1)
    assert buffer.freeze().tolist() == [1, 2, -1, 0, 3, 0, -1, 2]


# ---------------------------------------------------------------------------
# 대수 법칙 (무작위)
# ---------------------------------------------------------------------------

@LAWS
@given(int_series(), int_series())
def test_mul_matches_naive_convolution(f, g):
    n = min(f.prec, g.prec)
    assert fps.mul(f, g).tolist() == naive_product(f.tolist(), g.tolist(), n)


@LAWS
@given(any_series, any_series)
def test_mul_commutative(f, g):
    assert fps.mul(f, g) == fps.mul(g, f)


@LAWS
@given(any_series, any_series, any_series)
def test_mul_associative(f, g, h):
    assert fps.mul(fps.mul(f, g), h) == fps.mul(f, fps.mul(g, h))


@LAWS
@given(any_series, any_series, any_series)
def test_distributive(f, g, h):
    assert fps.mul(f, fps.add(g, h)) == fps.add(fps.mul(f, g), fps.mul(f, h))


@LAWS
@given(any_series, any_series)
def test_add_commutative_and_precision_rule(f, g):
    assert fps.add(f, g) == fps.add(g, f)
    assert fps.add(f, g).prec == min(f.prec, g.prec)


@LAWS
@given(int_series(elements=st.integers(-1000, 1000)), st.sampled_from([1, -1]))
def test_invert_round_trip_integral(f, unit):
    coeffs = f.tolist()
    coeffs[0] = unit
    f = fps.make(coeffs, len(coeffs))
    g = fps.invert(f)
    assert g.is_integral
    assert fps.mul(f, g) == fps.one(f.prec)


@LAWS
@given(rational_series())
def test_invert_round_trip_rational(f):
    if f[0] == 0:
        coeffs = f.tolist()
        coeffs[0] = Fraction(3, 7)
        f = fps.make(coeffs, len(coeffs))
    assert fps.mul(f, fps.invert(f)) == fps.one(f.prec)


@LAWS
@given(any_series, st.integers(min_value=1, max_value=6))
def test_dissection_reassembly(f, m):
    assert reassemble(dissect(f, m)) == f


@LAWS
@given(int_series(max_size=48) | rational_series(max_size=40), st.sampled_from([2, 3, 4, 8, 16]))
def test_dissection_reassembly_wide_moduli(f, m):
    comps = dissect(f, m)
    assert len(comps) == m
    assert reassemble(comps) == f


@LAWS
@given(any_series, st.integers(min_value=0, max_value=12))
def test_shift_then_unshift(f, k):
    assert fps.shift(fps.shift(f, k), -k) == f


@LAWS
@given(any_series)
def test_sign_flip_is_involution(f):
    assert fps.substitute_power(fps.substitute_power(f, 1, -1), 1, -1) == f


@LAWS
@given(any_series, st.sampled_from([2, 4, 6]))
def test_sign_flip_commutes_with_even_dissection(f, m):
    flipped = dissect(fps.substitute_power(f, 1, -1), m)
    for j, (comp, original) in enumerate(zip(flipped, dissect(f, m))):
        expected = original if j % 2 == 0 else fps.neg(original)
        assert comp == expected


@LAWS
@given(int_series(elements=st.integers(-50, 50)), st.integers(min_value=0, max_value=5))
def test_power_matches_repeated_product(f, k):
    expected = fps.one(f.prec)
    for _ in range(k):
        expected = fps.mul(expected, f)
    assert fps.power(f, k) == expected
