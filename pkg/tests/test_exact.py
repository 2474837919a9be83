import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from boxseq.exact import (
    binomial,
    coeff_table,
    factorial,
    format_rational,
    parse_rational,
)

from conftest import rationals


def test_binomial_small_values():
    assert binomial(3, 2) == 3
    assert binomial(10, 5) == 252
    assert all(binomial(n, 0) == 1 for n in range(20))


def test_binomial_k_above_n_is_zero():
    assert binomial(3, 4) == 0
    assert binomial(0, 1) == 0


def test_binomial_10_5_matches_recurrence_table():
    assert coeff_table(11)[11, 5] == binomial(10, 5) == 252


@given(st.integers(0, 60), st.integers(0, 60))
def test_binomial_symmetry_and_math_comb(n, k):
    assert binomial(n, k) == math.comb(n, k)
    if k <= n:
        assert binomial(n, k) == binomial(n, n - k)


@pytest.mark.parametrize("n, expected", [(0, 1), (5, 120), (20, 2432902008176640000)])
def test_factorial(n, expected):
    assert factorial(n) == expected


def test_factorial_ratio():
    assert factorial(20) // factorial(19) == 20


def test_coeff_table_rows():
    assert coeff_table(1)[1, 0] == 1
    # row 3 is 1, 2, 1: g_3 = L^2 f_1 + 2 L f_2 + f_3
    assert coeff_table(3).row(3) == [1, 2, 1]
    assert coeff_table(5)[5, 2] == 6 == binomial(4, 2)


def test_coeff_table_matches_binomial_up_to_40():
    table = coeff_table(40)
    for n in range(1, 41):
        assert table[n, 0] == table[n, n - 1] == 1
        for k in range(n):
            assert table[n, k] == binomial(n - 1, k)


def test_coeff_table_rejects_zero():
    with pytest.raises(ValueError):
        coeff_table(0)


@pytest.mark.parametrize("text, value", [("-3/2", Fraction(-3, 2)), ("1", Fraction(1)), ("6/4", Fraction(3, 2)), ("0", Fraction(0))])
def test_parse_rational(text, value):
    assert parse_rational(text) == value


@pytest.mark.parametrize("text", ["", "1/0", "1.5", "--1", "+1", "1/-2", "a"])
def test_parse_rational_rejects(text):
    with pytest.raises(ValueError):
        parse_rational(text)


def test_format_rational():
    assert format_rational(Fraction(-3, 2)) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"


@given(rationals)
def test_format_parse_roundtrip(q):
    assert parse_rational(format_rational(q)) == q


@given(rationals, rationals, rationals)
def test_rational_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert (a * b).denominator > 0
    assert math.gcd(abs((a * b).numerator), (a * b).denominator) == 1
