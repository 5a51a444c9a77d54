from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from liecurv.scalars import (
    ComplexScalar,
    FieldDegreeError,
    InvalidRadicandError,
    Scalar,
    ScalarParseError,
    field_rank,
    invert,
    multiply,
    normalize,
    parse_scalar,
    to_float,
)
from strategies import nonzero_scalars, scalars


def test_radicand_square_part_is_extracted():
    assert Scalar(1, 8) == Scalar(2, 2)
    assert str(Scalar(1, 8)) == "2*sqrt(2)"
    assert Scalar.sqrt(Fraction(2, 3)) == Scalar(Fraction(1, 3), 6)
    assert Scalar(Fraction(1, 3), 6).items() == [(6, Fraction(1, 3))]


def test_cancellation_leaves_no_terms():
    assert Scalar(1, 2) + Scalar(1, 2) == Scalar(2, 2)
    z = Scalar(1, 2) + Scalar(-1, 2)
    assert z == 0 and z.items() == [] and not z


def test_multiply_examples():
    assert multiply(Scalar(1, 6), Scalar(1, 30)) == Scalar(6, 5)
    assert multiply(Scalar(Fraction(1, 3), 6), Scalar(Fraction(1, 30), 30)) == Scalar(Fraction(1, 15), 5)
    assert multiply(Scalar(7, 3) + 1, Scalar(0)) == 0


def test_invert_examples():
    assert invert(1 + Scalar(1, 5)) == (Scalar(1, 5) - 1) / 4
    assert invert(Scalar(1, 30)) == Scalar(Fraction(1, 30), 30)
    assert invert(Scalar(Fraction(2, 3))) == Fraction(3, 2)


def test_invert_zero_raises():
    with pytest.raises(ZeroDivisionError):
        invert(Scalar(0))


def test_invert_respects_degree_bound():
    four = Scalar(1, 2) + Scalar(1, 3) + Scalar(1, 5) + Scalar(1, 7)
    assert field_rank(four.radicands()) == 4
    with pytest.raises(FieldDegreeError):
        invert(four)
    assert invert(four, max_radicals=4) * four == 1


def test_to_float_examples():
    assert to_float(Scalar(0)) == 0.0
    assert to_float(Scalar(Fraction(-4, 15))) == pytest.approx(-0.26666666666666666, abs=1e-15)
    assert to_float(Scalar(6, 5)) == pytest.approx(13.416407864998739, abs=1e-12)


def test_invalid_radicand():
    with pytest.raises(InvalidRadicandError):
        Scalar(1, -3)
    with pytest.raises(InvalidRadicandError):
        Scalar(1, 0)


@pytest.mark.parametrize(
    "text, value",
    [
        ("0", Scalar(0)),
        ("13/30", Scalar(Fraction(13, 30))),
        ("-1/15*sqrt(5)", Scalar(Fraction(-1, 15), 5)),
        ("sqrt(8)", Scalar(2, 2)),
        ("1 + 1*sqrt(5)", 1 + Scalar(1, 5)),
        ("-2/30*sqrt(5)", Scalar(Fraction(-1, 15), 5)),
    ],
)
def test_parse(text, value):
    assert parse_scalar(text) == value


@pytest.mark.parametrize("bad", ["", "sqrt(-2)", "1/0", "x", "2*sqrt(", "1 ++ 2"])
def test_parse_rejects(bad):
    with pytest.raises((ScalarParseError, InvalidRadicandError, ZeroDivisionError)):
        parse_scalar(bad)


def test_sign_of_near_cancellation():
    # 99 - 70 sqrt(2) ~ 0.00505 > 0, 70 sqrt(2) - 99 < 0
    a = 99 - Scalar(70, 2)
    assert a.sign() == 1 and (-a).sign() == -1
    # (sqrt2 + sqrt3)^2 = 5 + 2 sqrt6 < 10
    assert Scalar(1, 2) + Scalar(1, 3) < Scalar(1, 10)


def test_complex_scalar_arithmetic():
    i = ComplexScalar(0, 1)
    assert i * i == ComplexScalar(-1)
    z = ComplexScalar(1, Scalar(1, 2))
    assert (z * z.conjugate()).is_real()
    assert (z * z.conjugate()).re == 3


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == 0
    assert a * 1 == a and a + 0 == a


@settings(max_examples=1000, deadline=None)
@given(nonzero_scalars)
def test_invert_is_two_sided_inverse(a):
    inv = invert(a)
    assert a * inv == 1 and inv * a == 1


@given(st.lists(st.tuples(st.fractions(max_denominator=9), st.integers(1, 60)), max_size=5))
def test_normalize_idempotent(raw):
    once = normalize(raw)
    assert normalize([(q, m) for m, q in once.items()]) == once
    assert normalize([(q, m) for m, q in once.items()]).items() == once.items()


@given(scalars(), scalars())
def test_float_is_a_homomorphism(a, b):
    assert math.isclose(to_float(a * b), to_float(a) * to_float(b), rel_tol=1e-9, abs_tol=1e-9)
    assert math.isclose(to_float(a + b), to_float(a) + to_float(b), rel_tol=1e-9, abs_tol=1e-9)


@given(scalars(), scalars())
def test_order_agrees_with_float(a, b):
    fa, fb = to_float(a), to_float(b)
    if abs(fa - fb) > 1e-9:
        assert (a < b) == (fa < fb)
    assert (a == b) == ((a - b).sign() == 0)


@given(scalars())
def test_format_parse_round_trip(a):
    assert parse_scalar(str(a)) == a
    assert str(parse_scalar(str(a))) == str(a)
    assert hash(parse_scalar(str(a))) == hash(a)
