from __future__ import annotations

from fractions import Fraction
from functools import reduce

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import NIKONOROV4_OPERATOR, NIKONOROV5_OPERATOR
from liecurv.linalg import identity, mat_add, mat_scale, mat_sub, matmul, zeros
from liecurv.polynomials import (
    ExactPolynomial,
    char_poly,
    determinant,
    isolate_real_roots,
    numeric_spectrum,
    poly_gcd,
    real_roots,
    spectrum_of,
    squarefree_decomposition,
    sturm_sequence,
)
from liecurv.scalars import Scalar
from strategies import scalars

X = ExactPolynomial.x()


def linear(r) -> ExactPolynomial:
    return X - ExactPolynomial.constant(r)


def evaluate_at_matrix(f: ExactPolynomial, m):
    acc = zeros(len(m))
    for c in reversed(f.coeffs):
        acc = mat_add(matmul(acc, m), mat_scale(c, identity(len(m))))
    return acc


small = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@st.composite
def rational_matrices(draw, max_n=4):
    n = draw(st.integers(1, max_n))
    return tuple(tuple(Scalar(draw(small)) for _ in range(n)) for _ in range(n))


@st.composite
def surd_matrices(draw, max_n=3):
    n = draw(st.integers(1, max_n))
    return tuple(tuple(draw(scalars(max_terms=2)) for _ in range(n)) for _ in range(n))


def test_char_poly_examples():
    assert char_poly(identity(2)) == linear(1) * linear(1)
    f = char_poly(NIKONOROV5_OPERATOR)
    assert f.degree == 10 and f.leading == 1
    r = Fraction(4, 15)
    assert f(Scalar(r)) == 0 and f.derivative()(Scalar(r)) == 0


def test_string_form():
    assert str(linear(Fraction(4, 15))) == "x - 4/15"
    assert str(char_poly(NIKONOROV5_OPERATOR)).startswith("x^10 - 5/2*x^9")


def test_gcd_examples():
    p = linear(1) * linear(1)
    assert poly_gcd(p, p.derivative()) == linear(1)
    f5 = char_poly(NIKONOROV5_OPERATOR)
    assert poly_gcd(f5, f5.derivative()) == linear(Fraction(4, 15))
    f4 = char_poly(NIKONOROV4_OPERATOR)
    assert poly_gcd(f4, f4.derivative()).degree == 3
    with pytest.raises(ValueError):
        poly_gcd(ExactPolynomial(), ExactPolynomial())


def test_nikonorov4_spectrum_matches_closed_form():
    # {(73 +- sqrt(1489))/132, 18/66, 24/66, 16/66 (x2), -3/66 (x2), 12/66 (x2)}
    got = numeric_spectrum(NIKONOROV4_OPERATOR)
    s = 1489 ** 0.5
    want = sorted(
        [((73 - s) / 132, 1), ((73 + s) / 132, 1), (18 / 66, 1), (24 / 66, 1),
         (16 / 66, 2), (-3 / 66, 2), (12 / 66, 2)]
    )
    assert [m for _, m in got] == [m for _, m in want]
    for (a, _), (b, _) in zip(got, want):
        assert abs(a - b) < 1e-10


@settings(max_examples=60, deadline=None)
@given(rational_matrices())
def test_cayley_hamilton_rational(m):
    assert evaluate_at_matrix(char_poly(m), m) == zeros(len(m))


@settings(max_examples=30, deadline=None)
@given(surd_matrices())
def test_cayley_hamilton_surds(m):
    assert evaluate_at_matrix(char_poly(m), m) == zeros(len(m))


def test_cayley_hamilton_golden():
    for m in (NIKONOROV5_OPERATOR, NIKONOROV4_OPERATOR):
        assert evaluate_at_matrix(char_poly(m), m) == zeros(10)


@settings(max_examples=40, deadline=None)
@given(rational_matrices(), small)
def test_char_poly_is_det_of_shift(m, t):
    shifted = mat_sub(mat_scale(Scalar(t), identity(len(m))), m)
    assert char_poly(m)(Scalar(t)) == determinant(shifted)


def _poly(coeffs):
    return ExactPolynomial([Scalar(c) for c in coeffs])


polys = st.lists(small, min_size=1, max_size=4).map(_poly).filter(bool)


@settings(max_examples=80, deadline=None)
@given(polys, polys, polys)
def test_gcd_properties(p, q, r):
    g = poly_gcd(p * r, q * r)
    assert g.leading == 1
    assert ((p * r) % g).is_zero() and ((q * r) % g).is_zero()
    assert (g % r.monic()).is_zero()
    assert poly_gcd(p, q) == poly_gcd(q, p)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.tuples(small, st.integers(1, 3)), min_size=1, max_size=4))
def test_squarefree_and_spectrum(roots):
    merged: dict = {}
    for r, k in roots:
        merged[r] = merged.get(r, 0) + k
    f = reduce(lambda a, b: a * b, (linear(r) ** k for r, k in merged.items()))
    parts = squarefree_decomposition(f)
    rebuilt = reduce(lambda a, b: a * b, (p ** k for p, k in parts))
    assert rebuilt == f.monic()
    spec = spectrum_of(f, 1e-12)
    assert [m for _, m in spec] == [merged[r] for r in sorted(merged)]
    for (x, _), r in zip(spec, sorted(merged)):
        assert abs(x - float(r)) < 1e-11
    g = poly_gcd(f, f.derivative())
    assert g.degree == sum(m - 1 for m in merged.values())


def test_sturm_isolation_on_irrational_roots():
    p = X * X - ExactPolynomial.constant(2)
    seq = sturm_sequence(p)
    assert seq[0] == p and seq[-1].degree == 0
    intervals = isolate_real_roots(p)
    assert len(intervals) == 2
    lo, hi = real_roots(p)
    assert abs(lo + 2 ** 0.5) < 1e-12 and abs(hi - 2 ** 0.5) < 1e-12
    assert real_roots(X * X + ExactPolynomial.constant(1)) == []


def test_roots_at_split_points_are_found():
    # roots at 0 and at dyadic midpoints must not be lost by bisection
    p = X * linear(1) * linear(Fraction(-1, 2)) * linear(Fraction(1, 4))
    assert [round(r, 12) for r in real_roots(p)] == [-0.5, 0.0, 0.25, 1.0]
