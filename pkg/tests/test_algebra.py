import math
from fractions import Fraction

import pytest

from riordan_arrays.algebra import (
    Polynomial,
    distinct_values,
    exact_abs_residual,
    format_poly,
    has_repeated_root,
    poly_arith,
    poly_derivative,
    poly_eval,
    poly_gcd,
    poly_roots,
    rational,
    roots_equal,
)
from riordan_arrays.errors import NonConvergence, ZeroPolynomial


def P(*c):
    return Polynomial(list(c))


def test_canonical_form():
    assert P(1, 2, 0, 0).coeffs == (1, 2)
    assert P().degree == -1 and P(0, 0).is_zero()
    assert P(Fraction(2, 4)).coeffs[0] == Fraction(1, 2)
    assert rational("-3/7") == Fraction(-3, 7)
    assert rational(0.5) == Fraction(1, 2)
    with pytest.raises(ValueError):
        rational(float("nan"))


@pytest.mark.parametrize("a,b,kind,want", [
    (P(-1, 1), P(1, 1), "mul", P(-1, 0, 1)),
    (P(0, -1, 1), P(), "add", P(0, -1, 1)),
    (P(-1, 1), P(0, 1), "mul", P(0, -1, 1)),
    (P(1, 2), P(1, 2), "sub", P()),
])
def test_poly_arith(a, b, kind, want):
    assert poly_arith(a, b, kind) == want


def test_degree_of_product():
    a, b = P(1, 0, 3), P(-2, 5)
    assert (a * b).degree == a.degree + b.degree


def test_derivative():
    assert poly_derivative(P(-1, -1, 1)) == P(-1, 2)
    assert poly_derivative(P(7)) == P()
    assert P(1, 1, 1, 1).derivative(2) == P(2, 6)


def test_division():
    q, r = divmod(P(-1, 0, 0, 1), P(-1, 1))
    assert q == P(1, 1, 1) and r == P()
    assert P(-1, 0, 1).exact_div(P(1, 1)) == P(-1, 1)
    with pytest.raises(ArithmeticError):
        P(1, 0, 1).exact_div(P(1, 1))


def test_gcd_is_monic():
    g = poly_gcd(P(-2, 0, 2), P(2, 2))
    assert g == P(1, 1)
    assert poly_gcd(P(1, 1), P(2)) == P(1)


def test_eval():
    assert poly_eval(P(-1, 1), 2) == 1
    golden = (1 + math.sqrt(5)) / 2
    assert abs(poly_eval(P(-1, -1, 1), golden)) < 1e-12
    assert poly_eval(P(0, -1, 1), 2) == 2
    # rational arguments evaluate exactly
    assert P(0, -1, 1)(Fraction(1, 3)) == Fraction(-2, 9)


def test_format():
    assert str(P(-1, -1, 1)) == "z^2 - z - 1"
    assert format_poly(P(2, 0, -3), "w") == "-3*w^2 + 2"
    assert str(P()) == "0"


def test_roots_examples():
    golden = (1 + math.sqrt(5)) / 2
    r = poly_roots(P(-1, -1, 1))
    assert abs(r[0] - (1 - golden)) < 1e-12 and abs(r[1] - golden) < 1e-12
    assert poly_roots(P(-1, 1)) == [1]
    assert poly_roots(P(0, -1, 1)) == [0, 1]


def test_roots_errors():
    with pytest.raises(ZeroPolynomial):
        poly_roots(P())
    with pytest.raises(ValueError):
        poly_roots(P(3))
    # with no sweeps the starting circle never reaches the roots
    with pytest.raises(NonConvergence):
        poly_roots(P(1, 2, 3, 4, 5, 6, 7), max_sweeps=0)


def test_multiple_roots_merge():
    assert poly_roots(P(-4, 4, -1)) == [2, 2]
    assert poly_roots(P(-1, 3, -3, 1)) == [1, 1, 1]
    assert has_repeated_root(poly_roots(P(1, 0, 2, 0, 1)))
    assert not has_repeated_root(poly_roots(P(-1, -1, 1)))


def test_residual_exact():
    assert exact_abs_residual(P(-2, 1), 2 + 0j) == 0
    assert exact_abs_residual(P(1, 0, 1), 1j) == 0


def test_root_tolerances():
    assert roots_equal(1.0, 1.0 + 1e-10)
    assert not roots_equal(1.0, 1.0 + 1e-8)
    assert distinct_values([1.0, 1.0 + 1e-12, -1.0]) == [1.0, -1.0]
