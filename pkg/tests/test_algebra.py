import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from helpers import rand_poly, to_sympy
from polyleaf.algebra import (
    GaussianRational,
    Polynomial,
    UnivariatePoly,
    arith,
    degree_data,
    divide_exact,
    divides,
    evaluate,
    gcd_bivariate,
    is_squarefree,
    poly_pow,
    squarefree_decomposition,
    ugcd,
    usquarefree,
)
from polyleaf.errors import BothZeroError, InexactDivisionError, ZeroPolynomialError

Z1, Z2 = Polynomial.z1(), Polynomial.z2()
I = GaussianRational(0, 1)


# -- Gaussian rationals ---------------------------------------------------------

def test_gaussian_normal_form():
    a = GaussianRational(Fraction(2, 4), Fraction(-6, 8))
    assert a.re == Fraction(1, 2) and a.im == Fraction(-3, 4)
    assert GaussianRational(3) == 3
    assert hash(GaussianRational(Fraction(1, 2))) == hash(Fraction(1, 2))


def test_gaussian_field_ops():
    a = GaussianRational(1, 2)
    b = GaussianRational(Fraction(1, 3), -1)
    assert (a * b) / b == a
    assert a * a.inverse() == 1
    assert I * I == -1
    assert a.conjugate() * a == a.norm()
    assert a ** -2 == (a * a).inverse()
    with pytest.raises(ZeroDivisionError):
        GaussianRational(0).inverse()


def test_gaussian_json():
    assert GaussianRational(Fraction(3, 2), -1).to_json() == {"re": "3/2", "im": "-1"}


small = st.builds(Fraction, st.integers(-20, 20), st.integers(1, 6))
gauss = st.builds(GaussianRational, small, small)
terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4)), gauss, max_size=6
)
polys = terms.map(Polynomial)


@settings(max_examples=60, deadline=None)
@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial()


@settings(max_examples=60, deadline=None)
@given(polys, polys)
def test_degree_laws(a, b):
    if a.is_zero() or b.is_zero():
        assert (a * b).is_zero()
        return
    assert (a * b).total_degree == a.total_degree + b.total_degree
    assert (a * b).order == a.order + b.order
    s = a + b
    if not s.is_zero():
        assert s.total_degree <= max(a.total_degree, b.total_degree)


@settings(max_examples=40, deadline=None)
@given(polys, gauss, gauss)
def test_evaluation_is_a_homomorphism(a, x, y):
    b = a * a + Z1
    assert evaluate(b, x, y) == evaluate(a, x, y) ** 2 + x


# -- documented examples---------------------------------------------------------

def test_arith_examples():
    assert arith(Z1 * Z2, Z1 * Z2, "add") == (Z1 * Z2).scale(2)
    assert arith(Z1 + Z2, Polynomial(), "mul").is_zero()
    assert arith(Z1 + Z2, Z1 - Z2, "mul") == Z1 * Z1 - Z2 * Z2


def test_pow_and_evaluate_examples():
    assert poly_pow(Z1 + Z2, 2) == Z1 * Z1 + (Z1 * Z2).scale(2) + Z2 * Z2
    assert poly_pow(Polynomial(), 0) == Polynomial.constant(1)
    assert evaluate(Z1 * Z1 * Z2, 2, 3) == 12
    assert evaluate(Z1 + Z2.scale(I), I, 1) == GaussianRational(0, 2)


def test_degree_data_examples():
    d = degree_data(Z1 ** 2 + Z1 ** 3)
    assert (d.total_degree, d.order, d.leading_form, d.initial_form) == (3, 2, Z1 ** 3, Z1 ** 2)
    d = degree_data(Z1 * Z2)
    assert (d.total_degree, d.order) == (2, 2)
    d = degree_data(Polynomial.constant(5))
    assert (d.total_degree, d.order, d.leading_form) == (0, 0, Polynomial.constant(5))
    with pytest.raises(ZeroPolynomialError):
        degree_data(Polynomial())


def test_gcd_examples():
    assert gcd_bivariate(Z1 ** 2 * Z2, Z1 * Z2 ** 2) == Z1 * Z2
    p = (Z1 + Z2.scale(3)).scale(GaussianRational(2, 1))
    assert gcd_bivariate(p, p) == p.normalized()
    a = (Z1 + Z2) ** 2 * (Z1 - Z2)
    b = (Z1 + Z2) * (Z1 - Z2) ** 2
    g = gcd_bivariate(a, b)
    assert g == Z1 ** 2 - Z2 ** 2
    assert divides(g, a) and divides(g, b)
    with pytest.raises(BothZeroError):
        gcd_bivariate(Polynomial(), Polynomial())


def test_squarefree_examples():
    dec = squarefree_decomposition(Z1 ** 2 * Z2 ** 4)
    assert dec.unit == 1 and list(dec.factors) == [(Z1, 2), (Z2, 4)]
    dec = squarefree_decomposition(Z1 ** 2 + Z1 ** 3)
    assert dec.unit == 1
    assert sorted(dec.factors, key=lambda t: t[1]) == [(Z1 + 1, 1), (Z1, 2)]
    with pytest.raises(ZeroPolynomialError):
        squarefree_decomposition(Polynomial())


def test_exact_division():
    a = (Z1 + Z2) * (Z1 - I)
    assert divide_exact(a, Z1 + Z2) == Z1 - I
    with pytest.raises(InexactDivisionError):
        divide_exact(a, Z1 + 2)


def test_univariate_helpers():
    x = UnivariatePoly.x()
    p = (x - 1) ** 2 * (x + 2)
    assert ugcd(p, p.derivative()) == x - 1
    assert usquarefree(p) == [(x + 2, 1), (x - 1, 2)]
    assert p.to_text("X") == "X^3 - 3*X + 2"


# -- oracle comparisons -----------------------------------------------------------

def test_gcd_against_sympy():
    rng = random.Random(11)
    z1, z2 = sympy.symbols("z1 z2")
    for _ in range(25):
        g = rand_poly(rng, rng.randint(1, 2))
        a = g * rand_poly(rng, rng.randint(0, 2))
        b = g * rand_poly(rng, rng.randint(0, 2))
        ours = to_sympy(gcd_bivariate(a, b))
        ref = sympy.gcd(to_sympy(a), to_sympy(b), extension=sympy.I)
        assert sympy.simplify(sympy.cancel(ours / ref)).is_constant()


def test_squarefree_against_sympy():
    rng = random.Random(5)
    for _ in range(25):
        p = Polynomial.constant(1)
        for e in (1, 2, 3):
            if rng.random() < 0.6:
                p = p * rand_poly(rng, rng.randint(1, 2), complex_ok=False) ** e
        if p.is_constant():
            continue
        dec = squarefree_decomposition(p)
        assert dec.expand() == p
        exps = [e for _, e in dec.factors]
        assert len(set(exps)) == len(exps)
        for g, _ in dec.factors:
            assert is_squarefree(g)
        # every pair of factors is coprime
        for i, (g, _) in enumerate(dec.factors):
            for h, _ in dec.factors[i + 1:]:
                assert gcd_bivariate(g, h).is_constant()
        _, ref = sympy.sqf_list(to_sympy(p), *sympy.symbols("z1 z2"))
        ref_exps = sorted({e for _, e in ref})
        assert sorted(exps) == ref_exps
