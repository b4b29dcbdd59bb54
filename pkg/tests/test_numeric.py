import numpy as np
import pytest
from scipy.optimize import linear_sum_assignment

from polyleaf.algebra import GaussianRational, Polynomial, poly_pow
from polyleaf.errors import DegreeZeroError, NumericOverflowError
from polyleaf.numeric import NumericPoly, eval_numeric, find_roots, recompose

Z1, Z2 = Polynomial.z1(), Polynomial.z2()


def match_error(a, b) -> float:
    cost = np.abs(np.subtract.outer(np.asarray(a), np.asarray(b)))
    r, c = linear_sum_assignment(cost)
    return float(cost[r, c].max())


def test_eval_examples():
    assert eval_numeric(Z1 ** 2 * Z2, 2, 3) == 12.0
    p = Z1 * Z2 + Polynomial.constant(GaussianRational(2, -1))
    assert eval_numeric(p, 0, 0) == complex(2, -1)


def test_eval_overflow():
    with pytest.raises(NumericOverflowError):
        eval_numeric(Z1 ** 40, 1e10, 0)


def test_vectorized_eval_matches_scalar():
    p = (Z1 - Z2.scale(GaussianRational(0, 1))) ** 3 + Z1 * Z2 - 7
    rng = np.random.default_rng(0)
    z1 = rng.normal(size=20) + 1j * rng.normal(size=20)
    z2 = rng.normal(size=20) + 1j * rng.normal(size=20)
    vals = NumericPoly(p)(z1, z2)
    ref = np.array([eval_numeric(p, a, b) for a, b in zip(z1, z2)])
    assert np.allclose(vals, ref, rtol=1e-12, atol=1e-12)


def test_accurate_eval_survives_cancellation():
    # (z1 + z2)^12 expanded, evaluated near z1 = -z2 at radius 8
    p = poly_pow(Z1 + Z2, 12)
    z1 = np.array([8.0 + 0j])
    z2 = np.array([-8.0 + 1e-3j])
    got = NumericPoly(p).evaluate_accurate(z1, z2)[0]
    ref = (1e-3j) ** 12
    assert abs(got - ref) <= 1e-10 * abs(ref)


def test_find_roots_examples():
    rs = find_roots([-1, 0, 1])
    assert match_error(rs.roots, [1, -1]) < 1e-12
    assert max(rs.residuals) < 1e-14
    rs = find_roots([0, 0, 0, 1])
    assert max(abs(r) for r in rs.roots) < 1e-10
    with pytest.raises(DegreeZeroError):
        find_roots([3])


def test_find_roots_multiple_root():
    coeffs = recompose(1.0, [0.5, 0.5, 0.5, -1j])
    rs = find_roots(coeffs)
    # a triple root is only determined to about eps^(1/3)
    assert match_error(rs.roots, [0.5, 0.5, 0.5, -1j]) < 1e-4


def test_recompose():
    assert np.allclose(recompose(2.0, [1, -1]), [-2, 0, 2])


def test_slice_coefficients():
    p = Z1 * Z2 ** 2 + Z1 ** 2 - Z2
    rows, scales = NumericPoly(p).slice_coeffs(np.array([2.0 + 0j]), 1)
    assert np.allclose(rows[0], [4, -1, 2])
    assert np.all(scales[0] >= np.abs(rows[0]))
