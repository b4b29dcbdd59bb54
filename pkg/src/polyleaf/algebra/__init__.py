"""Exact arithmetic over the Gaussian rationals."""

from polyleaf.algebra.factor import (
    SquarefreeDecomposition,
    divide_exact,
    divides,
    gcd_bivariate,
    is_squarefree,
    squarefree_decomposition,
)
from polyleaf.algebra.gaussian import I, ONE, ZERO, GaussianRational
from polyleaf.algebra.polynomial import (
    DegreeData,
    Polynomial,
    arith,
    degree_data,
    evaluate,
    poly_pow,
)
from polyleaf.algebra.univariate import UnivariatePoly, ugcd, usquarefree

__all__ = [
    "DegreeData",
    "GaussianRational",
    "I",
    "ONE",
    "Polynomial",
    "SquarefreeDecomposition",
    "UnivariatePoly",
    "ZERO",
    "arith",
    "degree_data",
    "divide_exact",
    "divides",
    "evaluate",
    "gcd_bivariate",
    "is_squarefree",
    "poly_pow",
    "squarefree_decomposition",
    "ugcd",
    "usquarefree",
]
