"""Exact division, gcd and squarefree decomposition in Q(i)[z1, z2].

Polynomials are viewed as univariate in z2 with coefficients in Q(i)[z1];
the gcd runs a primitive remainder sequence over that ring, and the
squarefree decomposition is Yun's algorithm in z2 combined with a
univariate decomposition of the z1-content.
"""

from __future__ import annotations

from dataclasses import dataclass

from polyleaf.algebra.gaussian import ONE, GaussianRational
from polyleaf.algebra.polynomial import Polynomial, poly_pow
from polyleaf.algebra.univariate import UnivariatePoly, ugcd, usquarefree
from polyleaf.errors import BothZeroError, InexactDivisionError, ZeroPolynomialError

_Z2Poly = list[UnivariatePoly]


def divide_exact(a: Polynomial, b: Polynomial) -> Polynomial:
    """Quotient ``a / b``; raises InexactDivisionError if b does not divide a."""
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    q, r = divmod_lex(a, b)
    if not r.is_zero():
        raise InexactDivisionError("bivariate division leaves a remainder")
    return q


def divmod_lex(a: Polynomial, b: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Division by b stopping at the first non-divisible lex-leading term.

    The remainder is zero exactly when b divides a.
    """
    (lb1, lb2), lc = b.lex_leading()
    inv = lc.inverse()
    rem = dict(a.terms)
    quot: dict[tuple[int, int], GaussianRational] = {}
    while rem:
        e = max(rem)
        if e[0] < lb1 or e[1] < lb2:
            break
        s1, s2 = e[0] - lb1, e[1] - lb2
        c = rem[e] * inv
        quot[(s1, s2)] = c
        for (b1, b2), bc in b.terms.items():
            key = (b1 + s1, b2 + s2)
            v = rem.get(key)
            v = -(c * bc) if v is None else v - c * bc
            if v.is_zero():
                rem.pop(key, None)
            else:
                rem[key] = v
    return Polynomial(quot), Polynomial(rem)


def divides(b: Polynomial, a: Polynomial) -> bool:
    if b.is_zero():
        return a.is_zero()
    return divmod_lex(a, b)[1].is_zero()


# -- z2-major helpers ---------------------------------------------------------

def _trim(p: _Z2Poly) -> _Z2Poly:
    while p and p[-1].is_zero():
        p.pop()
    return p


def _content(p: _Z2Poly) -> UnivariatePoly:
    g = UnivariatePoly()
    for c in p:
        g = ugcd(g, c)
        if g.degree == 0:
            break
    return g


def _primitive(p: _Z2Poly) -> _Z2Poly:
    if not p:
        return p
    cont = _content(p)
    out = [c.exact_div(cont) for c in p]
    lead = out[-1].leading().inverse()
    return [c.scale(lead) for c in out]


def _prem(a: _Z2Poly, b: _Z2Poly) -> _Z2Poly:
    """Lazy pseudo-remainder of a by b (up to a factor in Q(i)[z1])."""
    r = list(a)
    lb = b[-1]
    n = len(b)
    while len(r) >= n:
        lr = r[-1]
        shift = len(r) - n
        r = [c * lb for c in r]
        for k, bk in enumerate(b):
            r[k + shift] = r[k + shift] - lr * bk
        _trim(r)
        if len(r) >= n:
            r = _primitive(r)
    return r


def gcd_bivariate(a: Polynomial, b: Polynomial) -> Polynomial:
    """Greatest common divisor normalized to lex-leading coefficient 1."""
    if a.is_zero() and b.is_zero():
        raise BothZeroError("gcd of two zero polynomials")
    if a.is_zero():
        return b.normalized()
    if b.is_zero():
        return a.normalized()
    A, B = a.coeffs_in_z2(), b.coeffs_in_z2()
    g_cont = ugcd(_content(A), _content(B))
    A, B = _primitive(A), _primitive(B)
    if len(A) < len(B):
        A, B = B, A
    while B and len(B) > 1:
        A, B = B, _primitive(_prem(A, B))
    g_prim = A if not B else [UnivariatePoly([ONE])]
    g = Polynomial.from_coeffs_in_z2(g_prim) * Polynomial.from_univariate(g_cont)
    return g.normalized()


def is_squarefree(p: Polynomial) -> bool:
    """gcd(p, dp/dz1, dp/dz2) is a scalar."""
    if p.is_constant():
        return True
    g = gcd_bivariate(p, p.diff(1))
    if g.is_constant():
        return True
    return gcd_bivariate(g, p.diff(2)).is_constant()


@dataclass(frozen=True)
class SquarefreeDecomposition:
    """``unit * prod(g**e for g, e in factors)``; factors sorted by exponent."""

    unit: GaussianRational
    factors: tuple[tuple[Polynomial, int], ...]

    def expand(self) -> Polynomial:
        out = Polynomial.constant(self.unit)
        for g, e in self.factors:
            out = out * poly_pow(g, e)
        return out


def squarefree_decomposition(p: Polynomial) -> SquarefreeDecomposition:
    if p.is_zero():
        raise ZeroPolynomialError("squarefree decomposition of the zero polynomial")
    if p.is_constant():
        return SquarefreeDecomposition(p.constant_term(), ())

    coeffs = p.coeffs_in_z2()
    cont = _content(coeffs).monic()
    prim = Polynomial.from_coeffs_in_z2([c.exact_div(cont) for c in coeffs])

    by_exp: dict[int, Polynomial] = {}
    for u, e in usquarefree(cont):
        by_exp[e] = Polynomial.from_univariate(u)
    for g, e in _yun_z2(prim):
        by_exp[e] = by_exp[e] * g if e in by_exp else g

    factors = tuple((by_exp[e].normalized(), e) for e in sorted(by_exp))
    expanded = Polynomial.constant(1)
    for g, e in factors:
        expanded = expanded * poly_pow(g, e)
    unit = p.lex_leading()[1] / expanded.lex_leading()[1]
    return SquarefreeDecomposition(unit, factors)


def _yun_z2(f: Polynomial) -> list[tuple[Polynomial, int]]:
    """Yun's algorithm with respect to z2 for f primitive in z2."""
    if f.degree_in(2) < 1:
        return []
    df = f.diff(2)
    a = gcd_bivariate(f, df)
    b = divide_exact(f, a)
    c = divide_exact(df, a)
    d = c - b.diff(2)
    out = []
    k = 1
    while not b.is_constant():
        g = gcd_bivariate(b, d)
        if not g.is_constant():
            out.append((g, k))
        b = divide_exact(b, g)
        c = divide_exact(d, g)
        d = c - b.diff(2)
        k += 1
    return out
