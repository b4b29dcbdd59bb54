"""Seeded random generators shared by the unit and acceptance tests."""

from __future__ import annotations

import random
from fractions import Fraction

from polyleaf.algebra import GaussianRational, Polynomial, UnivariatePoly


def rand_scalar(rng: random.Random, complex_ok: bool = True) -> GaussianRational:
    num = rng.choice([n for n in range(-5, 6) if n])
    den = rng.choice([1, 1, 1, 2, 3])
    re = Fraction(num, den)
    im = Fraction(rng.randint(-3, 3), rng.choice([1, 2])) if complex_ok and rng.random() < 0.3 else 0
    return GaussianRational(re, im)


def rand_poly(rng: random.Random, deg: int, nterms: int | None = None, const: bool = True,
              complex_ok: bool = True) -> Polynomial:
    """Random polynomial of total degree exactly ``deg`` (for deg >= 0)."""
    monos = [(a, d - a) for d in range(deg + 1) for a in range(d + 1)]
    if not const:
        monos = [m for m in monos if m != (0, 0)]
    top = [m for m in monos if sum(m) == deg]
    nterms = nterms or rng.randint(1, len(monos))
    while True:
        chosen = {rng.choice(top)} | set(rng.sample(monos, min(nterms, len(monos))))
        p = Polynomial({m: rand_scalar(rng, complex_ok) for m in chosen})
        if p.total_degree == deg:
            return p


def rand_upoly(rng: random.Random, deg: int, complex_ok: bool = True) -> UnivariatePoly:
    coeffs = [rand_scalar(rng, complex_ok) if rng.random() < 0.7 else GaussianRational(0) for _ in range(deg)]
    return UnivariatePoly(coeffs + [rand_scalar(rng, complex_ok)])


def to_sympy(p: Polynomial):
    import sympy

    z1, z2 = sympy.symbols("z1 z2")
    out = sympy.Integer(0)
    for (a, b), c in p.terms.items():
        coef = sympy.Rational(c.re.numerator, c.re.denominator) + sympy.I * sympy.Rational(
            c.im.numerator, c.im.denominator
        )
        out += coef * z1**a * z2**b
    return sympy.expand(out)
