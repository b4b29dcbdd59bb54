"""Seeded theorem corpus: decomposable compositions and monomial perturbations.

A perturbation adds c*z1^a*z2^b with a + b not a multiple of deg P. Any
nonconstant k(P) has degree divisible by deg P, so h(P) + monomial is
never itself a composition with P.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from helpers import rand_poly, rand_scalar, rand_upoly
from polyleaf.algebra import Polynomial, UnivariatePoly
from polyleaf.decompose import compose
from polyleaf.power import power_order


@dataclass(frozen=True)
class Case:
    f: Polynomial
    p: Polynomial
    h: UnivariatePoly | None  # None for perturbed cases


def theorem_p(rng: random.Random) -> Polynomial:
    """Random P of degree 2 or 3 through the origin that is not a power."""
    while True:
        p = rand_poly(rng, rng.randint(2, 3), nterms=rng.randint(2, 4), const=False)
        if power_order(p).rho == 1:
            return p


def build_corpus(seed: int = 2718, size: int = 30) -> tuple[list[Case], list[Case]]:
    rng = random.Random(seed)
    decomposable, perturbed = [], []
    for _ in range(size):
        p = theorem_p(rng)
        h = rand_upoly(rng, rng.randint(1, 3))
        decomposable.append(Case(compose(h, p), p, h))
    for _ in range(size):
        p = theorem_p(rng)
        f = compose(rand_upoly(rng, rng.randint(1, 3)), p)
        dp = p.total_degree
        while True:
            d = rng.randint(1, f.total_degree + 1)
            if d % dp:
                break
        a = rng.randint(0, d)
        perturbed.append(Case(f + Polynomial.monomial(a, d - a, rand_scalar(rng)), p, None))
    return decomposable, perturbed
