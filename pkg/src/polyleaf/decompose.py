"""Exact decomposition f = h(P) and its numeric cross-check."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from polyleaf.algebra import GaussianRational, Polynomial, UnivariatePoly
from polyleaf.errors import ConstantPError, LeafSamplingFailedError

FOUND = "Found"
NOT_DECOMPOSABLE = "NotDecomposable"
DEGREE_MISMATCH = "DegreeMismatch"
LEADING_FORM_MISMATCH = "LeadingFormMismatch"
RESIDUAL_NONZERO = "ResidualNonzero"


@dataclass(frozen=True)
class DecompositionResult:
    outcome: str
    h: UnivariatePoly | None = None
    reason: str | None = None
    remainder: Polynomial | None = None

    @property
    def found(self) -> bool:
        return self.outcome == FOUND


def compose(h: UnivariatePoly, p: Polynomial) -> Polynomial:
    """Expand h(P) by Horner's rule in the polynomial ring."""
    acc = Polynomial()
    for c in reversed(h.coeffs):
        acc = acc * p + Polynomial.constant(c)
    return acc


def decompose_exact(f: Polynomial, p: Polynomial) -> DecompositionResult:
    """Find h with f = h(P) by peeling off leading forms, or explain why not.

    Each step matches the leading form of the remainder against a scalar
    multiple of lf(P)**k and subtracts that multiple of P**k. Failures at
    the first step report DegreeMismatch / LeadingFormMismatch; once at
    least one power has been peeled off they report ResidualNonzero.
    """
    if p.is_constant():
        raise ConstantPError("P must be nonconstant")
    if f.is_constant():
        return DecompositionResult(FOUND, h=UnivariatePoly([f.constant_term()]))

    dp = p.total_degree
    df = f.total_degree
    if df % dp:
        return DecompositionResult(NOT_DECOMPOSABLE, reason=DEGREE_MISMATCH, remainder=f)
    top = df // dp
    lead_p = p.homogeneous_part(dp)
    powers = [Polynomial.constant(1), p]
    lead_powers = [Polynomial.constant(1), lead_p]
    for _ in range(2, top + 1):
        powers.append(powers[-1] * p)
        lead_powers.append(lead_powers[-1] * lead_p)

    coeffs = [GaussianRational(0)] * (top + 1)
    rem = f
    first = True
    while not rem.is_constant():
        d = rem.total_degree
        if d % dp:
            return DecompositionResult(
                NOT_DECOMPOSABLE, reason=DEGREE_MISMATCH if first else RESIDUAL_NONZERO, remainder=rem
            )
        k = d // dp
        lf = rem.homogeneous_part(d)
        target = lead_powers[k]
        e, c = target.lex_leading()
        a_k = lf.coeff(*e) / c
        if a_k.is_zero() or lf != target.scale(a_k):
            return DecompositionResult(
                NOT_DECOMPOSABLE, reason=LEADING_FORM_MISMATCH if first else RESIDUAL_NONZERO, remainder=rem
            )
        coeffs[k] = a_k
        rem = rem - powers[k].scale(a_k)
        first = False
    coeffs[0] = rem.constant_term()
    h = UnivariatePoly(coeffs)
    if compose(h, p) != f:
        raise AssertionError("peeled h does not re-expand to f")
    return DecompositionResult(FOUND, h=h)


# -- numeric reconstruction ---------------------------------------------------

@dataclass(frozen=True)
class NumericH:
    h_numeric: list[complex]
    residual: float
    levels: list[complex]


def generic_levels(count: int, rng: np.random.Generator, exclude=(), min_gap: float = 0.05) -> list[complex]:
    """Seeded draws, uniform in area, from the annulus 0.5 <= |c| <= 2.

    Draws closer than ``min_gap`` to an earlier level (or to ``exclude``)
    count as duplicates and are redrawn.
    """
    taken = [complex(c) for c in exclude]
    out: list[complex] = []
    while len(out) < count:
        r = float(np.sqrt(rng.uniform(0.25, 4.0)))
        theta = float(rng.uniform(0.0, 2.0 * np.pi))
        c = complex(r * np.cos(theta), r * np.sin(theta))
        if all(abs(c - t) >= min_gap for t in taken):
            taken.append(c)
            out.append(c)
    return out


def reconstruct_h_numeric(
    f: Polynomial, p: Polynomial, degree_hint: int, seed: int = 0, validation: int = 4
) -> NumericH:
    """Interpolate h from f-values at one point on each of degree_hint + 1 leaves.

    ``residual`` is the largest mismatch between the interpolant and f at
    any sampled point of a disjoint set of validation levels, relative to
    max(1, max |f|).
    """
    from polyleaf.leaves import leaf_values

    if p.is_constant():
        raise ConstantPError("P must be nonconstant")
    if degree_hint < 0:
        raise ValueError("degree_hint must be nonnegative")
    rng = np.random.default_rng(seed)
    levels = generic_levels(degree_hint + 1 + validation, rng)
    fit, check = levels[: degree_hint + 1], levels[degree_hint + 1 :]

    samples = []
    for c in levels:
        vals = leaf_values(f, p, c)
        if vals is None:
            raise LeafSamplingFailedError(f"no point found on the level P = {c}")
        samples.append(vals)

    # fit through the best-resolved point of each leaf, validate on every point
    vander = np.vander(np.array(fit), degree_hint + 1, increasing=True)
    coeffs = np.linalg.solve(vander, np.array([v[0] for v in samples[: degree_hint + 1]]))
    scale = max(1.0, max(float(np.max(np.abs(v))) for v in samples))
    residual = 0.0
    for c, vals in zip(check, samples[degree_hint + 1 :]):
        predicted = np.polyval(coeffs[::-1], c)
        residual = max(residual, float(np.max(np.abs(vals - predicted))))
    return NumericH([complex(c) for c in coeffs], residual / scale, levels)
