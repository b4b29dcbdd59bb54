"""Floating-point evaluation and simultaneous-iteration root finding.

Everything here works in IEEE double precision. ``NumericPoly`` evaluates a
polynomial at many points at once together with an a-priori rounding error
bound, and can fall back to an exact evaluation at the (dyadic) input points
when the bound is too loose to be useful.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from polyleaf.algebra import Polynomial
from polyleaf.errors import DegreeZeroError, NoConvergenceError, NumericOverflowError

EPS = np.finfo(float).eps
OVERFLOW_LIMIT = 1e300

DEFAULT_ROOT_TOL = 1e-10
DEFAULT_MAX_ITER = 500
CLUSTER_RESIDUAL_TOL = 1e-6
# irrational angular offset of the initial guesses (golden-ratio conjugate)
_ANGLE_OFFSET = (math.sqrt(5.0) - 1.0) / 2.0


def _check(v: complex) -> complex:
    if not (abs(v) <= OVERFLOW_LIMIT):
        raise NumericOverflowError(f"intermediate magnitude exceeds {OVERFLOW_LIMIT:g}")
    return v


def eval_numeric(p: Polynomial, z1: complex, z2: complex) -> complex:
    """Horner evaluation in z2 over z1-Horner coefficients, one rounding per op."""
    z1 = complex(z1)
    z2 = complex(z2)
    acc = 0j
    for u in reversed(p.coeffs_in_z2()):
        inner = 0j
        for c in reversed(u.coeffs):
            inner = _check(inner * z1 + complex(c))
        acc = _check(acc * z2 + inner)
    return acc


class NumericPoly:
    """Precompiled floating and exact-integer forms of a :class:`Polynomial`."""

    def __init__(self, p: Polynomial):
        self.poly = p
        items = sorted(p.terms.items())
        self.e1 = np.array([e[0] for e, _ in items], dtype=int)
        self.e2 = np.array([e[1] for e, _ in items], dtype=int)
        self.coeffs = np.array([complex(c) for _, c in items], dtype=complex)
        self.abs_coeffs = np.abs(self.coeffs)
        self.deg1 = int(self.e1.max()) if items else 0
        self.deg2 = int(self.e2.max()) if items else 0
        # coefficient grid C[e1, e2]
        self.grid = np.zeros((self.deg1 + 1, self.deg2 + 1), dtype=complex)
        for (a, b), c in items:
            self.grid[a, b] = complex(c)
        self.abs_grid = np.abs(self.grid)
        # common-denominator integer form for exact evaluation
        den = 1
        for _, c in items:
            den = den * c._d // math.gcd(den, c._d)
        self._den = den
        self._int_terms = [(a, b, c._a * (den // c._d), c._b * (den // c._d)) for (a, b), c in items]
        self._gamma = 4.0 * (self.deg1 + self.deg2 + len(items) + 4) * EPS

    def __call__(self, z1, z2) -> np.ndarray:
        return self.evaluate(z1, z2)[0]

    def evaluate(self, z1, z2) -> tuple[np.ndarray, np.ndarray]:
        """Values and rounding-error bounds at the points (z1[k], z2[k])."""
        z1 = np.atleast_1d(np.asarray(z1, dtype=complex))
        z2 = np.atleast_1d(np.asarray(z2, dtype=complex))
        z1, z2 = np.broadcast_arrays(z1, z2)
        if len(self.coeffs) == 0:
            zero = np.zeros(z1.shape, dtype=complex)
            return zero, np.zeros(z1.shape)
        with np.errstate(over="ignore", invalid="ignore"):
            p1 = _powers(z1, self.deg1)
            p2 = _powers(z2, self.deg2)
            mono = p1[..., self.e1] * p2[..., self.e2]
            values = mono @ self.coeffs
            absval = np.abs(mono) @ self.abs_coeffs
        if not np.all(np.isfinite(absval)) or np.any(absval > OVERFLOW_LIMIT):
            raise NumericOverflowError(f"polynomial magnitude exceeds {OVERFLOW_LIMIT:g}")
        return values, self._gamma * absval

    def abs_sum(self, z1, z2) -> np.ndarray:
        """sum |c| |z1|^e1 |z2|^e2 -- the scale of the rounding error."""
        return self.evaluate(z1, z2)[1] / self._gamma

    def evaluate_accurate(self, z1, z2, rel_tol: float = 1e-12) -> np.ndarray:
        """Values whose rounding error is below ``rel_tol * max(1, |value|)``.

        Points where the floating bound is too loose are recomputed exactly.
        """
        values, bound = self.evaluate(z1, z2)
        z1b, z2b = np.broadcast_arrays(np.atleast_1d(np.asarray(z1, dtype=complex)),
                                       np.atleast_1d(np.asarray(z2, dtype=complex)))
        loose = bound > rel_tol * np.maximum(1.0, np.abs(values))
        if np.any(loose):
            values = values.copy()
            for k in np.flatnonzero(loose):
                values[k] = self.eval_exact(complex(z1b[k]), complex(z2b[k]))
        return values

    def eval_exact(self, z1: complex, z2: complex) -> complex:
        """Correctly rounded value at the exact binary values of z1, z2."""
        x1, y1, s1 = _dyadic(z1)
        x2, y2, s2 = _dyadic(z2)
        pw1 = _gauss_int_powers(x1, y1, self.deg1)
        pw2 = _gauss_int_powers(x2, y2, self.deg2)
        sr = si = 0
        for a, b, p, q in self._int_terms:
            ur, ui = pw1[a]
            vr, vi = pw2[b]
            mr, mi = ur * vr - ui * vi, ur * vi + ui * vr
            shift = s1 * (self.deg1 - a) + s2 * (self.deg2 - b)
            sr += (p * mr - q * mi) << shift
            si += (p * mi + q * mr) << shift
        den = self._den << (s1 * self.deg1 + s2 * self.deg2)
        try:
            return complex(sr / den, si / den)
        except OverflowError as exc:
            raise NumericOverflowError("exact value exceeds double range") from exc

    def slice_coeffs(self, values, var: int) -> tuple[np.ndarray, np.ndarray]:
        """Coefficients (and abs-sum scales) of the univariate polynomials
        obtained by fixing z1 (var=1) or z2 (var=2) to each of ``values``.

        Row k holds coefficients in the free variable, index = exponent.
        """
        v = np.atleast_1d(np.asarray(values, dtype=complex))
        if var == 1:
            pw = _powers(v, self.deg1)
            return pw @ self.grid, np.abs(pw) @ self.abs_grid
        pw = _powers(v, self.deg2)
        return pw @ self.grid.T, np.abs(pw) @ self.abs_grid.T


def _powers(z: np.ndarray, d: int) -> np.ndarray:
    out = np.empty(z.shape + (d + 1,), dtype=complex)
    out[..., 0] = 1.0
    for k in range(1, d + 1):
        out[..., k] = out[..., k - 1] * z
    return out


def _dyadic(z: complex) -> tuple[int, int, int]:
    """(X, Y, s) with z == (X + iY) / 2**s exactly."""
    nx, dx = float(z.real).as_integer_ratio()
    ny, dy = float(z.imag).as_integer_ratio()
    s = max(dx.bit_length(), dy.bit_length()) - 1
    return nx << (s - dx.bit_length() + 1), ny << (s - dy.bit_length() + 1), s


def _gauss_int_powers(x: int, y: int, d: int) -> list[tuple[int, int]]:
    out = [(1, 0)]
    for _ in range(d):
        a, b = out[-1]
        out.append((a * x - b * y, a * y + b * x))
    return out


# -- root finding -------------------------------------------------------------

@dataclass(frozen=True)
class RootSet:
    """All roots of a univariate polynomial with normwise backward errors."""

    roots: tuple[complex, ...]
    residuals: tuple[float, ...]
    iterations: int


def _backward_errors(coeffs: np.ndarray, roots: np.ndarray) -> np.ndarray:
    """|p(z)| / (max|a_k| * sum |z|^k) for each root z."""
    if len(roots) == 0:
        return np.zeros(0)
    values = np.polyval(coeffs[::-1], roots)
    r = np.abs(roots)
    k = np.arange(len(coeffs))
    with np.errstate(over="ignore"):
        weights = (r[:, None] ** k[None, :]).sum(axis=1)
    return np.abs(values) / (np.max(np.abs(coeffs)) * weights)


def find_roots(coeffs, tol: float = DEFAULT_ROOT_TOL, max_iter: int = DEFAULT_MAX_ITER) -> RootSet:
    """All roots of ``sum(coeffs[k] * z**k)`` by Weierstrass (Durand-Kerner) iteration.

    Initial guesses sit on the circle of radius ``1 + max|a_k / a_n|`` at
    equally spaced angles rotated by an irrational offset. The iteration
    stops once the largest correction is below ``tol * max(1, max|z|)``.
    Exact zero roots (vanishing low-order coefficients) are split off first.

    Raises:
        DegreeZeroError: the polynomial is constant after trimming zeros.
        NoConvergenceError: some root fails its residual check after
            ``max_iter`` sweeps.
    """
    a = np.asarray(coeffs, dtype=complex).copy()
    nz = np.flatnonzero(a != 0)
    if len(nz) == 0 or nz[-1] == 0:
        raise DegreeZeroError("polynomial has no roots (degree 0)")
    a = a[: nz[-1] + 1]
    n = len(a) - 1
    zeros = int(nz[0])
    b = a[zeros:] / a[-1]
    m = len(b) - 1

    z = np.zeros(0, dtype=complex)
    iters = 0
    if m > 0:
        radius = 1.0 + float(np.max(np.abs(b[:-1])))
        angles = 2.0 * np.pi * np.arange(m) / m + _ANGLE_OFFSET
        z = radius * np.exp(1j * angles)
        rev = b[::-1]
        converged = False
        for iters in range(1, max_iter + 1):
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            denom = diff.prod(axis=1)
            with np.errstate(divide="ignore", invalid="ignore"):
                step = np.polyval(rev, z) / denom
            bad = ~np.isfinite(step)
            if np.any(bad):
                # coincident estimates: nudge deterministically
                step[bad] = 1e-8 * (1 + 1j) * (1 + np.arange(m)[bad])
            z = z - step
            if np.max(np.abs(step)) <= tol * max(1.0, float(np.max(np.abs(z)))):
                converged = True
                break
            # clusters stall at rounding level without small corrections
            if iters % 10 == 0 and np.all(_backward_errors(b, z) <= 16 * EPS):
                break
        if converged:
            # one polishing sweep; quadratic for simple roots
            diff = z[:, None] - z[None, :]
            np.fill_diagonal(diff, 1.0)
            with np.errstate(divide="ignore", invalid="ignore"):
                step = np.polyval(rev, z) / diff.prod(axis=1)
            z = z - np.where(np.isfinite(step), step, 0)

    roots = np.concatenate([np.zeros(zeros, dtype=complex), z])
    residuals = _backward_errors(a, roots)
    limits = _residual_limits(roots, tol)
    if not np.all(np.isfinite(roots)) or np.any(residuals > limits):
        raise NoConvergenceError(
            f"root residual {float(np.max(residuals)):.3g} above tolerance after {iters} iterations"
        )
    assert len(roots) == n
    return RootSet(tuple(complex(r) for r in roots), tuple(float(x) for x in residuals), iters)


def _residual_limits(roots: np.ndarray, tol: float) -> np.ndarray:
    """Per-root tolerance, relaxed up to CLUSTER_RESIDUAL_TOL inside clusters."""
    limits = np.full(len(roots), tol)
    if len(roots) < 2:
        return limits
    scale = max(1.0, float(np.max(np.abs(roots))))
    d = np.abs(roots[:, None] - roots[None, :])
    np.fill_diagonal(d, np.inf)
    clustered = d.min(axis=1) < 1e-3 * scale
    limits[clustered] = max(tol, CLUSTER_RESIDUAL_TOL)
    return limits


def recompose(leading: complex, roots) -> np.ndarray:
    """Coefficients (index = exponent) of leading * prod(z - r)."""
    c = np.array([leading], dtype=complex)
    for r in roots:
        c = np.concatenate([[0], c]) - r * np.concatenate([c, [0]])
    return c
