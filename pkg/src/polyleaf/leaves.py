"""Sampling level curves P = c and measuring how f behaves on them."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from polyleaf.algebra import Polynomial
from polyleaf.decompose import DecompositionResult, decompose_exact, generic_levels
from polyleaf.errors import (
    ConstantPError,
    EmptyLeafSampleError,
    HypothesisViolatedError,
    NoConvergenceError,
    NumericOverflowError,
)
from polyleaf.numeric import EPS, NumericPoly, find_roots
from polyleaf.power import is_theorem_hypothesis

LEAF_RESIDUAL_TOL = 1e-8
SPREAD_TOL = 1e-8
REFUTATION_SPREAD = 1e-3
DEFAULT_GROWTH_RADII = (1.0, 10.0, 100.0)


@dataclass(frozen=True)
class Grid:
    radii: tuple[float, ...] = (1.0, 2.0, 4.0, 8.0)
    angles_per_radius: int = 16

    def values(self) -> np.ndarray:
        theta = 2.0 * np.pi * np.arange(self.angles_per_radius) / self.angles_per_radius
        return np.concatenate([r * np.exp(1j * theta) for r in self.radii])


@dataclass(frozen=True)
class LeafSample:
    level: complex
    points: tuple[tuple[complex, complex], ...]
    f_values: tuple[complex, ...]
    spread: float
    scale: float
    residual_max: float
    skipped_slices: int = 0
    discarded_points: int = 0

    @property
    def relative_spread(self) -> float:
        return self.spread / self.scale


def _spread(values: np.ndarray) -> float:
    if len(values) < 2:
        return 0.0
    return float(np.max(np.abs(values[:, None] - values[None, :])))


def _solve_slices(pn: NumericPoly, c: complex, fixed: np.ndarray, fixed_var: int):
    """Roots in the free variable of P(fixed, .) = c for each fixed value.

    Returns (z1s, z2s, skipped). Leading coefficients at rounding-noise level
    are treated as vanishing, so such slices contribute fewer points.
    """
    rows, scales = pn.slice_coeffs(fixed, fixed_var)
    rows = rows.copy()
    rows[:, 0] -= c
    scales = scales.copy()
    scales[:, 0] += abs(c)
    noise = 16.0 * (pn.deg1 + pn.deg2 + 2) * EPS * scales
    z1s: list[complex] = []
    z2s: list[complex] = []
    skipped = 0
    for v, row, nz in zip(fixed, rows, noise):
        keep = np.flatnonzero(np.abs(row) > nz)
        if len(keep) == 0 or keep[-1] == 0:
            skipped += 1
            continue
        try:
            roots = find_roots(row[: keep[-1] + 1]).roots
        except NoConvergenceError:
            skipped += 1
            continue
        for r in roots:
            if fixed_var == 1:
                z1s.append(complex(v))
                z2s.append(r)
            else:
                z1s.append(r)
                z2s.append(complex(v))
    return np.array(z1s, dtype=complex), np.array(z2s, dtype=complex), skipped


def _leaf_points(p: Polynomial, c: complex, grid: Grid):
    pn = NumericPoly(p)
    if p.degree_in(2) >= 1:
        return pn, _solve_slices(pn, c, grid.values(), 1)
    # P depends on z1 only: leaves are unions of vertical lines
    z1r, _, skipped = _solve_slices(pn, c, np.zeros(1, dtype=complex), 2)
    z2g = grid.values()
    z1s = np.repeat(z1r, len(z2g))
    z2s = np.tile(z2g, len(z1r))
    return pn, (z1s, z2s, skipped)


def sample_leaf(p: Polynomial, c: complex, grid: Grid = Grid(), f: Polynomial | None = None) -> LeafSample:
    """Points on the curve P = c by slicing at |z1| = r, plus f-values if given.

    Points with |P - c| above 1e-8 * (|c| + 1) are discarded.
    """
    if p.is_constant():
        raise ConstantPError("P must be nonconstant")
    c = complex(c)
    pn, (z1s, z2s, skipped) = _leaf_points(p, c, grid)
    if len(z1s) == 0:
        raise EmptyLeafSampleError(f"no slice of P = {c} produced a point")
    res = np.abs(pn.evaluate_accurate(z1s, z2s) - c)
    ok = res <= LEAF_RESIDUAL_TOL * (abs(c) + 1.0)
    if not np.any(ok):
        raise EmptyLeafSampleError(f"all sampled points of P = {c} failed the residual check")
    z1s, z2s, res = z1s[ok], z2s[ok], res[ok]
    discarded = int(np.count_nonzero(~ok))

    if f is None:
        values = np.zeros(0, dtype=complex)
    else:
        values = NumericPoly(f).evaluate_accurate(z1s, z2s)
    scale = max(1.0, float(np.max(np.abs(values)))) if len(values) else 1.0
    return LeafSample(
        level=c,
        points=tuple(zip(z1s.tolist(), z2s.tolist())),
        f_values=tuple(values.tolist()),
        spread=_spread(values),
        scale=scale,
        residual_max=float(np.max(res)),
        skipped_slices=skipped,
        discarded_points=discarded,
    )


def leaf_values(f: Polynomial, p: Polynomial, c: complex) -> np.ndarray | None:
    """f on a small sample of the leaf P = c, best-resolved point first."""
    try:
        leaf = sample_leaf(p, c, Grid(radii=(1.0,), angles_per_radius=4))
    except (EmptyLeafSampleError, NumericOverflowError):
        return None
    pts = np.array(leaf.points)
    res = np.abs(NumericPoly(p).evaluate_accurate(pts[:, 0], pts[:, 1]) - complex(c))
    order = np.argsort(res, kind="stable")
    return NumericPoly(f).evaluate_accurate(pts[order, 0], pts[order, 1])


@dataclass(frozen=True)
class LevelSpread:
    level: complex
    relative_spread: float | None
    points: int = 0
    failure: str | None = None


def leaf_spread_report(
    f: Polynomial, p: Polynomial, levels, grid: Grid = Grid()
) -> list[LevelSpread]:
    """Relative spread of f on each level; failed levels carry a failure marker."""
    if p.is_constant():
        raise ConstantPError("P must be nonconstant")
    out = []
    for c in levels:
        try:
            leaf = sample_leaf(p, c, grid, f)
        except (EmptyLeafSampleError, NumericOverflowError) as exc:
            out.append(LevelSpread(complex(c), None, 0, f"{type(exc).__name__}: {exc}"))
            continue
        out.append(LevelSpread(complex(c), leaf.relative_spread, len(leaf.points)))
    return out


@dataclass(frozen=True)
class GrowthTable:
    radii: tuple[float, ...]
    max_abs_f: tuple[float | None, ...]
    overflowed: bool
    empty_radii: tuple[float, ...] = ()

    def grows(self, factor: float = 2.0) -> bool:
        """max |f| increases by at least ``factor`` per decade of radius."""
        vals = self.max_abs_f
        if len(vals) < 2 or any(v is None for v in vals):
            return False
        for (r0, v0), (r1, v1) in zip(zip(self.radii, vals), zip(self.radii[1:], vals[1:])):
            decades = np.log10(r1 / r0)
            if not (v1 > v0 and v1 >= v0 * factor ** decades):
                return False
        return True


def growth_probe(f: Polynomial, p: Polynomial, c: complex, radii=(1.0, 10.0, 100.0, 1000.0),
                 angles: int = 16) -> GrowthTable:
    """Largest |f| on the leaf P = c where max(|z1|, |z2|) reaches each radius.

    Each radius is probed by slicing at |z1| = R and, when P depends on z1,
    at |z2| = R. Points are kept when |P - c| is within 1e-8 of
    |c| + 1 + sum |terms of P|, since absolute residuals at large radii are
    dominated by rounding. Overflow is recorded as an infinite entry.
    """
    if p.is_constant():
        raise ConstantPError("P must be nonconstant")
    radii = tuple(float(r) for r in radii)
    if any(b <= a for a, b in zip(radii, radii[1:])):
        raise ValueError("radii must be increasing")
    c = complex(c)
    pn, fn = NumericPoly(p), NumericPoly(f)
    theta = 2.0 * np.pi * np.arange(angles) / angles
    maxima: list[float | None] = []
    empty: list[float] = []
    overflowed = False
    for r in radii:
        ring = r * np.exp(1j * theta)
        try:
            z1s, z2s = [], []
            if p.degree_in(2) >= 1:
                a, b, _ = _solve_slices(pn, c, ring, 1)
                z1s.append(a)
                z2s.append(b)
            if p.degree_in(1) >= 1:
                a, b, _ = _solve_slices(pn, c, ring, 2)
                z1s.append(a)
                z2s.append(b)
            z1 = np.concatenate(z1s)
            z2 = np.concatenate(z2s)
            if len(z1):
                vals = pn.evaluate_accurate(z1, z2)
                tol = LEAF_RESIDUAL_TOL * (abs(c) + 1.0 + pn.abs_sum(z1, z2))
                ok = np.abs(vals - c) <= tol
                z1, z2 = z1[ok], z2[ok]
            if len(z1) == 0:
                maxima.append(None)
                empty.append(r)
                continue
            maxima.append(float(np.max(np.abs(fn.evaluate_accurate(z1, z2)))))
        except NumericOverflowError:
            overflowed = True
            maxima.append(float("inf"))
    return GrowthTable(radii, tuple(maxima), overflowed, tuple(empty))


@dataclass(frozen=True)
class TheoremConfig:
    num_levels: int = 8
    grid: Grid = field(default_factory=Grid)
    spread_tol: float = SPREAD_TOL
    seed: int = 0
    growth_radii: tuple[float, ...] = DEFAULT_GROWTH_RADII


@dataclass(frozen=True)
class TheoremVerdict:
    exact: DecompositionResult
    leaf_spreads: tuple[LevelSpread, ...]
    consistent: bool
    growth: GrowthTable | None = None
    spread_tol: float = SPREAD_TOL

    @property
    def constant_on_leaves(self) -> bool:
        return all(s.relative_spread is not None and s.relative_spread <= self.spread_tol
                   for s in self.leaf_spreads)

    @property
    def refuted(self) -> bool:
        """Some leaf shows clear non-constancy, or f grows along a leaf."""
        big = any(s.relative_spread is not None and s.relative_spread >= REFUTATION_SPREAD
                  for s in self.leaf_spreads)
        return big or (self.growth is not None and self.growth.grows())


def theorem_check(f: Polynomial, p: Polynomial, config: TheoremConfig = TheoremConfig()) -> TheoremVerdict:
    """Compare the exact decomposition with the leafwise behaviour of f.

    ``consistent`` holds when f = h(P) was found exactly precisely if f is
    constant (within ``spread_tol``) on every sampled generic leaf.
    """
    if not is_theorem_hypothesis(p):
        raise HypothesisViolatedError("P is constant or a proper power in C[[z1, z2]]")
    exact = decompose_exact(f, p)
    levels = generic_levels(config.num_levels, np.random.default_rng(config.seed))
    spreads = tuple(leaf_spread_report(f, p, levels, config.grid))
    constant = all(s.relative_spread is not None and s.relative_spread <= config.spread_tol for s in spreads)
    growth = None
    if not exact.found:
        measured = [s for s in spreads if s.relative_spread is not None]
        worst = max(measured, key=lambda s: s.relative_spread).level if measured else levels[0]
        growth = growth_probe(f, p, worst, config.growth_radii)
    return TheoremVerdict(exact, spreads, exact.found == constant, growth, config.spread_tol)
