"""Is P a proper power in C[[z1, z2]]?  And is C^n - P irreducible?

A polynomial is an m-th power of a formal power series exactly when it is
zero, a unit (nonzero constant term), or m divides the exponent of every
squarefree factor through the origin. ``power_order`` reads the largest
such m off an exact squarefree decomposition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import reduce

import mpmath
import numpy as np

from polyleaf.algebra import (
    GaussianRational,
    Polynomial,
    SquarefreeDecomposition,
    UnivariatePoly,
    poly_pow,
    squarefree_decomposition,
    usquarefree,
)
from polyleaf.errors import (
    CertificateFailedError,
    NotAPowerError,
    NumericError,
    ZeroPolynomialError,
)
from polyleaf.numeric import find_roots

CERTIFICATE_TOL = 1e-9
DEFAULT_TRUNCATION = 12
CLUSTER_RADIUS = 1e-6


@dataclass(frozen=True)
class PowerReport:
    """``rho`` is None when P is a power of every order (zero or a unit)."""

    rho: int | None
    vanishing_exponents: tuple[int, ...]
    decomposition: SquarefreeDecomposition | None

    @property
    def is_infinite(self) -> bool:
        return self.rho is None

    def admits_root(self, m: int) -> bool:
        return self.rho is None or self.rho % m == 0

    @property
    def rho_text(self) -> str:
        return "infinite" if self.rho is None else str(self.rho)


def power_order(p: Polynomial) -> PowerReport:
    if p.is_zero():
        return PowerReport(None, (), None)
    dec = squarefree_decomposition(p)
    if not p.constant_term().is_zero():
        return PowerReport(None, (), dec)
    vanishing = tuple(e for g, e in dec.factors if g.constant_term().is_zero())
    return PowerReport(reduce(math.gcd, vanishing), vanishing, dec)


def is_theorem_hypothesis(p: Polynomial) -> bool:
    """P nonconstant and not a proper power in the power series ring."""
    if p.is_constant():
        return False
    return power_order(p).rho == 1


# -- series certificates ------------------------------------------------------

@dataclass(frozen=True)
class SeriesCertificate:
    m: int
    truncation_order: int
    root: dict[tuple[int, int], complex]
    residual: float


def _gmul(a: list[np.ndarray], b: list[np.ndarray], top: int) -> list[np.ndarray]:
    """Product of graded series (component d = coefficients of z1^j z2^(d-j)),
    truncated above total degree ``top``."""
    out = [np.zeros(d + 1, dtype=complex) for d in range(top + 1)]
    for i, x in enumerate(a):
        if i > top or not x.any():
            continue
        for k, y in enumerate(b):
            if i + k > top:
                break
            if y.any():
                out[i + k] += np.convolve(x, y)
    return out


def _gpow(a: list[np.ndarray], m: int, top: int) -> list[np.ndarray]:
    out = [np.ones(1, dtype=complex)] + [np.zeros(d + 1, dtype=complex) for d in range(1, top + 1)]
    for _ in range(m):
        out = _gmul(out, a, top)
    return out


def _graded(p: Polynomial, top: int) -> list[np.ndarray]:
    out = [np.zeros(d + 1, dtype=complex) for d in range(top + 1)]
    for (a, b), c in p.terms.items():
        if a + b <= top:
            out[a + b][a] += complex(c)
    return out


def _initial_root_form(p: Polynomial, m: int) -> np.ndarray:
    """Coefficient sequence of an m-th root of the initial form of p.

    The dehomogenized initial form is split exactly into squarefree parts;
    each part is solved numerically and contributes linear forms z1 - r*z2.
    """
    nu = p.order
    init = p.homogeneous_part(nu)
    u = UnivariatePoly(init.coeff(j, nu - j) for j in range(nu + 1))
    z2_power = nu - u.degree
    parts = usquarefree(u)
    if z2_power % m or any(e % m for _, e in parts):
        raise CertificateFailedError("initial form is not an m-th power")

    roots: list[tuple[complex, int]] = []
    for s, e in parts:
        for r in find_roots(s.to_complex()).roots:
            roots.append((r, e // m))
    if len(roots) > 1:
        rs = np.array([r for r, _ in roots])
        scale = max(1.0, float(np.max(np.abs(rs))))
        gaps = np.abs(rs[:, None] - rs[None, :])
        np.fill_diagonal(gaps, np.inf)
        if gaps.min() < CLUSTER_RADIUS * scale:
            raise CertificateFailedError("root clusters of the initial form are not separated")

    seq = np.array([complex(u.leading()) ** (1.0 / m)], dtype=complex)
    seq = np.concatenate([seq, np.zeros(z2_power // m, dtype=complex)])  # times z2^k
    for r, k in roots:
        for _ in range(k):
            seq = np.convolve(seq, np.array([-r, 1.0], dtype=complex))
    return seq


def power_certificate(p: Polynomial, m: int, N: int = DEFAULT_TRUNCATION) -> SeriesCertificate:
    """Truncated series Q with Q**m = P up to total degree N.

    Homogeneous components of Q are found degree by degree: with q0 the m-th
    root of the initial form, component k solves
    ``m * q0**(m-1) * q_k = P_(nu+k) - [ (q0 + ... + q_(k-1))**m ]_(nu+k)``,
    a linear deconvolution solved in least squares.
    """
    if m < 2:
        raise ValueError("root order m must be at least 2")
    if p.is_zero():
        raise ZeroPolynomialError("certificate for the zero polynomial")
    report = power_order(p)
    if not report.admits_root(m):
        raise NotAPowerError(f"P is not an {m}-th power (rho = {report.rho_text})")

    nu = p.order
    delta = nu // m
    try:
        q0 = _initial_root_form(p, m)
    except NumericError as exc:
        raise CertificateFailedError(f"initial form root finding failed: {exc}") from exc
    if len(q0) != delta + 1:
        raise CertificateFailedError("initial root form has the wrong degree")

    top = max(N, nu)
    target = _graded(p, nu + max(0, N - delta))
    Q = [np.zeros(d + 1, dtype=complex) for d in range(delta)] + [q0]
    lead = _gpow([np.zeros(d + 1, dtype=complex) for d in range(delta)] + [q0], m - 1, (m - 1) * delta)
    lead_seq = m * lead[(m - 1) * delta]

    for k in range(1, N - delta + 1):
        deg = nu + k
        rhs = target[deg] - _gpow(Q, m, deg)[deg]
        ncol = delta + k + 1
        mat = np.zeros((deg + 1, ncol), dtype=complex)
        for j in range(ncol):
            mat[j : j + len(lead_seq), j] = lead_seq
        qk = np.linalg.lstsq(mat, rhs, rcond=None)[0]
        Q.append(qk)

    power = _gpow(Q, m, top)
    ref = _graded(p, top)
    pmax = max(abs(complex(c)) for c in p.terms.values())
    residual = max(float(np.max(np.abs(power[d] - ref[d]))) for d in range(N + 1)) / pmax
    if not np.isfinite(residual) or residual > CERTIFICATE_TOL:
        raise CertificateFailedError(f"series residual {residual:.3g} above {CERTIFICATE_TOL:g}", residual)

    root = {}
    for d, comp in enumerate(Q):
        for j, c in enumerate(comp):
            if c != 0:
                root[(j, d - j)] = complex(c)
    return SeriesCertificate(m, N, root, residual)


# -- exact roots and C^n - P --------------------------------------------------

def gaussian_root(u: GaussianRational, m: int) -> GaussianRational | None:
    """An exact m-th root of u in Q(i), or None when there is none."""
    if u.is_zero():
        return u
    a, b, d = u._a, u._b, u._d
    # (w*d)^m = (a + b i) d^(m-1), and w*d is a Gaussian integer
    scale = d ** (m - 1)
    ma, mb = a * scale, b * scale
    digits = len(str(max(abs(ma), abs(mb)))) // m + 30
    with mpmath.workdps(digits):
        base = mpmath.root(mpmath.mpc(ma, mb), m)
        for k in range(m):
            z = base * mpmath.expjpi(mpmath.mpf(2 * k) / m)
            r = GaussianRational(int(mpmath.nint(z.real)), int(mpmath.nint(z.imag)))
            if r ** m == GaussianRational(ma, mb):
                return r / d
    return None


def poly_root(p: Polynomial, m: int) -> Polynomial | None:
    """B with B**m == P exactly in Q(i)[z1, z2], or None."""
    if p.is_zero():
        return p
    dec = squarefree_decomposition(p)
    if any(e % m for _, e in dec.factors):
        return None
    unit = gaussian_root(dec.unit, m)
    if unit is None:
        return None
    out = Polynomial.constant(unit)
    for g, e in dec.factors:
        out = out * poly_pow(g, e // m)
    return out


CPoly = tuple[Polynomial, ...]


def cpoly_mul(a: CPoly, b: CPoly) -> CPoly:
    out = [Polynomial() for _ in range(len(a) + len(b) - 1)]
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = out[i + j] + x * y
    return tuple(out)


def cpoly_text(a: CPoly) -> str:
    parts = []
    for k in range(len(a) - 1, -1, -1):
        c = a[k]
        if c.is_zero():
            continue
        cvar = "" if k == 0 else ("C" if k == 1 else f"C^{k}")
        if not cvar:
            parts.append(c.to_text())
            continue
        if c == Polynomial.constant(1):
            parts.append(cvar)
        elif c == Polynomial.constant(-1):
            parts.append(f"-{cvar}")
        else:
            parts.append(f"({c.to_text()})*{cvar}")
    text = " + ".join(parts) if parts else "0"
    return text.replace("+ -", "- ")


def c_minus_p(p: Polynomial, n: int) -> CPoly:
    return (-p,) + tuple(Polynomial() for _ in range(n - 1)) + (Polynomial.constant(1),)


def _coef_degree(a: CPoly) -> int:
    return max((c.total_degree for c in a if not c.is_zero()), default=0)


def witness_search(p: Polynomial, n: int, bound: int) -> tuple[CPoly, CPoly] | None:
    """Exact factorization C^n - P = A*B over Q(i) with z-degrees <= bound.

    Splits are tried for every divisor m > 1 of n: A = C^(n/m) - B0 with
    B0**m = P, whose cofactor follows from the top coefficients downward as
    sum_j C^((n/m)(m-1-j)) B0^j. Over Q(i) no other shape needs checking,
    since X^n - a splits iff a is a p-th power for some prime p | n.
    The witness with the smallest coefficient degree wins; ties go to the
    smaller m.
    """
    if p.is_zero():
        raise ZeroPolynomialError("C^n - 0 search")
    best = None
    for m in range(2, n + 1):
        if n % m:
            continue
        b0 = poly_root(p, m)
        if b0 is None:
            continue
        k = n // m
        zero = Polynomial()
        a = (-b0,) + (zero,) * (k - 1) + (Polynomial.constant(1),)
        bcoef = [zero] * (k * (m - 1) + 1)
        power = Polynomial.constant(1)
        for j in range(m):
            bcoef[k * (m - 1 - j)] = power
            power = power * b0
        b = tuple(bcoef)
        deg = max(_coef_degree(a), _coef_degree(b))
        if deg > bound:
            continue
        if best is None or deg < best[0]:
            best = (deg, a, b)
    if best is None:
        return None
    _, a, b = best
    if cpoly_mul(a, b) != c_minus_p(p, n):
        raise AssertionError("witness does not re-multiply to C^n - P")
    return a, b


@dataclass(frozen=True)
class CnPStatus:
    verdict: str  # "IrreducibleCertified" | "Reducible" | "Unknown"
    witness: tuple[CPoly, CPoly] | None = None
    searched_degree_bound: int | None = None
    report: PowerReport | None = field(default=None, compare=False)


def cn_minus_p_status(p: Polynomial, n: int, factor_degree_bound: int) -> CnPStatus:
    """Irreducibility status of C^n - P in C[z1, z2, C].

    Not-a-power (rho == 1) certifies irreducibility for every n. Otherwise
    the answer comes from a bounded exact witness search, and the absence
    of a witness is reported as Unknown: a power series root need not be a
    polynomial or rational one.
    """
    if p.is_zero():
        raise ZeroPolynomialError("C^n - P with P = 0")
    if n < 1:
        raise ValueError("n must be a positive integer")
    report = power_order(p)
    if report.rho == 1:
        return CnPStatus("IrreducibleCertified", report=report)
    found = witness_search(p, n, factor_degree_bound)
    if found is not None:
        return CnPStatus("Reducible", witness=found, report=report)
    return CnPStatus("Unknown", searched_degree_bound=factor_degree_bound, report=report)
