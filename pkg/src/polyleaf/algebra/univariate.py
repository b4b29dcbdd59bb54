"""Dense univariate polynomials over Q(i)."""

from __future__ import annotations

from typing import Iterable

from polyleaf.algebra.gaussian import ONE, ZERO, GaussianRational
from polyleaf.algebra.text import format_terms
from polyleaf.errors import InexactDivisionError

_G = GaussianRational.coerce


class UnivariatePoly:
    """Polynomial ``sum(coeffs[k] * X**k)`` with trailing zeros trimmed.

    The zero polynomial has an empty coefficient list and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_G(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[GaussianRational, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> UnivariatePoly:
        return cls([c])

    @classmethod
    def x(cls) -> UnivariatePoly:
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def leading(self) -> GaussianRational:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __getitem__(self, k: int) -> GaussianRational:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def __eq__(self, other):
        if isinstance(other, UnivariatePoly):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UnivariatePoly({list(map(str, self.coeffs))})"

    def __str__(self):
        return self.to_text("X")

    # -- ring operations ----------------------------------------------------

    def __add__(self, other):
        other = _as_upoly(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UnivariatePoly(self[k] + other[k] for k in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UnivariatePoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_upoly(other))

    def __rsub__(self, other):
        return _as_upoly(other) - self

    def __mul__(self, other):
        other = _as_upoly(other)
        if self.is_zero() or other.is_zero():
            return UnivariatePoly()
        out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return UnivariatePoly(out)

    __rmul__ = __mul__

    def scale(self, c) -> UnivariatePoly:
        c = _G(c)
        return UnivariatePoly(a * c for a in self.coeffs)

    def __pow__(self, k: int) -> UnivariatePoly:
        result = UnivariatePoly([ONE])
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divmod(self, other: UnivariatePoly) -> tuple[UnivariatePoly, UnivariatePoly]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return UnivariatePoly(), self
        inv_lead = other.leading().inverse()
        quot = [ZERO] * (dq + 1)
        n = len(other.coeffs)
        for k in range(dq, -1, -1):
            c = rem[k + n - 1] * inv_lead
            quot[k] = c
            if c.is_zero():
                continue
            for j, b in enumerate(other.coeffs):
                rem[k + j] = rem[k + j] - c * b
        return UnivariatePoly(quot), UnivariatePoly(rem[: n - 1])

    def exact_div(self, other: UnivariatePoly) -> UnivariatePoly:
        q, r = self.divmod(other)
        if not r.is_zero():
            raise InexactDivisionError("univariate division leaves a remainder")
        return q

    def monic(self) -> UnivariatePoly:
        if self.is_zero():
            return self
        return self.scale(self.leading().inverse())

    def derivative(self) -> UnivariatePoly:
        return UnivariatePoly(c * k for k, c in enumerate(self.coeffs) if k > 0)

    def evaluate(self, x) -> GaussianRational:
        """Exact Horner evaluation at a Gaussian rational."""
        x = _G(x)
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def to_complex(self) -> list[complex]:
        return [complex(c) for c in self.coeffs]

    def to_text(self, var: str = "X") -> str:
        terms = []
        for k in range(self.degree, -1, -1):
            c = self.coeffs[k]
            if not c.is_zero():
                terms.append((c, f"{var}^{k}" if k > 1 else (var if k == 1 else "")))
        return format_terms(terms)


def _as_upoly(value) -> UnivariatePoly:
    if isinstance(value, UnivariatePoly):
        return value
    return UnivariatePoly([value])


def ugcd(a: UnivariatePoly, b: UnivariatePoly) -> UnivariatePoly:
    """Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0."""
    # monic remainders keep coefficient growth in check
    a, b = a.monic(), b.monic()
    while not b.is_zero():
        a, b = b, a.divmod(b)[1].monic()
    return a


def usquarefree(p: UnivariatePoly) -> list[tuple[UnivariatePoly, int]]:
    """Yun's algorithm: monic squarefree, pairwise coprime factors with multiplicities.

    Constant factors are dropped; the unit is ``p.leading()``.
    """
    if p.degree < 1:
        return []
    p = p.monic()
    dp = p.derivative()
    a = ugcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    out = []
    k = 1
    while b.degree >= 1:
        g = ugcd(b, d)
        if g.degree >= 1:
            out.append((g, k))
        b = b.exact_div(g)
        c = d.exact_div(g)
        d = c - b.derivative()
        k += 1
    return out
