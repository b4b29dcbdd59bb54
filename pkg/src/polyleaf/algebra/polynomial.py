"""Sparse bivariate polynomials in z1, z2 over Q(i)."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from polyleaf.algebra.gaussian import ONE, ZERO, GaussianRational
from polyleaf.algebra.text import format_terms, monomial_text
from polyleaf.algebra.univariate import UnivariatePoly
from polyleaf.errors import ZeroPolynomialError

Exponent = tuple[int, int]

_G = GaussianRational.coerce


class Polynomial:
    """Immutable sparse polynomial ``sum(c * z1**e1 * z2**e2)``.

    ``terms`` maps exponent pairs to nonzero coefficients; the zero
    polynomial is the empty map.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Exponent, object] | Iterable[tuple[Exponent, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Exponent, GaussianRational] = {}
        for (e1, e2), c in items:
            if e1 < 0 or e2 < 0:
                raise ValueError(f"negative exponent ({e1}, {e2})")
            c = _G(c)
            key = (int(e1), int(e2))
            if key in clean:
                c = clean[key] + c
            if c.is_zero():
                clean.pop(key, None)
            else:
                clean[key] = c
        self.terms: dict[Exponent, GaussianRational] = clean
        self._hash = None

    @classmethod
    def _trusted(cls, terms: dict[Exponent, GaussianRational]) -> Polynomial:
        obj = object.__new__(cls)
        obj.terms = terms
        obj._hash = None
        return obj

    @classmethod
    def constant(cls, c) -> Polynomial:
        return cls({(0, 0): c})

    @classmethod
    def z1(cls) -> Polynomial:
        return cls._trusted({(1, 0): ONE})

    @classmethod
    def z2(cls) -> Polynomial:
        return cls._trusted({(0, 1): ONE})

    @classmethod
    def monomial(cls, e1: int, e2: int, c=1) -> Polynomial:
        return cls({(e1, e2): c})

    # -- structure ------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and (0, 0) in self.terms)

    def constant_term(self) -> GaussianRational:
        return self.terms.get((0, 0), ZERO)

    def coeff(self, e1: int, e2: int) -> GaussianRational:
        return self.terms.get((e1, e2), ZERO)

    @property
    def total_degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("total degree of the zero polynomial")
        return max(a + b for a, b in self.terms)

    @property
    def order(self) -> int:
        if not self.terms:
            raise ZeroPolynomialError("order of the zero polynomial")
        return min(a + b for a, b in self.terms)

    def degree_in(self, var: int) -> int:
        """Degree in z1 (var=1) or z2 (var=2); -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(e[var - 1] for e in self.terms)

    def homogeneous_part(self, d: int) -> Polynomial:
        return Polynomial._trusted({e: c for e, c in self.terms.items() if e[0] + e[1] == d})

    def lex_leading(self) -> tuple[Exponent, GaussianRational]:
        """Term with the lexicographically largest exponent pair (z1-major)."""
        if not self.terms:
            raise ZeroPolynomialError("leading term of the zero polynomial")
        e = max(self.terms)
        return e, self.terms[e]

    def normalized(self) -> Polynomial:
        """Scalar multiple whose lex-leading coefficient is 1."""
        if not self.terms:
            return self
        return self.scale(self.lex_leading()[1].inverse())

    # -- ring operations ------------------------------------------------------

    def __add__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for e, c in other.terms.items():
            s = out.get(e)
            if s is None:
                out[e] = c
            else:
                s = s + c
                if s.is_zero():
                    del out[e]
                else:
                    out[e] = s
        return Polynomial._trusted(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial._trusted({e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        if len(other.terms) == 1 and (0, 0) in other.terms:
            return self.scale(other.terms[(0, 0)])
        out: dict[Exponent, GaussianRational] = {}
        get = out.get
        for (a1, a2), x in self.terms.items():
            for (b1, b2), y in other.terms.items():
                key = (a1 + b1, a2 + b2)
                s = get(key)
                out[key] = x * y if s is None else s + x * y
        return Polynomial._trusted({e: c for e, c in out.items() if not c.is_zero()})

    __rmul__ = __mul__

    def scale(self, c) -> Polynomial:
        c = _G(c)
        if c.is_zero():
            return Polynomial()
        return Polynomial._trusted({e: v * c for e, v in self.terms.items()})

    def __pow__(self, k: int) -> Polynomial:
        return poly_pow(self, k)

    def shift(self, e1: int, e2: int) -> Polynomial:
        """Multiply by the monomial z1**e1 * z2**e2."""
        return Polynomial._trusted({(a + e1, b + e2): c for (a, b), c in self.terms.items()})

    def diff(self, var: int) -> Polynomial:
        """Partial derivative with respect to z1 (var=1) or z2 (var=2)."""
        out = {}
        for (a, b), c in self.terms.items():
            k = a if var == 1 else b
            if k:
                out[(a - 1, b) if var == 1 else (a, b - 1)] = c * k
        return Polynomial._trusted(out)

    def evaluate(self, z1, z2) -> GaussianRational:
        return evaluate(self, z1, z2)

    # -- z2-major view --------------------------------------------------------

    def coeffs_in_z2(self) -> list[UnivariatePoly]:
        """Coefficients of z2**k as univariate polynomials in z1."""
        if not self.terms:
            return []
        n = self.degree_in(2) + 1
        rows: list[dict[int, GaussianRational]] = [{} for _ in range(n)]
        for (a, b), c in self.terms.items():
            rows[b][a] = c
        out = []
        for row in rows:
            m = max(row) + 1 if row else 0
            out.append(UnivariatePoly(row.get(k, ZERO) for k in range(m)))
        return out

    @classmethod
    def from_coeffs_in_z2(cls, coeffs: Iterable[UnivariatePoly]) -> Polynomial:
        out = {}
        for b, u in enumerate(coeffs):
            for a, c in enumerate(u.coeffs):
                if not c.is_zero():
                    out[(a, b)] = c
        return cls._trusted(out)

    @classmethod
    def from_univariate(cls, u: UnivariatePoly, var: int = 1) -> Polynomial:
        return cls._trusted(
            {((k, 0) if var == 1 else (0, k)): c for k, c in enumerate(u.coeffs) if not c.is_zero()}
        )

    # -- comparison / text ----------------------------------------------------

    def __eq__(self, other):
        other = _as_poly(other)
        if other is None:
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self) -> list[tuple[Exponent, GaussianRational]]:
        """Terms by descending total degree, then descending z1 exponent."""
        return sorted(self.terms.items(), key=lambda t: (-(t[0][0] + t[0][1]), -t[0][0]))

    def to_text(self) -> str:
        return format_terms((c, monomial_text(*e)) for e, c in self.sorted_terms())

    def __str__(self):
        return self.to_text()

    def __repr__(self):
        return f"Polynomial({self.to_text()!r})"


def _as_poly(value) -> Polynomial | None:
    if isinstance(value, Polynomial):
        return value
    if isinstance(value, (GaussianRational, int)) or hasattr(value, "denominator"):
        return Polynomial({(0, 0): value})
    return None


# -- module-level operations --------------------------------------------------

def arith(a: Polynomial, b: Polynomial, kind: str) -> Polynomial:
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"unknown arithmetic kind {kind!r}")


def poly_pow(p: Polynomial, k: int) -> Polynomial:
    if k < 0:
        raise ValueError("negative power of a polynomial")
    result = Polynomial._trusted({(0, 0): ONE})
    base = p
    while k:
        if k & 1:
            result = result * base
        k >>= 1
        if k:
            base = base * base
    return result


def evaluate(p: Polynomial, z1, z2) -> GaussianRational:
    """Exact value of ``p`` at (z1, z2), nested Horner in z2 then z1."""
    z1 = _G(z1)
    z2 = _G(z2)
    acc = ZERO
    for u in reversed(p.coeffs_in_z2()):
        acc = acc * z2 + u.evaluate(z1)
    return acc


@dataclass(frozen=True)
class DegreeData:
    total_degree: int
    order: int
    leading_form: Polynomial
    initial_form: Polynomial


def degree_data(p: Polynomial) -> DegreeData:
    if p.is_zero():
        raise ZeroPolynomialError("degree data of the zero polynomial")
    d, v = p.total_degree, p.order
    return DegreeData(d, v, p.homogeneous_part(d), p.homogeneous_part(v))
