"""Canonical text rendering that the expression parser reads back exactly."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from polyleaf.algebra.gaussian import GaussianRational


def _q(x: Fraction) -> str:
    return str(x)


def _term(c: GaussianRational, mono: str) -> tuple[bool, str]:
    """Return (negative, text) for ``c * mono`` with the sign pulled out."""
    re, im = c.re, c.im
    if im == 0 or re == 0:
        val = re if im == 0 else im
        neg = val < 0
        mag = abs(val)
        if im == 0:
            body = "" if mag == 1 and mono else _q(mag)
        else:
            body = "i" if mag == 1 else f"{_q(mag)}*i"
    else:
        neg = False
        sign = "+" if im > 0 else "-"
        imag = "i" if abs(im) == 1 else f"{_q(abs(im))}*i"
        body = f"({_q(re)} {sign} {imag})"
    if not mono:
        return neg, body
    if not body:
        return neg, mono
    return neg, f"{body}*{mono}"


def format_terms(terms: Iterable[tuple[GaussianRational, str]]) -> str:
    parts: list[str] = []
    for c, mono in terms:
        neg, text = _term(c, mono)
        if not parts:
            parts.append(f"-{text}" if neg else text)
        else:
            parts.append(f" - {text}" if neg else f" + {text}")
    return "".join(parts) if parts else "0"


def monomial_text(e1: int, e2: int) -> str:
    factors = []
    for name, e in (("z1", e1), ("z2", e2)):
        if e == 1:
            factors.append(name)
        elif e > 1:
            factors.append(f"{name}^{e}")
    return "*".join(factors)
