"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` or directly with
``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import random
import sys
import time
from functools import lru_cache
from pathlib import Path

import numpy as np
import pytest
import sympy
from scipy.optimize import linear_sum_assignment

sys.path.insert(0, str(Path(__file__).parent))

from corpus import build_corpus  # noqa: E402
from helpers import rand_poly, rand_upoly, to_sympy  # noqa: E402
from polyleaf.algebra import Polynomial  # noqa: E402
from polyleaf.cli.parser import parse_poly, parse_polynomial  # noqa: E402
from polyleaf.decompose import compose, decompose_exact, reconstruct_h_numeric  # noqa: E402
from polyleaf.errors import ExprSyntaxError, NegativeExponentError, UnknownVariableError  # noqa: E402
from polyleaf.leaves import REFUTATION_SPREAD, growth_probe, theorem_check  # noqa: E402
from polyleaf.numeric import find_roots, recompose  # noqa: E402
from polyleaf.power import (  # noqa: E402
    c_minus_p,
    cn_minus_p_status,
    cpoly_mul,
    power_certificate,
    power_order,
)

Z1, Z2 = Polynomial.z1(), Polynomial.z2()
# criterion -> "PASS/FAIL  name: detail", printed by the terminal summary hook
RESULTS: dict[str, str] = {}


def report(name: str, ok: bool, detail: str) -> None:
    RESULTS[name] = f"{'PASS' if ok else 'FAIL'}  {name}: {detail}"


@lru_cache(maxsize=None)
def corpus():
    return build_corpus()


@lru_cache(maxsize=None)
def verdicts():
    dec, per = corpus()
    return [theorem_check(c.f, c.p) for c in dec], [theorem_check(c.f, c.p) for c in per]


# -----------------------------------------------------------------------------

def test_power_criterion_vs_construction():
    rng = random.Random(101)
    start = time.perf_counter()
    bad = []
    for _ in range(200):
        q = rand_poly(rng, rng.randint(1, 3), const=False)
        m = rng.choice([2, 3, 4])
        rho = power_order(q ** m).rho
        if rho is None or rho <= 0 or rho % m:
            bad.append((q.to_text(), m, rho))
    elapsed = time.perf_counter() - start
    ok = not bad and elapsed < 30.0
    report("power criterion vs construction", ok, f"200 pairs, {len(bad)} wrong, {elapsed:.2f} s (limit 30 s)")
    assert ok, bad[:3]


def test_power_criterion_vs_series():
    p = Z1 ** 2 + Z1 ** 3
    rho = power_order(p).rho
    cert = power_certificate(p, 2, 12)
    sign = 1.0 if cert.root[(1, 0)].real > 0 else -1.0
    worst = 0.0
    binom = 1.0
    for k in range(12):
        worst = max(worst, abs(sign * cert.root.get((k + 1, 0), 0) - binom))
        binom *= (0.5 - k) / (k + 1)
    stray = max((abs(c) for (a, b), c in cert.root.items() if b != 0), default=0.0)
    worst = max(worst, stray)
    ok = rho == 2 and cert.residual <= 1e-9 and worst <= 1e-9
    report("power criterion vs series", ok,
           f"rho = {rho}, residual {cert.residual:.2e}, max coefficient error {worst:.2e} (limits 1e-9)")
    assert ok


def test_unit_case_is_infinite():
    rng = random.Random(202)
    bad = 0
    for _ in range(50):
        p = rand_poly(rng, rng.randint(0, 4))
        while p.constant_term().is_zero():
            p = p + rand_poly(rng, 0)
        if power_order(p).rho is not None:
            bad += 1
    report("nonzero constant term gives rho = infinite", bad == 0, f"50 polynomials, {bad} wrong")
    assert bad == 0


def test_cn_minus_p_soundness():
    rng = random.Random(303)
    C = sympy.Symbol("C")
    z1, z2 = sympy.symbols("z1 z2")
    cases = 0
    bad = []
    while cases < 100:
        p = rand_poly(rng, rng.randint(1, 3), const=False)
        if power_order(p).rho != 1:
            continue
        cases += 1
        n = rng.choice([2, 3])
        status = cn_minus_p_status(p, n, p.total_degree)
        # independent oracle 1: complete factorization of C^n - P over Q(i)
        factors = sympy.factor_list(C ** n - to_sympy(p), C, z1, z2, extension=sympy.I)[1]
        splits = len(factors) > 1 or factors[0][1] > 1
        # independent oracle 2: a splitting over C needs P = B^k with k > 1, which
        # forces every squarefree multiplicity of P to share a factor k
        _, sqf = sympy.sqf_list(to_sympy(p), z1, z2)
        g = 0
        for _, e in sqf:
            g = sympy.gcd(g, e)
        if status.verdict != "IrreducibleCertified" or splits or g != 1:
            bad.append((p.to_text(), n, status.verdict, splits, g))
    st = cn_minus_p_status(Z1 ** 2, 2, 2)
    remult = st.verdict == "Reducible" and cpoly_mul(*st.witness) == c_minus_p(Z1 ** 2, 2)
    ok = not bad and remult
    report("C^n - P irreducibility soundness", ok,
           f"100 cases, {len(bad)} disagreements; z1^2, n = 2 witness re-multiplies: {remult}")
    assert ok, bad[:3]


def test_decomposition_round_trip():
    rng = random.Random(404)
    start = time.perf_counter()
    bad = 0
    for _ in range(300):
        p = rand_poly(rng, rng.randint(1, 4))
        h = rand_upoly(rng, rng.randint(0, 6))
        res = decompose_exact(compose(h, p), p)
        if not (res.found and res.h == h):
            bad += 1
    elapsed = time.perf_counter() - start
    ok = bad == 0 and elapsed < 60.0
    report("decomposition round trip", ok, f"300 cases, {bad} not recovered exactly, {elapsed:.2f} s (limit 60 s)")
    assert ok


def test_theorem_equivalence():
    dec, per = corpus()
    vd, vp = verdicts()
    problems = []
    worst_dec = 0.0
    for case, v in zip(dec, vd):
        spreads = [s.relative_spread for s in v.leaf_spreads]
        if any(s is None for s in spreads) or len(spreads) != 8:
            problems.append(("decomposable, failed level", case.f.to_text()))
            continue
        worst_dec = max(worst_dec, max(spreads))
        if not (v.consistent and v.exact.found and max(spreads) <= 1e-8):
            problems.append(("decomposable", case.f.to_text()))
    by_spread = by_growth = 0
    for case, v in zip(per, vp):
        verified = not decompose_exact(case.f, case.p).found
        big = any(s.relative_spread is not None and s.relative_spread >= REFUTATION_SPREAD
                  for s in v.leaf_spreads)
        grows = v.growth is not None and v.growth.radii == (1.0, 10.0, 100.0) and v.growth.grows(2.0)
        by_spread += big
        by_growth += grows
        if not (verified and v.consistent and (big or grows)):
            problems.append(("perturbed", case.f.to_text()))
    ok = not problems
    report("theorem equivalence on 60-case corpus", ok,
           f"{len(problems)} failures; worst decomposable spread {worst_dec:.1e}; "
           f"perturbed refuted by spread {by_spread}/30, by growth {by_growth}/30")
    assert ok, problems[:3]


def test_h_reconstruction():
    dec, _ = corpus()
    worst_err = worst_res = 0.0
    for case in dec:
        nh = reconstruct_h_numeric(case.f, case.p, case.h.degree)
        ref = np.array([complex(c) for c in case.h.coeffs])
        err = float(np.max(np.abs(np.array(nh.h_numeric) - ref)) / np.max(np.abs(ref)))
        worst_err = max(worst_err, err)
        worst_res = max(worst_res, nh.residual)
    ok = worst_err <= 1e-6 and worst_res <= 1e-6
    report("numeric h reconstruction", ok,
           f"30 cases, worst relative coefficient error {worst_err:.1e}, worst residual {worst_res:.1e} (limits 1e-6)")
    assert ok


def test_root_finder():
    rng = np.random.default_rng(505)
    worst_match = worst_coef = 0.0
    for _ in range(200):
        deg = int(rng.integers(1, 13))
        roots = rng.uniform(-1, 1, deg) + 1j * rng.uniform(-1, 1, deg)
        coeffs = recompose(1.0, roots)
        found = np.array(find_roots(coeffs).roots)
        cost = np.abs(np.subtract.outer(found, roots))
        r, c = linear_sum_assignment(cost)
        worst_match = max(worst_match, float(cost[r, c].max()))
        back = recompose(1.0, found)
        worst_coef = max(worst_coef, float(np.max(np.abs(back - coeffs))))
    ok = worst_match <= 1e-8 and worst_coef <= 1e-6
    report("root finder", ok,
           f"200 polynomials, worst matched root error {worst_match:.1e} (limit 1e-8), "
           f"worst recomposition error {worst_coef:.1e} (limit 1e-6)")
    assert ok


def test_growth_law_on_hyperbola():
    g = growth_probe(Z1 + Z2, Z1 * Z2, 1, (1, 10, 100, 1000))
    ref = (2.0, 10.1, 100.01, 1000.001)
    rel = [abs(v - r) / r if v is not None else float("inf") for v, r in zip(g.max_abs_f, ref)]
    ok = max(rel) <= 0.01
    report("growth law on the hyperbola", ok,
           f"max |f| = {tuple(round(v, 6) for v in g.max_abs_f)}, worst relative deviation {max(rel):.1e} (limit 1e-2)")
    assert ok


def test_parser():
    rng = random.Random(606)
    mismatches = 0
    for _ in range(500):
        p = rand_poly(rng, rng.randint(0, 6))
        if parse_polynomial(p.to_text()) != p:
            mismatches += 1
    expected = [
        ("z1^(-1)", NegativeExponentError, (3, 7)),
        ("z3 + 1", UnknownVariableError, (0, 2)),
        ("z1 + * z2", ExprSyntaxError, (5, 6)),
    ]
    errs = []
    for text, cls, span in expected:
        try:
            parse_poly(text)
            errs.append(f"{text!r} parsed")
        except cls as exc:
            if exc.span != span:
                errs.append(f"{text!r} span {exc.span}")
    ok = mismatches == 0 and not errs
    report("parser round trip and error spans", ok, f"500 round trips, {mismatches} mismatches; error checks: {errs or 'all correct'}")
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
