"""Subcommand dispatch.

Every invocation prints exactly one JSON report on stdout and a short
summary on stderr. Exit codes: 0 success, 1 mathematical refusal,
2 input error, 3 numeric failure.
"""

from __future__ import annotations

import argparse
import sys
from typing import Callable

import numpy as np

from polyleaf.cli import report as rp
from polyleaf.cli.parser import parse_poly
from polyleaf.cli.report import Report
from polyleaf.decompose import decompose_exact, generic_levels
from polyleaf.errors import (
    CertificateFailedError,
    ConstantPError,
    HypothesisViolatedError,
    LeafSamplingFailedError,
    NotAPowerError,
    NumericError,
    ParseError,
    PolyleafError,
    ZeroPolynomialError,
)
from polyleaf.leaves import SPREAD_TOL, Grid, TheoremConfig, growth_probe, leaf_spread_report, theorem_check
from polyleaf.power import DEFAULT_TRUNCATION, cn_minus_p_status, is_theorem_hypothesis, power_certificate, power_order

EXIT_OK, EXIT_REFUSED, EXIT_INPUT, EXIT_NUMERIC = 0, 1, 2, 3


class _UsageError(Exception):
    pass


class _ArgParser(argparse.ArgumentParser):
    def error(self, message):  # report instead of printing usage and exiting
        raise _UsageError(message)


def _complex(text: str) -> complex:
    try:
        return complex(text.replace(" ", "").replace("i", "j"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}") from None


def _radii(text: str) -> tuple[float, ...]:
    try:
        vals = tuple(float(x) for x in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from None
    if any(not (v > 0) for v in vals) or any(b <= a for a, b in zip(vals, vals[1:])):
        raise argparse.ArgumentTypeError("radii must be positive and increasing")
    return vals


def build_parser() -> argparse.ArgumentParser:
    ap = _ArgParser(prog="polyleaf", description="Power detection and leafwise decomposition checks.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_ArgParser)

    s = sub.add_parser("ispower", help="power order of P in the power series ring")
    s.add_argument("-P", required=True)

    s = sub.add_parser("certificate", help="truncated series m-th root of P")
    s.add_argument("-P", required=True)
    s.add_argument("-m", type=int, required=True)
    s.add_argument("-N", type=int, default=DEFAULT_TRUNCATION)

    s = sub.add_parser("irreducible", help="irreducibility status of C^n - P")
    s.add_argument("-P", required=True)
    s.add_argument("-n", type=int, required=True)
    s.add_argument("--bound", type=int, default=None, help="factor degree bound (default: deg P)")

    s = sub.add_parser("decompose", help="exact f = h(P)")
    s.add_argument("-f", required=True)
    s.add_argument("-P", required=True)

    s = sub.add_parser("leaves", help="spread of f on generic level curves of P")
    s.add_argument("-f", required=True)
    s.add_argument("-P", required=True)
    s.add_argument("--levels", type=int, default=8)
    s.add_argument("--seed", type=int, default=0)

    s = sub.add_parser("growth", help="max |f| along the leaf P = c at growing radii")
    s.add_argument("-f", required=True)
    s.add_argument("-P", required=True)
    s.add_argument("-c", type=_complex, required=True)
    s.add_argument("--radii", type=_radii, default=(1.0, 10.0, 100.0, 1000.0))

    s = sub.add_parser("theorem", help="exact decomposition versus leafwise constancy")
    s.add_argument("-f", required=True)
    s.add_argument("-P", required=True)
    s.add_argument("--seed", type=int, default=0)
    return ap


# -- commands -----------------------------------------------------------------
# each returns (result payload, exit code, summary line)

def _cmd_ispower(args, polys, rep: Report):
    r = power_order(polys["P"])
    hyp = is_theorem_hypothesis(polys["P"])
    return rp.power_payload(r, hyp), EXIT_OK, f"rho = {r.rho_text}"


def _cmd_certificate(args, polys, rep: Report):
    if args.m < 2:
        raise _UsageError("-m must be at least 2")
    if args.N < 0:
        raise _UsageError("-N must be nonnegative")
    cert = power_certificate(polys["P"], args.m, args.N)
    return rp.certificate_payload(cert), EXIT_OK, f"certificate residual {cert.residual:.3g}"


def _cmd_irreducible(args, polys, rep: Report):
    if args.n < 1:
        raise _UsageError("-n must be a positive integer")
    p = polys["P"]
    bound = p.total_degree if args.bound is None else args.bound
    st = cn_minus_p_status(p, args.n, bound)
    if st.verdict == "Unknown":
        rep.diagnostics.append(f"no witness with coefficient degree <= {bound}")
    return rp.cnp_payload(st, args.n), EXIT_OK, st.verdict


def _cmd_decompose(args, polys, rep: Report):
    res = decompose_exact(polys["f"], polys["P"])
    if res.found:
        return rp.decomposition_payload(res), EXIT_OK, f"h = {res.h.to_text('X')}"
    return rp.decomposition_payload(res), EXIT_REFUSED, f"NotDecomposable ({res.reason})"


def _cmd_leaves(args, polys, rep: Report):
    if args.levels < 1:
        raise _UsageError("--levels must be positive")
    rep.seed = args.seed
    levels = generic_levels(args.levels, np.random.default_rng(args.seed))
    spreads = leaf_spread_report(polys["f"], polys["P"], levels, Grid())
    for s in spreads:
        if s.failure:
            rep.diagnostics.append(f"level {s.level}: {s.failure}")
    ok = all(s.relative_spread is not None and s.relative_spread <= SPREAD_TOL for s in spreads)
    payload = {"spread_tol": SPREAD_TOL, "all_within_tol": ok, "levels": rp.spreads_payload(spreads)}
    code = EXIT_NUMERIC if all(s.failure for s in spreads) else EXIT_OK
    return payload, code, f"all spreads within {SPREAD_TOL:g}: {ok}"


def _cmd_growth(args, polys, rep: Report):
    g = growth_probe(polys["f"], polys["P"], args.c, args.radii)
    if g.empty_radii:
        rep.diagnostics.append(f"no accepted leaf points at radii {list(g.empty_radii)}")
    if g.overflowed:
        rep.diagnostics.append("evaluation overflowed")
    payload = {"level": rp.cfloat(args.c), **rp.growth_payload(g)}
    return payload, EXIT_OK, f"max |f|: {list(g.max_abs_f)}"


def _cmd_theorem(args, polys, rep: Report):
    rep.seed = args.seed
    v = theorem_check(polys["f"], polys["P"], TheoremConfig(seed=args.seed))
    for s in v.leaf_spreads:
        if s.failure:
            rep.diagnostics.append(f"level {s.level}: {s.failure}")
    payload = {
        "consistent": v.consistent,
        "constant_on_leaves": v.constant_on_leaves,
        "refuted": v.refuted,
        "exact": rp.decomposition_payload(v.exact),
        "leaf_spreads": rp.spreads_payload(v.leaf_spreads),
        "spread_tol": v.spread_tol,
        "growth": rp.growth_payload(v.growth),
    }
    if not v.consistent:
        rep.diagnostics.append("exact and leafwise verdicts disagree")
        return payload, EXIT_NUMERIC, "inconsistent verdicts"
    if v.exact.found:
        return payload, EXIT_OK, f"consistent, h = {v.exact.h.to_text('X')}"
    return payload, EXIT_REFUSED, f"consistent, NotDecomposable ({v.exact.reason})"


COMMANDS: dict[str, Callable] = {
    "ispower": _cmd_ispower,
    "certificate": _cmd_certificate,
    "irreducible": _cmd_irreducible,
    "decompose": _cmd_decompose,
    "leaves": _cmd_leaves,
    "growth": _cmd_growth,
    "theorem": _cmd_theorem,
}

_REFUSALS = (NotAPowerError, HypothesisViolatedError)
_INPUT_ERRORS = (ParseError, ConstantPError, ZeroPolynomialError, ValueError)
_NUMERIC = (CertificateFailedError, LeafSamplingFailedError, NumericError)


def _error_kind(exc: Exception) -> str:
    kind = getattr(exc, "kind", None)
    if kind:
        return kind
    name = type(exc).__name__
    return name[:-5] if name.endswith("Error") and name != "ValueError" else name


def _inputs(args) -> dict:
    out = {}
    for key, val in vars(args).items():
        if key == "command" or key == "seed":
            continue
        if isinstance(val, complex):
            val = str(val)
        elif isinstance(val, tuple):
            val = list(val)
        out[key] = val
    return out


def run(argv: list[str] | None = None) -> tuple[int, Report]:
    """Execute one invocation; returns the exit code and the report."""
    argv = list(sys.argv[1:] if argv is None else argv)
    command = next((a for a in argv if a in COMMANDS), "")
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        rep = Report(command, {"argv": argv})
        rep.result = rp.error_payload("UsageError", str(exc))
        return EXIT_INPUT, rep

    rep = Report(args.command, _inputs(args))
    polys = {}
    try:
        for key in ("f", "P"):
            text = getattr(args, key, None)
            if text is None:
                continue
            try:
                polys[key] = parse_poly(text).to_polynomial()
            except ParseError as exc:
                rep.diagnostics.append(f"-{key}: {exc}")
                raise
            rep.inputs[key] = polys[key].to_text()
        payload, code, summary = COMMANDS[args.command](args, polys, rep)
        rep.result = payload
        _summary(summary)
        return code, rep
    except _UsageError as exc:
        rep.result = rp.error_payload("UsageError", str(exc))
        return EXIT_INPUT, rep
    except _REFUSALS as exc:
        rep.result = rp.error_payload(_error_kind(exc), str(exc))
        return EXIT_REFUSED, rep
    except _NUMERIC as exc:
        rep.result = rp.error_payload(_error_kind(exc), str(exc))
        return EXIT_NUMERIC, rep
    except _INPUT_ERRORS as exc:
        rep.result = rp.error_payload(_error_kind(exc), exc.args[0] if exc.args else str(exc),
                                      getattr(exc, "span", None))
        return EXIT_INPUT, rep
    except PolyleafError as exc:
        rep.result = rp.error_payload(_error_kind(exc), str(exc))
        return EXIT_NUMERIC, rep


def _summary(text: str) -> None:
    print(text, file=sys.stderr)


def main(argv: list[str] | None = None) -> int:
    code, rep = run(argv)
    if rep.result is not None and "error" in rep.result:
        err = rep.result["error"]
        _summary(f"error ({err['kind']}): {err['message']}")
    sys.stdout.write(rep.to_json())
    sys.stdout.flush()
    return code


if __name__ == "__main__":
    sys.exit(main())
