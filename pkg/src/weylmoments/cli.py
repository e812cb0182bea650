"""Command-line front end.

Every library operation is exposed as a subcommand emitting text, JSON or
CSV rows; `--plot` additionally renders the rows as a figure next to the
delimited output.  Exit codes: 0 success, 2 usage error, 3 budget or
resource error, 4 certificate or setting violation.

Option resolution order: command line > --config file > environment
(WEYLMOMENTS_WORKERS) > built-in defaults.  The fully resolved
configuration is echoed into every report.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from fractions import Fraction

from . import bounds, curvepoints, largesieve, report, vinogradov, weylsum
from .diophantine import as_rational
from .errors import BudgetError, CertificateError
from .vinogradov import DEFAULT_BUDGET

ENV_WORKERS = "WEYLMOMENTS_WORKERS"

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_BUDGET = 3
EXIT_CERTIFICATE = 4


def _int_list(text: str) -> list[int]:
    values = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            values.append(int(part))
        except ValueError:
            values.append(int(float(part)))  # allow 1e6-style literals
    return values


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("text", "json", "csv"), default=None,
                     help="output format (default text)")
    sub.add_argument("--output", default=None, metavar="PATH",
                     help="write the report to PATH instead of stdout")
    sub.add_argument("--plot", default=None, metavar="PATH",
                     help="also render the rows as a figure at PATH (png/pdf/svg)")
    sub.add_argument("--workers", type=int, default=None,
                     help=f"worker count for parallel loops (env {ENV_WORKERS})")
    sub.add_argument("--budget", type=int, default=None,
                     help=f"state-count budget for enumerations (default {DEFAULT_BUDGET})")
    sub.add_argument("--seed", type=int, default=None,
                     help="seed for seeded generators")
    sub.add_argument("--config", default=None, metavar="PATH",
                     help="flat key=value file supplying defaults for any option")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weylmoments",
        description="Weyl sum moments, Vinogradov counting, Diophantine "
                    "approximation, curve-point counting and the polynomial "
                    "large sieve, at desk scale.")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("exponents", help="derived exponents s0, s1, s2, sigma, rho, tau, omega")
    p.add_argument("--k", required=True, help="degree k, or comma list of degrees")
    _add_common(p)

    p = subs.add_parser("jk", help="exact Vinogradov count J_k(x, s)")
    p.add_argument("--x", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=vinogradov.J_METHODS, default="mitm")
    _add_common(p)

    p = subs.add_parser("jk-scan", help="J and its main-conjecture ratio over an x list")
    p.add_argument("--x", required=True, help="comma list of x values")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--method", choices=vinogradov.J_METHODS, default="mitm")
    _add_common(p)

    p = subs.add_parser("weyl", help="one twisted Weyl sum")
    p.add_argument("--coeffs", required=True,
                   help="polynomial coefficients a1,...,ak (rationals, low degree first)")
    p.add_argument("--x", required=True, help="summation length (rational or decimal)")
    p.add_argument("--a", type=int, default=1)
    p.add_argument("--z", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("moments", help="discrete moments over the twist range a <= T")
    p.add_argument("--coeffs", required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--T", type=int, required=True)
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--per-twist", action="store_true",
                   help="emit one row per twist a instead of a summary row")
    _add_common(p)

    p = subs.add_parser("regime", help="moment-bound comparison at one or more q")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--q", required=True, help="denominator q, or comma list")
    p.add_argument("--w", type=int, default=None,
                   help="auxiliary denominator enabling the second improved bound")
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--constant", type=float, default=1.0)
    _add_common(p)

    p = subs.add_parser("arcs", help="major/minor arc classification of a rational phase")
    p.add_argument("--alpha", required=True, help="rational phase ('p/q' or decimal)")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--x", required=True)
    p.add_argument("--T", required=True)
    p.add_argument("--z", type=int, default=1)
    _add_common(p)

    p = subs.add_parser("sumlemma", help="sum of min(X, ||alpha h + beta||^-1) vs its shape")
    p.add_argument("--grid", action="store_true", help="run the shipped certified grid")
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default="0")
    p.add_argument("--X", type=float, default=None)
    p.add_argument("--Z", type=int, default=None)
    p.add_argument("--Y", type=int, default=None)
    p.add_argument("--q", type=int, default=None)
    _add_common(p)

    p = subs.add_parser("varsumlemma", help="variant sum over j <= q vs its shape")
    p.add_argument("--grid", action="store_true", help="run the shipped certified grid")
    p.add_argument("--alpha", default=None)
    p.add_argument("--beta", default="0")
    p.add_argument("--X", type=float, default=None)
    p.add_argument("--q", type=int, default=None)
    _add_common(p)

    p = subs.add_parser("smooth", help="smooth-curve moment LHS and its bound shapes")
    _add_preset_args(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--T", type=float, required=True)
    p.add_argument("--z", type=int, default=1)
    p.add_argument("--theorem", default="all",
                   choices=bounds.SMOOTH_THEOREMS + ("all",))
    p.add_argument("--epsilon", type=float, default=0.0)
    p.add_argument("--constant", type=float, default=1.0)
    p.add_argument("--skip-lhs", action="store_true",
                   help="evaluate only the bound shapes, not the moment itself")
    _add_common(p)

    p = subs.add_parser("curve", help="integer points close to a preset curve")
    _add_preset_args(p)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--delta", type=float, required=True)
    _add_common(p)

    p = subs.add_parser("sieve", help="polynomial large-sieve quantity and bound shapes")
    p.add_argument("--poly", default=None, help="monic polynomial, e.g. 'x^3+x'")
    p.add_argument("--degree", type=int, default=None,
                   help="degree k (alternative to --poly, with --coeffs)")
    p.add_argument("--coeffs", default=None,
                   help="lower coefficients c1,...,c(k-1) for --degree")
    p.add_argument("--Q", type=int, required=True)
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--M", type=int, default=0)
    p.add_argument("--v", default="ones", choices=("ones", "alternating", "random"),
                   help="weight sequence generator")
    p.add_argument("--epsilon", type=float, default=0.0)
    _add_common(p)

    return parser


def _add_preset_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--preset", required=True,
                   choices=sorted(curvepoints.PRESET_BUILDERS))
    p.add_argument("--k", type=int, default=None,
                   help="certificate order (default: 3 for log, 4 for power curves)")
    p.add_argument("--t", type=float, default=None, help="log preset: f = t*log(x)")
    p.add_argument("--B", type=float, default=None, help="power presets: size parameter")
    p.add_argument("--r", type=int, default=None, help="power presets: exponent parameter")
    p.add_argument("--coeffs", default=None,
                   help="poly preset: rational coefficients a1,...,ad")
    p.add_argument("--domain", default=None,
                   help="certificate domain 'lo,hi' (default N/2,3N)")


def build_preset(args) -> curvepoints.SmoothCurve:
    domain = None
    if args.domain:
        lo, hi = (float(part) for part in args.domain.split(","))
        domain = (lo, hi)
    preset = args.preset
    if preset == "log":
        if args.t is None:
            raise ValueError("log preset needs --t")
        return curvepoints.log_curve(args.t, args.N, args.k or 3, domain)
    if preset in ("inverse_power", "root_inverse"):
        if args.B is None or args.r is None:
            raise ValueError(f"{preset} preset needs --B and --r")
        builder = (curvepoints.inverse_power_curve if preset == "inverse_power"
                   else curvepoints.root_inverse_curve)
        return builder(args.B, args.r, args.N, args.k or 4, domain)
    if preset == "poly":
        if not args.coeffs:
            raise ValueError("poly preset needs --coeffs")
        coeffs = [Fraction(part.strip()) for part in args.coeffs.split(",")]
        return curvepoints.poly_curve(coeffs, args.N, domain)
    raise ValueError(f"unknown preset {preset!r}")


# ---------------------------------------------------------------------------
# option resolution
# ---------------------------------------------------------------------------

def _load_config(path: str) -> dict:
    values = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"config line without '=': {line!r}")
            key, _, value = line.partition("=")
            values[key.strip().replace("-", "_")] = value.strip()
    return values


_CONFIG_PARSERS = {
    "workers": int,
    "budget": int,
    "seed": int,
    "format": str,
    "output": str,
    "plot": str,
}


def resolve_options(args: argparse.Namespace) -> dict:
    """Fill in format/workers/budget/seed from config file, env and defaults."""
    config = _load_config(args.config) if args.config else {}
    for key, value in config.items():
        if not hasattr(args, key):
            raise ValueError(f"config key {key!r} does not match any option")
        if getattr(args, key) is None:
            setattr(args, key, _CONFIG_PARSERS.get(key, str)(value))
    if args.format is None:
        args.format = "text"
    if args.workers is None:
        args.workers = int(os.environ.get(ENV_WORKERS, "1"))
    args.workers = max(1, args.workers)
    if args.budget is None:
        args.budget = DEFAULT_BUDGET
    resolved = {key: value for key, value in vars(args).items()
                if key not in ("config",) and value is not None}
    return resolved


# ---------------------------------------------------------------------------
# subcommand handlers: fill doc.rows/doc.notes, return the sweep column
# ---------------------------------------------------------------------------

def _handle_exponents(args, doc) -> str | None:
    for k in _int_list(args.k):
        e = bounds.exponents(k)
        doc.add_row(k=e.k, s0=e.s0, s1=e.s1, s2=e.s2,
                    sigma=e.sigma, rho=e.rho, tau=e.tau, omega=e.omega)
        if k == 2:
            doc.add_note("k = 2: sigma, rho, tau, omega are undefined")
    return "k"


def _jk_row(doc, x, s, k, method, budget, workers):
    res = vinogradov.j_exact(x, s, k, method, budget, workers)
    denom = float(x) ** s + float(x) ** (2 * s - k * (k + 1) // 2)
    doc.add_row(x=x, s=s, k=k, method=method, j=res.value,
                vmvt_ratio=res.value / denom,
                diagonal_lower=x ** s, trivial_upper=x ** (2 * s))


def _handle_jk(args, doc) -> str | None:
    _jk_row(doc, args.x, args.s, args.k, args.method, args.budget, args.workers)
    return None


def _handle_jk_scan(args, doc) -> str | None:
    for x in _int_list(args.x):
        _jk_row(doc, x, args.s, args.k, args.method, args.budget, args.workers)
    return "x"


def _handle_weyl(args, doc) -> str | None:
    poly = weylsum.PolyCoeffs.parse(args.coeffs)
    x = as_rational(args.x)
    value = weylsum.weyl_sum(poly, x, args.a, args.z)
    doc.add_row(coeffs=args.coeffs, k=poly.k, x=float(x),
                floor_x=weylsum.floor_scale(x), a=args.a, z=args.z,
                re=value.re, im=value.im, magnitude=value.magnitude,
                trivial_bound=weylsum.floor_scale(x))
    return None


def _handle_moments(args, doc) -> str | None:
    poly = weylsum.PolyCoeffs.parse(args.coeffs)
    x = as_rational(args.x)
    rep = weylsum.discrete_moment(poly, x, args.T, args.z, args.s, args.workers)
    hold = weylsum.holder_check(rep)
    if args.per_twist:
        for a in range(1, args.T + 1):
            value = weylsum.weyl_sum(poly, x, a, args.z)
            doc.add_row(a=a, magnitude=value.magnitude,
                        power=value.magnitude ** (2 * args.s))
        doc.add_note(f"moment_2s = {rep.moment_2s!r}, first_moment = {rep.first_moment!r}")
        return "a"
    doc.add_row(coeffs=args.coeffs, x=rep.x, floor_x=rep.floor_x, T=rep.T,
                z=rep.z, s=rep.s, moment_2s=rep.moment_2s,
                first_moment=rep.first_moment,
                trivial_bound_first=rep.trivial_bound_first,
                trivial_bound_2s=rep.trivial_bound_2s,
                holder_lhs=hold.lhs, holder_rhs=hold.rhs, holder_holds=hold.holds)
    return None


def _handle_regime(args, doc) -> str | None:
    noted_conjectural = False
    for q in _int_list(args.q):
        inp = bounds.RegimeInput(k=args.k, x=args.x, T=args.T, z=args.z, q=q,
                                 w=args.w, epsilon=args.epsilon,
                                 constant=args.constant)
        rep = bounds.best_theorem(inp)
        row = {
            "k": args.k, "x": args.x, "T": args.T, "z": args.z, "q": q,
            "improved": rep.bounds["improved"].value,
            "standard": rep.bounds["standard"].value,
            "conjectured": rep.bounds["conjectured"].value,
            "argmin": rep.argmin, "predicted": rep.predicted, "agree": rep.agree,
            "q_lo": rep.range.q_lo, "q_hi": rep.range.q_hi,
            "range_nonempty": rep.range.nonempty,
            "critical_T": rep.range.critical_T,
        }
        if "second_improved" in rep.bounds:
            sb = rep.bounds["second_improved"]
            row["second_improved"] = sb.value
            if not sb.applicable:
                doc.add_note(f"q={q}: second_improved not applicable: {sb.reason}")
        doc.add_row(**row)
        if not noted_conjectural:
            doc.add_note("conjectured is an unproved shape, excluded from argmin")
            noted_conjectural = True
        if not rep.agree:
            doc.add_note(f"q={q}: evaluated argmin {rep.argmin} differs from "
                         f"log-free prediction {rep.predicted}")
    return "q"


def _handle_arcs(args, doc) -> str | None:
    alpha = as_rational(args.alpha)
    decision = bounds.major_arc_classify(alpha, args.k, as_rational(args.x),
                                         as_rational(args.T), args.z)
    witness = decision.witness
    doc.add_row(alpha=alpha, k=args.k, x=float(as_rational(args.x)),
                T=float(as_rational(args.T)), z=args.z, q_max=decision.q_max,
                is_major=decision.is_major,
                witness_u=None if witness is None else witness.u,
                witness_q=None if witness is None else witness.q,
                witness_error=None if witness is None else witness.error)
    return None


def _handle_sumlemma(args, doc) -> str | None:
    if args.grid:
        for alpha, beta, X, Z, Y, q in bounds.sum_lemma_grid():
            res = bounds.sum_lemma_pair(alpha, beta, X, Z, Y, q)
            doc.add_row(alpha=alpha, beta=beta, X=X, Z=Z, Y=Y, q=q,
                        lhs=res.lhs, rhs_shape=res.rhs_shape, ratio=res.ratio,
                        cert_ok=res.cert_ok, zero_hits=res.zero_hits)
        doc.add_note(f"max ratio = {max(row['ratio'] for row in doc.rows)!r}")
        return None
    required = {"alpha": args.alpha, "X": args.X, "Z": args.Z, "Y": args.Y, "q": args.q}
    _require(required, "sumlemma")
    res = bounds.sum_lemma_pair(as_rational(args.alpha), as_rational(args.beta),
                                args.X, args.Z, args.Y, args.q)
    doc.add_row(alpha=as_rational(args.alpha), beta=as_rational(args.beta),
                X=args.X, Z=args.Z, Y=args.Y, q=args.q, lhs=res.lhs,
                rhs_shape=res.rhs_shape, ratio=res.ratio, cert_ok=res.cert_ok,
                zero_hits=res.zero_hits)
    if not res.cert_ok:
        doc.add_note("hypothesis |alpha - u/q| < q^-2 fails for the supplied q")
    return None


def _handle_varsumlemma(args, doc) -> str | None:
    if args.grid:
        for alpha, beta, X, q in bounds.var_sum_lemma_grid():
            res = bounds.var_sum_lemma_pair(alpha, beta, X, q)
            doc.add_row(alpha=alpha, beta=beta, X=X, q=q, lhs=res.lhs,
                        rhs_shape=res.rhs_shape, ratio=res.ratio,
                        cert_ok=res.cert_ok, zero_hits=res.zero_hits)
        doc.add_note(f"max ratio = {max(row['ratio'] for row in doc.rows)!r}")
        return None
    required = {"alpha": args.alpha, "X": args.X, "q": args.q}
    _require(required, "varsumlemma")
    res = bounds.var_sum_lemma_pair(as_rational(args.alpha),
                                    as_rational(args.beta), args.X, args.q)
    doc.add_row(alpha=as_rational(args.alpha), beta=as_rational(args.beta),
                X=args.X, q=args.q, lhs=res.lhs, rhs_shape=res.rhs_shape,
                ratio=res.ratio, cert_ok=res.cert_ok, zero_hits=res.zero_hits)
    if not res.cert_ok:
        doc.add_note("hypothesis |alpha - u/q| < 1/(qX) fails for the supplied q")
    return None


def _require(required: dict, command: str) -> None:
    missing = [name for name, value in required.items() if value is None]
    if missing:
        raise ValueError(f"{command} needs --" + ", --".join(missing)
                         + " (or --grid)")


def _handle_smooth(args, doc) -> str | None:
    curve = build_preset(args)
    curvepoints.validate_order_certificate(curve)
    names = bounds.SMOOTH_THEOREMS if args.theorem == "all" else (args.theorem,)
    lhs = None
    if not args.skip_lhs:
        t_int = int(math.floor(args.T))
        if (args.N - 1) * t_int <= args.budget:
            lhs = curvepoints.smooth_moment_lhs(curve, args.N, t_int, args.z,
                                                args.budget, args.workers)
        else:
            doc.add_note(f"moment LHS skipped: (N-1)*T = {(args.N - 1) * t_int} "
                         f"exceeds budget {args.budget}")
    for name in names:
        bv = bounds.rhs_smooth(args.N, args.T, args.z, curve.A, curve.lam,
                               curve.k, name, args.epsilon, args.constant)
        row = {"theorem": name, "preset": curve.name, "N": args.N, "T": args.T,
               "z": args.z, "A": curve.A, "lam": curve.lam, "k": curve.k,
               "value": bv.value, "applicable": bv.applicable}
        for label, term in bv.bracket_terms:
            row[f"term[{label}]"] = term
        row.update({key: val for key, val in bv.extras.items()})
        if lhs is not None:
            row["lhs"] = lhs
            if name != "heath_brown":
                row["lhs_over_value"] = lhs / bv.value
        doc.add_row(**row)
        if not bv.applicable:
            doc.add_note(f"{name}: {bv.reason}")
        if name == "heath_brown":
            doc.add_note("heath_brown bounds the single sum (no twist average); "
                         "no LHS ratio reported")
    return None


def _handle_curve(args, doc) -> str | None:
    curve = build_preset(args)
    closeness = curvepoints.count_close(curve, args.N, args.delta, args.workers)
    row = {"preset": curve.name, "N": args.N, "delta": args.delta, "k": curve.k,
           "lam": curve.lam, "A": curve.A, "lambda1": curve.lambda1, "M": curve.M,
           "count": closeness.count, "ambiguous": len(closeness.ambiguous)}
    if closeness.ambiguous:
        doc.add_note(f"{len(closeness.ambiguous)} boundary-ambiguous points "
                     f"(within {curvepoints.GUARD_BAND} of delta): counted, flagged")
    if curve.A * curve.lam <= 0.25:
        spacing = curvepoints.spacing_inequality_check(curve, args.N, args.delta,
                                                       args.workers)
        row.update(h_prime=spacing.h_prime, subset_size=spacing.subset_size,
                   spacing_holds=spacing.holds)
    else:
        doc.add_note("spacing bound skipped: A*lambda > 1/4")
    if curve.k == 1:
        row["first_derivative"] = curvepoints.rhs_curve(curve, args.N, args.delta,
                                                        "first_derivative")
    else:
        row["huxley_sargos"] = curvepoints.rhs_curve(curve, args.N, args.delta,
                                                     "huxley_sargos")
        if curve.lambda1 is not None:
            row["exp_sum"] = curvepoints.rhs_curve(curve, args.N, args.delta,
                                                   "exp_sum")
            cond = curvepoints.condition_exp_sum(curve, args.N, args.delta)
            row.update(cond_holds=cond.holds, cond_lower=cond.lower,
                       cond_upper=cond.upper, cond_n_ok=cond.n_large_enough)
            if not cond.holds:
                doc.add_note("exp_sum admissibility window fails; value is shape only")
    if curve.M is not None:
        g = curvepoints.gorny(curve, args.N)
        row.update(gorny_bound=g.bound_fprime, gorny_admissible=g.admissible)
    doc.add_row(**row)
    return None


def _handle_sieve(args, doc) -> str | None:
    if args.poly:
        poly = largesieve.MonicPoly.parse(args.poly)
    elif args.degree:
        coeffs = ([Fraction(part.strip()) for part in args.coeffs.split(",")]
                  if args.coeffs else [Fraction(0)] * (args.degree - 1))
        poly = largesieve.MonicPoly(args.degree, tuple(coeffs))
    else:
        raise ValueError("sieve needs --poly or --degree")
    v = largesieve.make_weights(args.v, args.N, args.seed)
    value = largesieve.sigma_p(poly, args.Q, v, args.M, args.budget, args.workers)
    v_norm_sq = math.fsum(abs(c) ** 2 for c in v)
    bset = largesieve.sieve_bounds(args.Q, args.N, poly.k, v_norm_sq, args.epsilon)
    chk = largesieve.range_and_setting_check(poly, args.Q, args.N)
    row = {"poly": poly.describe(), "k": poly.k, "Q": args.Q, "N": args.N,
           "M": args.M, "weights": args.v, "sigma_p": value,
           "v_norm_sq": v_norm_sq, "range_ok": chk.range_ok,
           "setting_ok": chk.setting_ok}
    for name, bound in sorted(bset.values.items()):
        row[f"bound_{name}"] = bound
    doc.add_row(**row)
    doc.add_note(f"setting: {chk.details}")
    for name in bset.omitted:
        doc.add_note(f"{name} bound omitted: needs k >= 3")
    if not chk.range_ok:
        doc.add_note("N outside the interesting range [Q^k, Q^2k]; "
                     "the zhao shape is already known there")
    return None


HANDLERS = {
    "exponents": _handle_exponents,
    "jk": _handle_jk,
    "jk-scan": _handle_jk_scan,
    "weyl": _handle_weyl,
    "moments": _handle_moments,
    "regime": _handle_regime,
    "arcs": _handle_arcs,
    "sumlemma": _handle_sumlemma,
    "varsumlemma": _handle_varsumlemma,
    "smooth": _handle_smooth,
    "curve": _handle_curve,
    "sieve": _handle_sieve,
}


def run(argv: list[str]) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    config = resolve_options(args)
    doc = report.ReportDocument(command=args.command, config=config)
    x_field = HANDLERS[args.command](args, doc)

    text = report.FORMATTERS[args.format](doc)
    if args.format == "csv" and doc.notes:
        text += "".join(f"# note: {note}\n" for note in doc.notes)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)

    if args.plot:
        from . import plots  # deferred: matplotlib import is slow
        plots.render_report(doc, args.plot, x_field)
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        return run(argv)
    except BudgetError as exc:
        print(f"budget error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except CertificateError as exc:
        print(f"certificate/setting violation: {exc}", file=sys.stderr)
        return EXIT_CERTIFICATE
    except (ValueError, ZeroDivisionError, OSError) as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)


if __name__ == "__main__":
    sys.exit(main())
