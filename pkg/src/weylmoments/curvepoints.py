"""Integer points close to smooth curves, and the bound shapes that count them.

A SmoothCurve packages a black-box real function with its derivative
evaluators and the caller-declared analytic certificates: on the stated
domain, 0 < lambda <= f^(k) <= A*lambda (order-k data), optionally
|f'| <= lambda1 and |f| <= M.  Certificates are spot-checked on a sample
grid, never proved; operations that rely on one reject violations.

The counted quantity is #{n in [N, 2N] : ||f(n)|| < delta}.  For the
shipped polynomial presets the distances are exact rationals; for other
presets they are floats with a 1e-9 guard band, and points inside the
band are counted but flagged as boundary-ambiguous.

Bound shapes (constants 1), selected via `rhs_curve`:

  first_derivative  (1 + A*lambda*N) * (1 + delta/lambda)      [order-1 data]
  huxley_sargos     N (A lam)^(2/k(k+1)) + N (A delta)^(2/k(k-1))
                    + (delta/lam)^(1/k) + 1
  exp_sum           1 + A (1 + A lam N) ((delta+lam1)/(A lam))^(1/(k-1)),
                    valid when A lam << delta+lam1 << (A lam)^(1-2(k-1)/k(k+1))

The exp_sum route rests on extracting an H'-spaced subset with
H' = (A lam)^(-2/k(k+1)): any two kept points differ by more than H', and
the full count is at most (k+1)(1 + subset size).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence

from .diophantine import dist_to_nearest_int
from .errors import BudgetError, CertificateError
from .parallel import ordered_map, resolve_workers, split_range
from .vinogradov import DEFAULT_BUDGET

TWO_PI = 2.0 * math.pi

GUARD_BAND = 1e-9       # float boundary ambiguity width for ||f(n)|| vs delta
SPOT_CHECK_POINTS = 64  # certificate sample-grid size
SPOT_CHECK_SLACK = 1e-9


@dataclass
class SmoothCurve:
    """Black-box curve with derivative evaluators and declared bounds.

    derivatives[j-1] evaluates f^(j); the certificate constants lam, A
    refer to order k.  exact_eval, when present, returns f(n) as an exact
    Fraction at integer n (polynomial presets).
    """

    evaluator: Callable[[float], float]
    derivatives: tuple[Callable[[float], float], ...]
    k: int
    domain: tuple[float, float]
    lam: float
    A: float
    lambda1: Optional[float] = None
    M: Optional[float] = None
    exact_eval: Optional[Callable[[int], Fraction]] = None
    name: str = "custom"
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        lo, hi = self.domain
        if not lo < hi:
            raise ValueError("domain must be a nonempty open interval")
        if self.k < 1:
            raise ValueError("k must be a positive integer")
        if self.lam < 0:
            raise ValueError("lambda must be nonnegative")
        if self.lam > 0 and self.A < 1:
            raise ValueError("A must be at least 1")

    def derivative(self, order: int) -> Callable[[float], float]:
        if order < 1 or order > len(self.derivatives):
            raise CertificateError(
                f"curve {self.name!r} has no order-{order} derivative evaluator")
        return self.derivatives[order - 1]


def _sample_grid(domain: tuple[float, float], n: int = SPOT_CHECK_POINTS) -> list[float]:
    lo, hi = domain
    return [lo + (hi - lo) * i / (n - 1) for i in range(n)]


def validate_order_certificate(curve: SmoothCurve, order: Optional[int] = None) -> None:
    """Spot-check lambda <= f^(order) <= A*lambda on the sample grid."""
    order = curve.k if order is None else order
    if curve.lam <= 0:
        raise CertificateError(f"curve {curve.name!r}: certificate needs lambda > 0")
    deriv = curve.derivative(order)
    lo_ok = curve.lam * (1.0 - SPOT_CHECK_SLACK)
    hi_ok = curve.A * curve.lam * (1.0 + SPOT_CHECK_SLACK)
    for x in _sample_grid(curve.domain):
        g = deriv(x)
        if not lo_ok <= g <= hi_ok:
            raise CertificateError(
                f"curve {curve.name!r}: f^({order})({x:.6g}) = {g:.6g} "
                f"outside [{curve.lam:.6g}, {curve.A * curve.lam:.6g}]")


def validate_slope_certificate(curve: SmoothCurve) -> None:
    """Spot-check |f'| <= lambda1 on the sample grid."""
    if curve.lambda1 is None:
        raise CertificateError(f"curve {curve.name!r}: no lambda1 declared")
    deriv = curve.derivative(1)
    cap = curve.lambda1 * (1.0 + SPOT_CHECK_SLACK)
    for x in _sample_grid(curve.domain):
        if abs(deriv(x)) > cap:
            raise CertificateError(
                f"curve {curve.name!r}: |f'({x:.6g})| exceeds lambda1 = {curve.lambda1:.6g}")


# ---------------------------------------------------------------------------
# counting
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class CloseCount:
    """Integers n in [N, 2N] with ||f(n)|| < delta (guard-band convention)."""

    count: int
    points: tuple[int, ...]
    ambiguous: tuple[int, ...]


def count_close(curve: SmoothCurve, N: int, delta: float,
                workers: int = 1) -> CloseCount:
    """Count close points by direct evaluation over n = N..2N.

    Exact-path curves decide ||f(n)|| < delta exactly.  Float-path points
    whose distance lands within GUARD_BAND of delta are counted and
    flagged ambiguous.
    """
    if N < 1:
        raise ValueError("N must be a positive integer")
    if not 0 < delta <= 0.25:
        raise ValueError("delta must lie in (0, 1/4]")

    if curve.exact_eval is not None:
        delta_exact = Fraction(delta)

        def judge(n: int) -> tuple[bool, bool]:
            return dist_to_nearest_int(curve.exact_eval(n)) < delta_exact, False
    else:
        def judge(n: int) -> tuple[bool, bool]:
            v = curve.evaluator(float(n))
            d = abs(v - round(v))
            near_edge = abs(d - delta) < GUARD_BAND
            return d < delta or near_edge, near_edge

    def scan(chunk: range) -> tuple[list[int], list[int]]:
        kept, vague = [], []
        for n in chunk:
            ok, near = judge(n)
            if ok:
                kept.append(n)
            if near:
                vague.append(n)
        return kept, vague

    parts = ordered_map(scan, split_range(N, 2 * N + 1, resolve_workers(workers)),
                        resolve_workers(workers))
    points = [n for kept, _ in parts for n in kept]
    ambiguous = [n for _, vague in parts for n in vague]
    return CloseCount(len(points), tuple(points), tuple(ambiguous))


def greedy_spaced_subset(points: Sequence[int], h_prime: float) -> list[int]:
    """Left-to-right greedy extraction of a subset whose gaps all exceed h_prime."""
    out: list[int] = []
    for p in points:
        if out and not p > out[-1] + h_prime:
            continue
        out.append(p)
    return out


@dataclass(frozen=True)
class SpacingCheck:
    count: int
    subset_size: int
    h_prime: float
    holds: bool
    ambiguous: int


def spacing_inequality_check(curve: SmoothCurve, N: int, delta: float,
                             workers: int = 1) -> SpacingCheck:
    """count <= (k+1) * (1 + size of the greedy H'-spaced subset).

    Requires the order-k certificate with A*lambda <= 1/4.  The greedy
    subset has maximum cardinality among H'-spaced subsets, so it
    instantiates the spaced-subset existence statement.
    """
    validate_order_certificate(curve)
    if curve.A * curve.lam > 0.25:
        raise CertificateError("spacing bound needs A*lambda <= 1/4")
    h_prime = (curve.A * curve.lam) ** (-2.0 / (curve.k * (curve.k + 1)))
    closeness = count_close(curve, N, delta, workers)
    subset = greedy_spaced_subset(closeness.points, h_prime)
    holds = closeness.count <= (curve.k + 1) * (1 + len(subset))
    return SpacingCheck(closeness.count, len(subset), h_prime, holds,
                        len(closeness.ambiguous))


# ---------------------------------------------------------------------------
# bound shapes
# ---------------------------------------------------------------------------

CURVE_BOUNDS = ("first_derivative", "huxley_sargos", "exp_sum")


def rhs_curve(curve: SmoothCurve, N: int, delta: float, which: str) -> float:
    """Evaluate one close-point bound shape with implicit constant 1."""
    lam, A, k = curve.lam, curve.A, curve.k
    if which == "first_derivative":
        if k != 1:
            raise CertificateError(
                "first-derivative bound needs order-1 certificate data (k = 1)")
        validate_order_certificate(curve, order=1)
        return (1.0 + A * lam * N) * (1.0 + delta / lam)
    if which == "huxley_sargos":
        validate_order_certificate(curve)
        return (N * (A * lam) ** (2.0 / (k * (k + 1)))
                + N * (A * delta) ** (2.0 / (k * (k - 1)))
                + (delta / lam) ** (1.0 / k) + 1.0)
    if which == "exp_sum":
        validate_order_certificate(curve)
        if curve.lambda1 is None:
            raise CertificateError("exp_sum bound needs a declared lambda1")
        return 1.0 + A * (1.0 + A * lam * N) * (
            (delta + curve.lambda1) / (A * lam)) ** (1.0 / (k - 1))
    raise ValueError(f"unknown bound {which!r}; choose from {CURVE_BOUNDS}")


@dataclass(frozen=True)
class ExpSumCondition:
    holds: bool
    lower: float
    upper: float
    n_large_enough: bool


def condition_exp_sum(curve: SmoothCurve, N: int, delta: float) -> ExpSumCondition:
    """Admissibility window A*lam <= delta+lam1 <= (A*lam)^(1-2(k-1)/k(k+1)), constants 1.

    Also reports whether (A*lam)^(-2/k(k+1)) <= N, the spacing-length
    requirement.
    """
    validate_order_certificate(curve)
    if curve.lambda1 is None:
        raise CertificateError("condition check needs a declared lambda1")
    k = curve.k
    alam = curve.A * curve.lam
    lower = alam
    upper = alam ** (1.0 - 2.0 * (k - 1) / (k * (k + 1)))
    mid = delta + curve.lambda1
    n_ok = alam ** (-2.0 / (k * (k + 1))) <= N
    return ExpSumCondition(lower <= mid <= upper, lower, upper, n_ok)


@dataclass(frozen=True)
class GornyBound:
    bound_fprime: float
    admissible: bool


def gorny(curve: SmoothCurve, N: int) -> GornyBound:
    """Slope bound M/N + M^(1-1/k) (A lam)^(1/k); admissible if M <= (A lam)^(1-2/(k+1)).

    Admissible curves automatically satisfy the exp_sum smallness
    condition on lambda1 for large N.
    """
    if curve.M is None:
        raise CertificateError("Gorny bound needs a declared sup |f| = M")
    k, alam, M = curve.k, curve.A * curve.lam, curve.M
    bound = M / N + M ** (1.0 - 1.0 / k) * alam ** (1.0 / k)
    return GornyBound(bound, M <= alam ** (1.0 - 2.0 / (k + 1)))


# ---------------------------------------------------------------------------
# smooth moment LHS and Taylor approximants
# ---------------------------------------------------------------------------

def smooth_moment_lhs(curve: SmoothCurve, N: int, T: int, z: int = 1,
                      budget: int = DEFAULT_BUDGET, workers: int = 1) -> float:
    """sum_{a<=T} |sum_{N<m<2N} e(a*z*f(m))|, phases reduced mod 1 in float.

    f is a black box, so no exact reduction is possible; the phase error
    is O(T * |f| * ulp) and documented as such.
    """
    if N < 2:
        raise ValueError("N must be at least 2 so (N, 2N) contains integers")
    if (N - 1) * T > budget:
        raise BudgetError(f"smooth moment needs {(N - 1) * T} evaluations > budget {budget}")
    values = [curve.evaluator(float(m)) for m in range(N + 1, 2 * N)]

    def magnitude(a: int) -> float:
        res, ims = [], []
        for v in values:
            theta = (a * z * v) % 1.0
            res.append(math.cos(TWO_PI * theta))
            ims.append(math.sin(TWO_PI * theta))
        return math.hypot(math.fsum(res), math.fsum(ims))

    mags = ordered_map(magnitude, list(range(1, T + 1)), resolve_workers(workers))
    return math.fsum(mags)


@dataclass(frozen=True)
class TaylorPoly:
    """Degree-(k-1) expansion around m with no constant term.

    coefficients[j-1] = f^(j)(m) / j! for j = 1..k-1; remainder_bound(h)
    dominates |f(m+h) - f(m) - Q(h)| via the integral remainder.
    """

    coefficients: tuple[float, ...]
    remainder_coeff: float  # A*lam / k!
    k: int
    zero_remainder: bool

    def remainder_bound(self, h: float) -> float:
        return self.remainder_coeff * h ** self.k

    def evaluate(self, h: float) -> float:
        acc = 0.0
        for c in reversed(self.coefficients):
            acc = (acc + c) * h
        return acc


def taylor_poly(curve: SmoothCurve, m: float, k: Optional[int] = None) -> TaylorPoly:
    """Taylor data at m from the declared derivative evaluators."""
    k = curve.k if k is None else k
    if len(curve.derivatives) < k - 1:
        raise CertificateError(f"need derivative evaluators up to order {k - 1}")
    coeffs = tuple(curve.derivatives[j - 1](m) / math.factorial(j)
                   for j in range(1, k))
    rem = curve.A * curve.lam / math.factorial(k)
    return TaylorPoly(coeffs, rem, k, zero_remainder=(rem == 0.0))


# ---------------------------------------------------------------------------
# shipped curve presets
# ---------------------------------------------------------------------------

def _default_domain(N: int) -> tuple[float, float]:
    return (N / 2.0, 3.0 * N)


def log_curve(t: float, N: int, k: int = 3,
              domain: Optional[tuple[float, float]] = None) -> SmoothCurve:
    """f(x) = t * log(x); f^(j)(x) = t (-1)^(j-1) (j-1)! / x^j.

    The order-k certificate needs t*(-1)^(k-1) > 0 (odd k for t > 0).
    """
    lo, hi = domain or _default_domain(N)
    signed = t * (-1.0) ** (k - 1)
    if signed <= 0:
        raise CertificateError(f"t*log(x) has sign-definite f^({k}) only for "
                               f"t*(-1)^(k-1) > 0; got t = {t}")

    def deriv(j: int) -> Callable[[float], float]:
        c = t * (-1.0) ** (j - 1) * math.factorial(j - 1)
        return lambda x, c=c, j=j: c / x ** j

    g = lambda x: signed * math.factorial(k - 1) / x ** k
    lam, alam = g(hi), g(lo)
    return SmoothCurve(
        evaluator=lambda x: t * math.log(x),
        derivatives=tuple(deriv(j) for j in range(1, k + 1)),
        k=k, domain=(lo, hi), lam=lam, A=alam / lam,
        lambda1=abs(t) / lo,
        M=abs(t) * max(abs(math.log(lo)), abs(math.log(hi))),
        name="log", params={"t": t, "k": k},
    )


def power_curve(C: float, e: float, N: int, k: int,
                domain: Optional[tuple[float, float]] = None,
                name: str = "power") -> SmoothCurve:
    """f(x) = C * x^e with real exponent; covers B/x^r and (B/x)^(1/r).

    f^(j)(x) = C e(e-1)...(e-j+1) x^(e-j); the order-k certificate needs
    the falling-factorial coefficient times C to be positive.
    """
    lo, hi = domain or _default_domain(N)
    if lo <= 0:
        raise ValueError("power curves need a positive domain")

    def falling(j: int) -> float:
        out = 1.0
        for i in range(j):
            out *= e - i
        return out

    def deriv(j: int) -> Callable[[float], float]:
        c = C * falling(j)
        return lambda x, c=c, p=e - j: c * x ** p

    ck = C * falling(k)
    if ck <= 0:
        raise CertificateError(
            f"x^{e} curve has nonpositive order-{k} coefficient {ck:.6g}; "
            "pick a k of matching parity")
    ends = (ck * lo ** (e - k), ck * hi ** (e - k))
    lam, alam = min(ends), max(ends)
    slope_ends = (abs(C * e) * lo ** (e - 1), abs(C * e) * hi ** (e - 1))
    value_ends = (abs(C) * lo ** e, abs(C) * hi ** e)
    return SmoothCurve(
        evaluator=lambda x: C * x ** e,
        derivatives=tuple(deriv(j) for j in range(1, k + 1)),
        k=k, domain=(lo, hi), lam=lam, A=alam / lam,
        lambda1=max(slope_ends), M=max(value_ends),
        name=name, params={"C": C, "e": e, "k": k},
    )


def inverse_power_curve(B: float, r: int, N: int, k: int = 4,
                        domain: Optional[tuple[float, float]] = None) -> SmoothCurve:
    """f(x) = B / x^r."""
    return power_curve(B, -float(r), N, k, domain, name="inverse_power")


def root_inverse_curve(B: float, r: int, N: int, k: int = 4,
                       domain: Optional[tuple[float, float]] = None) -> SmoothCurve:
    """f(x) = (B/x)^(1/r)."""
    return power_curve(B ** (1.0 / r), -1.0 / r, N, k, domain, name="root_inverse")


def poly_curve(coefficients: Sequence, N: int,
               domain: Optional[tuple[float, float]] = None) -> SmoothCurve:
    """f(x) = a_d x^d + ... + a_1 x with exact rational coefficients.

    Distances ||f(n)|| are decided exactly at integer n.  The order-d
    derivative is the constant d! * a_d, so lam = A*lam and A = 1;
    lambda1 and M are sampled sups with a small declared margin.
    """
    coeffs = tuple(Fraction(c) for c in coefficients)
    if not coeffs or coeffs[-1] <= 0:
        raise CertificateError("polynomial preset needs a positive leading coefficient")
    d = len(coeffs)
    lo, hi = domain or _default_domain(N)

    # Each derivative is stored as (constant term, coefficients of x^1..).
    def derive(poly: tuple[Fraction, tuple[Fraction, ...]]):
        const, cs = poly
        new_const = cs[0] if cs else Fraction(0)
        new_cs = tuple(cs[j] * (j + 1) for j in range(1, len(cs)))
        return (new_const, new_cs)

    chain = [(Fraction(0), coeffs)]
    for _ in range(d):
        chain.append(derive(chain[-1]))

    def make_eval(poly) -> Callable[[float], float]:
        const, cs = poly

        def ev(x: float) -> float:
            acc = 0.0
            for a in reversed(cs):
                acc = (acc + float(a)) * x
            return acc + float(const)

        return ev

    def exact_eval(n: int) -> Fraction:
        acc = Fraction(0)
        for a in reversed(coeffs):
            acc = (acc + a) * n
        return acc

    lead = math.factorial(d) * coeffs[-1]
    grid = _sample_grid((lo, hi), 1025)
    slope = make_eval(chain[1])
    value = make_eval(chain[0])
    margin = 1.0 + 1e-6
    return SmoothCurve(
        evaluator=value,
        derivatives=tuple(make_eval(chain[j]) for j in range(1, d + 1)),
        k=d, domain=(lo, hi), lam=float(lead), A=1.0,
        lambda1=max(abs(slope(x)) for x in grid) * margin,
        M=max(abs(value(x)) for x in grid) * margin,
        exact_eval=exact_eval,
        name="poly", params={"coefficients": [str(c) for c in coeffs]},
    )


PRESET_BUILDERS = {
    "log": log_curve,
    "inverse_power": inverse_power_curve,
    "root_inverse": root_inverse_curve,
    "poly": poly_curve,
}
