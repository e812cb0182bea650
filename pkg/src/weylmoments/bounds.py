"""Evaluable right-hand-side shapes for the moment and exponential-sum bounds.

Every asymptotic inequality handled here is turned into a literal
arithmetic expression with the implicit constant and the epsilon exponent
as explicit parameters (defaults 1 and 0).  Values produced this way are
diagnostics for ratio tracking, not proved numeric bounds.

Moment bounds for sum_{a<=T} |S_az| (twisted degree-k Weyl sums), with
s0 = (k-1)(k-2)/2 + 1, s1 = k(k-1)/2, s2 = s1 + 1:

  weyl             x * (1/q + 1/x + q/x^k)^(1/k(k-1)) * x^eps          [T=1, z=1]
  improved         T*x * (z x^(k-1)/q + z x^(k-1) log q / T + 1/x
                          + q log q/(T x))^(1/2s0) * x^eps
  standard         T*x * (z/q + z/x + q/(T x^k))^(1/2s1) * (Txz)^eps
  second_improved  T*x * (x^(k-1)/(qw) + x^(k-1)/T + 1/(xw)
                          + q/(T x))^(1/2s2) * x^eps
  conjectured      T*x * (z/q + z log q/T + 1/x^k
                          + q log q/(T x^k))^(1/2s0) * (Txz)^eps

The `improved` shape beats `standard` only for approximating denominators
q in the window z^sigma x^(k-sigma) << q << T x^sigma z^(1-sigma) with
sigma = 1 - s0/s1, provided T clears the critical size z^sigma x^(k-sigma);
`improvement_range` and `best_theorem` quantify this comparison with the
logs and constants kept, and report both the evaluated argmin and the
log-free prediction so boundary disagreements stay visible.

Smooth-function moment bounds for sum_{a<=T} |sum_{N<m<2N} e(az f(m))|
under 0 < lambda <= f^(k) <= A*lambda, with P := z*A*lambda*T and
mu := 1 + A*lambda*N:

  smooth_improved  N T P^(rho/k+eps) + T P^(-1/k) + T mu z^2 P^(2/k-2)
                   + mu z P^(1/k-1) / lambda,   rho = 1/((k-2)(k-3)+2)
  smooth_standard  N T P^(tau/k+eps) + T P^(-1/k) + A mu T P^(-2/k),
                   tau = 1/((k-1)(k-2))
  heath_brown      N^(1+eps) (lambda^(1/k(k-1)) + N^(-1/k(k-1))
                   + N^(-2/k(k-1)) lambda^(-2/k^2(k-1)))

Both smooth_* shapes require N^-k (zAl)^-1 <= T <= (zAl)^-1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .diophantine import RationalApprox, as_rational, dist_to_nearest_int

THEOREM_ORDER = (
    "weyl", "improved", "standard", "second_improved", "conjectured",
    "smooth_improved", "smooth_standard", "heath_brown",
)

MOMENT_THEOREMS = ("weyl", "improved", "standard", "second_improved", "conjectured")
SMOOTH_THEOREMS = ("smooth_improved", "smooth_standard", "heath_brown")


# ---------------------------------------------------------------------------
# derived exponents
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ExponentSet:
    """All k-derived exponents, exact; fields undefined below k=3 are None."""

    k: int
    s0: int
    s1: int
    s2: int
    sigma: Optional[Fraction]
    rho: Optional[Fraction]
    tau: Optional[Fraction]
    omega: Optional[Fraction]


def exponents(k: int) -> ExponentSet:
    if k < 2:
        raise ValueError("k must be at least 2")
    s0 = (k - 1) * (k - 2) // 2 + 1
    s1 = k * (k - 1) // 2
    s2 = s1 + 1
    if k >= 3:
        sigma = 1 - Fraction(s0, s1)
        rho = Fraction(1, (k - 2) * (k - 3) + 2)
        tau = Fraction(1, (k - 1) * (k - 2))
        omega = Fraction(1, (k - 1) * (k - 2) + 2)
        assert omega == Fraction(1, 2 * s0)  # 2*s0 = k(k-1) - 2k + 4
    else:
        sigma = rho = tau = omega = None
    return ExponentSet(k, s0, s1, s2, sigma, rho, tau, omega)


# ---------------------------------------------------------------------------
# moment bound shapes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RegimeInput:
    """Evaluation point (k, x, T, z, q[, w]) plus epsilon and implicit constant."""

    k: int
    x: float
    T: float
    z: int = 1
    q: int = 1
    w: Optional[int] = None
    epsilon: float = 0.0
    constant: float = 1.0

    def __post_init__(self):
        if self.x <= 1:
            raise ValueError("x must exceed 1")
        if self.T < 1:
            raise ValueError("T must be at least 1")
        if self.z < 1 or self.q < 1:
            raise ValueError("z and q must be positive integers")
        if self.epsilon < 0:
            raise ValueError("epsilon must be nonnegative")
        if self.constant <= 0:
            raise ValueError("constant must be positive")


@dataclass(frozen=True)
class BoundValue:
    """One evaluated RHS shape: value = constant * leading * (sum of terms)^exponent * eps_factor."""

    theorem: str
    value: float
    constant: float
    leading: float
    exponent: float
    bracket_terms: tuple[tuple[str, float], ...]
    eps_factor: float
    applicable: bool
    reason: str
    extras: dict = field(default_factory=dict)

    def bracket_sum(self) -> float:
        return math.fsum(v for _, v in self.bracket_terms)


def _assemble(theorem, inp, leading, terms, exponent, eps_factor,
              applicable=True, reason="", extras=None) -> BoundValue:
    bracket = math.fsum(v for _, v in terms)
    value = inp.constant * leading * bracket ** exponent * eps_factor
    return BoundValue(theorem, value, inp.constant, leading, exponent,
                      tuple(terms), eps_factor, applicable, reason, extras or {})


def rhs_moment(inp: RegimeInput, theorem: str) -> BoundValue:
    """Evaluate one moment-bound shape at the given point, exactly as printed."""
    k, x, T, z, q = inp.k, float(inp.x), float(inp.T), inp.z, inp.q
    exps = exponents(k)
    logq = math.log(q)

    if theorem == "weyl":
        terms = [("1/q", 1.0 / q), ("1/x", 1.0 / x), ("q/x^k", q / x ** k)]
        return _assemble(theorem, inp, x, terms, 1.0 / (k * (k - 1)),
                         x ** inp.epsilon,
                         reason="assumes (u,q)=1 with |alpha_k - u/q| < q^-2; T, z ignored")

    if theorem == "improved":
        if k < 3:
            raise ValueError("improved moment bound needs k >= 3")
        terms = [
            ("z*x^(k-1)/q", z * x ** (k - 1) / q),
            ("z*x^(k-1)*log(q)/T", z * x ** (k - 1) * logq / T),
            ("1/x", 1.0 / x),
            ("q*log(q)/(T*x)", q * logq / (T * x)),
        ]
        return _assemble(theorem, inp, T * x, terms, 1.0 / (2 * exps.s0),
                         x ** inp.epsilon,
                         reason="assumes (u,q)=1 with |alpha_k - u/q| < q^-2")

    if theorem == "standard":
        terms = [
            ("z/q", z / q),
            ("z/x", z / x),
            ("q/(T*x^k)", q / (T * x ** k)),
        ]
        return _assemble(theorem, inp, T * x, terms, 1.0 / (2 * exps.s1),
                         (T * x * z) ** inp.epsilon,
                         reason="assumes (u,q)=1 with |alpha_k - u/q| < q^-2")

    if theorem == "second_improved":
        if inp.w is None:
            raise ValueError("second_improved moment bound needs the auxiliary denominator w")
        w = inp.w
        ok = 1 <= w <= x ** (k - 1) * z
        terms = [
            ("x^(k-1)/(q*w)", x ** (k - 1) / (q * w)),
            ("x^(k-1)/T", x ** (k - 1) / T),
            ("1/(x*w)", 1.0 / (x * w)),
            ("q/(T*x)", q / (T * x)),
        ]
        return _assemble(theorem, inp, T * x, terms, 1.0 / (2 * exps.s2),
                         x ** inp.epsilon,
                         applicable=ok,
                         reason="assumes |alpha_k - u/q| < 1/(qT) and |z*q*alpha_(k-1) - v/w| < w^-2"
                                + ("" if ok else f"; w={w} outside [1, x^(k-1)*z]"))

    if theorem == "conjectured":
        if k < 3:
            raise ValueError("conjectured moment bound needs k >= 3")
        terms = [
            ("z/q", z / q),
            ("z*log(q)/T", z * logq / T),
            ("1/x^k", 1.0 / x ** k),
            ("q*log(q)/(T*x^k)", q * logq / (T * x ** k)),
        ]
        return _assemble(theorem, inp, T * x, terms, 1.0 / (2 * exps.s0),
                         (T * x * z) ** inp.epsilon,
                         reason="conjectural shape, not a proved bound")

    raise ValueError(f"unknown moment theorem {theorem!r}; choose from {MOMENT_THEOREMS}")


@dataclass(frozen=True)
class ImprovementRange:
    """Denominator window where the improved shape is predicted to win."""

    q_lo: float
    q_hi: float
    nonempty: bool
    critical_T: float
    T_reaches_critical: bool


def improvement_range(k: int, x: float, T: float, z: int = 1) -> ImprovementRange:
    """Window z^sigma x^(k-sigma) << q << T x^sigma z^(1-sigma), constants 1.

    `nonempty` uses strict comparison; the same lower quantity is the
    critical size for T, reported as `critical_T`.
    """
    if k < 3:
        raise ValueError("the comparison needs k >= 3")
    sigma = float(exponents(k).sigma)
    q_lo = z ** sigma * float(x) ** (k - sigma)
    q_hi = float(T) * float(x) ** sigma * z ** (1.0 - sigma)
    return ImprovementRange(q_lo, q_hi, q_lo < q_hi, q_lo, float(T) >= q_lo)


def predicted_best(inp: RegimeInput) -> str:
    """Log-free regime prediction: 'improved' inside the window, else 'standard'."""
    rng = improvement_range(inp.k, inp.x, inp.T, inp.z)
    inside = rng.T_reaches_critical and rng.q_lo <= inp.q <= rng.q_hi
    return "improved" if inside else "standard"


def argmin_theorem(values: dict) -> str:
    """Smallest evaluated bound; ties resolve to the earlier THEOREM_ORDER entry."""
    return min(values, key=lambda name: (values[name], THEOREM_ORDER.index(name)))


@dataclass(frozen=True)
class RegimeReport:
    """Side-by-side evaluation of the competing moment bounds at one point."""

    input: RegimeInput
    bounds: dict
    argmin: str
    predicted: str
    agree: bool
    range: ImprovementRange


def best_theorem(inp: RegimeInput) -> RegimeReport:
    """Evaluate the competing moment shapes and pick the smallest.

    The argmin is taken over the two proved general-purpose shapes
    ('improved' vs 'standard'); the conjectured shape and, when w is
    supplied, the second improved shape are evaluated alongside but
    flagged, since they rest on extra hypotheses.  Ties go to the earlier
    entry of THEOREM_ORDER.
    """
    if inp.k < 3:
        raise ValueError("regime comparison needs k >= 3")
    bounds = {
        "improved": rhs_moment(inp, "improved"),
        "standard": rhs_moment(inp, "standard"),
        "conjectured": rhs_moment(inp, "conjectured"),
    }
    if inp.w is not None:
        bounds["second_improved"] = rhs_moment(inp, "second_improved")
    argmin = argmin_theorem({name: bounds[name].value
                             for name in ("improved", "standard")})
    predicted = predicted_best(inp)
    return RegimeReport(inp, bounds, argmin, predicted, argmin == predicted,
                        improvement_range(inp.k, inp.x, inp.T, inp.z))


# ---------------------------------------------------------------------------
# sum lemmas: exact LHS against the printed RHS shape
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class LemmaResult:
    lhs: float
    rhs_shape: float
    ratio: float
    cert_ok: bool
    zero_hits: int
    log_substituted: bool


def q_squared_certificate(alpha: Fraction, q: int) -> tuple[bool, Optional[int]]:
    """Does some u with gcd(u,q)=1 satisfy |alpha - u/q| < q^-2?  Exact."""
    alpha = as_rational(alpha)
    base = math.floor(alpha * q)
    for u in (base, base + 1):
        if math.gcd(u, q) == 1 and abs(alpha - Fraction(u, q)) < Fraction(1, q * q):
            return True, u
    return False, None


def qx_certificate(alpha: Fraction, q: int, X) -> tuple[bool, Optional[int]]:
    """Does some u with gcd(u,q)=1 satisfy |alpha - u/q| < 1/(qX)?  Exact."""
    alpha = as_rational(alpha)
    bound = Fraction(1, q) / as_rational(X)
    base = math.floor(alpha * q)
    for u in (base, base + 1):
        if math.gcd(u, q) == 1 and abs(alpha - Fraction(u, q)) < bound:
            return True, u
    return False, None


def _min_term(X: float, dist: Fraction) -> tuple[float, bool]:
    """min(X, ||.||^-1), with exact zero distance contributing X."""
    if dist == 0:
        return X, True
    return min(X, float(1 / dist)), False


def sum_lemma_pair(alpha: Fraction, beta: Fraction, X: float,
                   Z: int, Y: int, q: int) -> LemmaResult:
    """sum_{Z<=h<=Y} min(X, ||alpha*h + beta||^-1) against (X + q log q)((Y-Z)/q + 1).

    Distances are exact rationals; a zero distance contributes X (the
    geometric-sum origin of the minimum caps such terms at the full
    length).  The caller's hypothesis |alpha - u/q| < q^-2 is verified
    and recorded in cert_ok, never enforced.
    """
    alpha, beta = as_rational(alpha), as_rational(beta)
    cert_ok, _ = q_squared_certificate(alpha, q)
    rhs = (X + q * math.log(q)) * ((Y - Z) / q + 1.0)
    if Y < Z:
        return LemmaResult(0.0, rhs, 0.0, cert_ok, 0, False)
    terms = []
    zero_hits = 0
    for h in range(Z, Y + 1):
        term, hit = _min_term(X, dist_to_nearest_int(alpha * h + beta))
        terms.append(term)
        zero_hits += hit
    lhs = math.fsum(terms)
    ratio, substituted = _safe_ratio(lhs, rhs, X, q, (Y - Z) / q + 1.0)
    return LemmaResult(lhs, rhs, ratio, cert_ok, zero_hits, substituted)


def var_sum_lemma_pair(alpha: Fraction, beta: Fraction, X: float, q: int) -> LemmaResult:
    """sum_{1<=j<=q} min(X, ||alpha*j + beta||^-1) against min(X, q/||beta*q||) + q log q."""
    alpha, beta = as_rational(alpha), as_rational(beta)
    cert_ok, _ = qx_certificate(alpha, q, X)
    dist_bq = dist_to_nearest_int(beta * q)
    first = X if dist_bq == 0 else min(X, float(q / dist_bq))
    rhs = first + q * math.log(q)
    terms = []
    zero_hits = 0
    for j in range(1, q + 1):
        term, hit = _min_term(X, dist_to_nearest_int(alpha * j + beta))
        terms.append(term)
        zero_hits += hit
    lhs = math.fsum(terms)
    ratio, substituted = _safe_ratio(lhs, rhs, first, q, 1.0)
    return LemmaResult(lhs, rhs, ratio, cert_ok, zero_hits, substituted)


def _safe_ratio(lhs: float, rhs: float, base: float, q: int,
                scale: float) -> tuple[float, bool]:
    """lhs/rhs; if rhs degenerates to zero, substitute max(log q, 1) and flag."""
    if rhs > 0:
        return lhs / rhs, False
    rhs_sub = (base + q * max(math.log(q), 1.0)) * scale
    return (lhs / rhs_sub if rhs_sub > 0 else math.inf), True


# ---------------------------------------------------------------------------
# major/minor arc classification
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ArcDecision:
    is_major: bool
    witness: Optional[RationalApprox]
    q_max: int


def major_arc_classify(alpha: Fraction, k: int, x, T, z: int = 1) -> ArcDecision:
    """Is alpha within 1/(qT) of some u/q with q <= z*x^(k-1)?  Exact.

    Scans q upward; for each q only the two integers nearest q*alpha can
    qualify.  Returns the witness with the smallest certifying q.
    """
    alpha = as_rational(alpha)
    alpha -= math.floor(alpha)
    xr = as_rational(x)
    Tr = as_rational(T)
    q_max = math.floor(z * xr ** (k - 1))
    for q in range(1, q_max + 1):
        radius = Fraction(1, q) / Tr
        base = math.floor(alpha * q)
        for u in (base, base + 1):
            if math.gcd(u, q) == 1 and abs(alpha - Fraction(u, q)) <= radius:
                return ArcDecision(True, RationalApprox.of(alpha, u, q), q_max)
    return ArcDecision(False, None, q_max)


# ---------------------------------------------------------------------------
# smooth-function moment bound shapes
# ---------------------------------------------------------------------------

def rhs_smooth(N: int, T: float, z: int, A: float, lam: float, k: int,
               theorem: str, epsilon: float = 0.0, constant: float = 1.0) -> BoundValue:
    """Evaluate one smooth-moment shape; T outside its window flips `applicable`."""
    if k < 3:
        raise ValueError("smooth-moment bounds need k >= 3")
    if lam <= 0 or A * lam < lam:
        raise ValueError("need 0 < lambda <= A*lambda")
    inp = RegimeInput(k=k, x=float(N), T=max(float(T), 1.0), z=z,
                      epsilon=epsilon, constant=constant)
    exps = exponents(k)
    mu = 1.0 + A * lam * N
    nt = float(N) * float(T)

    if theorem == "heath_brown":
        kk1 = k * (k - 1)
        terms = [
            ("lambda^(1/k(k-1))", lam ** (1.0 / kk1)),
            ("N^(-1/k(k-1))", float(N) ** (-1.0 / kk1)),
            ("N^(-2/k(k-1))*lambda^(-2/k^2(k-1))",
             float(N) ** (-2.0 / kk1) * lam ** (-2.0 / (k * kk1))),
        ]
        return _assemble(theorem, inp, float(N) ** (1.0 + epsilon), terms, 1.0, 1.0,
                         reason="single-sum bound; T and z play no role",
                         extras={"trivial": float(N)})

    P = z * A * lam * float(T)
    t_lo = float(N) ** (-k) / (z * A * lam)
    t_hi = 1.0 / (z * A * lam)
    in_window = t_lo <= float(T) <= t_hi
    reason = "" if in_window else (
        f"T={T} outside window [{t_lo}, {t_hi}] = [N^-k/(zAl), 1/(zAl)]")

    if theorem == "smooth_improved":
        rho = float(exps.rho)
        terms = [
            ("N*T*(zAlT)^(rho/k+eps)", nt * P ** (rho / k + epsilon)),
            ("T*(zAlT)^(-1/k)", float(T) * P ** (-1.0 / k)),
            ("T*mu*z^2*(zAlT)^(2/k-2)", float(T) * mu * z ** 2 * P ** (2.0 / k - 2.0)),
            ("mu*z*(zAlT)^(1/k-1)/lambda", mu * z * P ** (1.0 / k - 1.0) / lam),
        ]
        extras = {
            "trivial": nt,
            "threshold_t1": mu ** (k / (2.0 * k - 2.0)) * z ** (1.0 / (k - 1))
                            / (A * lam) * float(N) ** (k / (2.0 - 2.0 * k)),
            "threshold_t2": mu ** (k / (2.0 * k - 1.0)) * z ** (1.0 / (2.0 * k - 1.0))
                            * A ** ((1.0 - k) / (2.0 * k - 1.0)) / lam
                            * float(N) ** (k / (1.0 - 2.0 * k)),
        }
    elif theorem == "smooth_standard":
        tau = float(exps.tau)
        terms = [
            ("N*T*(zAlT)^(tau/k+eps)", nt * P ** (tau / k + epsilon)),
            ("T*(zAlT)^(-1/k)", float(T) * P ** (-1.0 / k)),
            ("A*mu*T*(zAlT)^(-2/k)", A * mu * float(T) * P ** (-2.0 / k)),
        ]
        extras = {
            "trivial": nt,
            "threshold_tt1": mu ** (k / 2.0) * A ** (k / 2.0 - 1.0)
                             / (z * lam) * float(N) ** (-k / 2.0),
        }
    else:
        raise ValueError(f"unknown smooth theorem {theorem!r}; choose from {SMOOTH_THEOREMS}")

    bound = _assemble(theorem, inp, 1.0, terms, 1.0, 1.0,
                      applicable=in_window, reason=reason, extras=extras)
    return bound


# ---------------------------------------------------------------------------
# shipped certified grids for ratio tracking
# ---------------------------------------------------------------------------

def sum_lemma_grid() -> list[tuple[Fraction, Fraction, float, int, int, int]]:
    """Certified (alpha, beta, X, Z, Y, q) points: every alpha satisfies
    |alpha - u/q| < q^-2 for its paired q."""
    pairs = [(1, 3), (2, 5), (5, 8), (13, 40), (7, 19), (1, 2)]
    alphas = []
    for u, q in pairs:
        alphas.append((Fraction(u, q), q))
        alphas.append((Fraction(u, q) + Fraction(1, 3 * q ** 3), q))
    betas = [Fraction(0), Fraction(1, 7), Fraction(3, 5)]
    grid = []
    for alpha, q in alphas:
        for beta in betas:
            for X in (10.0, 250.0):
                for Z, Y in ((1, 25), (0, 60), (5, 5)):
                    grid.append((alpha, beta, X, Z, Y, q))
    return grid


def var_sum_lemma_grid() -> list[tuple[Fraction, Fraction, float, int]]:
    """Certified (alpha, beta, X, q) points: |alpha - u/q| < 1/(qX) holds."""
    pairs = [(1, 3), (2, 5), (5, 8), (13, 40), (7, 19), (0, 1)]
    betas = [Fraction(0), Fraction(1, 7), Fraction(3, 5)]
    grid = []
    for u, q in pairs:
        for X in (10, 250):
            for exact in (True, False):
                alpha = Fraction(u, q) if exact else Fraction(u, q) + Fraction(1, 2 * q * q * X)
                for beta in betas:
                    grid.append((alpha, beta, float(X), q))
    return grid


def run_sum_lemma_grid() -> list[LemmaResult]:
    return [sum_lemma_pair(*point) for point in sum_lemma_grid()]


def run_var_sum_lemma_grid() -> list[LemmaResult]:
    return [var_sum_lemma_pair(*point) for point in var_sum_lemma_grid()]
