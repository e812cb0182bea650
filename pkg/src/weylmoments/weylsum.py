"""Weyl sums S_az = sum_{m<=x} e(az*P(m)) and their discrete moments.

P is a degree-k polynomial with rational coefficients and zero constant
term.  Each phase az*P(m) is reduced mod 1 in exact rational arithmetic
before the single conversion to floating point, so huge phases cost one
ulp instead of all precision.  Real and imaginary parts are accumulated
with math.fsum in ascending m, which makes every value reproducible
bit-for-bit regardless of worker count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from .errors import BudgetError
from .parallel import ordered_map, resolve_workers

TWO_PI = 2.0 * math.pi

ORACLE_FLOOR_LIMIT = 2000  # quadratic-cost guard for the double-sum oracle


def floor_scale(x) -> int:
    """Exact floor of the summation length x (int, Fraction, float or decimal string)."""
    if isinstance(x, int):
        return x
    if isinstance(x, float):
        return math.floor(x)
    return math.floor(Fraction(x))


@dataclass(frozen=True)
class PolyCoeffs:
    """Coefficients (a_1, ..., a_k) of P(X) = a_k X^k + ... + a_1 X, constant term 0."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", coeffs)
        if len(coeffs) < 2:
            raise ValueError("degree must be at least 2")
        if coeffs[-1] == 0:
            raise ValueError("leading coefficient must be nonzero")

    @property
    def k(self) -> int:
        return len(self.coefficients)

    def phase(self, m: int) -> Fraction:
        """P(m), exact."""
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = (acc + c) * m
        return acc

    def leading(self) -> Fraction:
        return self.coefficients[-1]

    @classmethod
    def parse(cls, text: str) -> "PolyCoeffs":
        """Parse 'a1,a2,...,ak' where each entry is 'p/q' or a decimal literal."""
        return cls(tuple(Fraction(part.strip()) for part in text.split(",")))


@dataclass(frozen=True)
class WeylSumValue:
    re: float
    im: float
    magnitude: float


def _phase_unit(t: Fraction) -> tuple[float, float]:
    """e(t) for exact t, reducing t mod 1 before float conversion."""
    t = t - math.floor(t)
    angle = TWO_PI * float(t)
    return math.cos(angle), math.sin(angle)


def weyl_sum(P: PolyCoeffs, x, a: int, z: int = 1) -> WeylSumValue:
    """S_az = sum_{m <= floor(x)} e(a*z*P(m))."""
    if a * z < 1:
        raise ValueError("twist a*z must be a positive integer")
    n = floor_scale(x)
    w = a * z
    res, ims = [], []
    for m in range(1, n + 1):
        c, s = _phase_unit(w * P.phase(m))
        res.append(c)
        ims.append(s)
    re = math.fsum(res)
    im = math.fsum(ims)
    return WeylSumValue(re, im, math.hypot(re, im))


def weyl_sum_sq_oracle(P: PolyCoeffs, x, a: int, z: int = 1) -> float:
    """|S_az|^2 by the expanded double sum over pairs (m, n); test oracle only.

    Independent of weyl_sum: sums cos(2*pi*(az*(P(m)-P(n)) mod 1)) directly.
    """
    n = floor_scale(x)
    if n > ORACLE_FLOOR_LIMIT:
        raise BudgetError(f"double-sum oracle limited to floor(x) <= {ORACLE_FLOOR_LIMIT}")
    if n < 1:
        return 0.0
    w = a * z
    phases = [w * P.phase(m) for m in range(1, n + 1)]
    terms = []
    for pm in phases:
        for pn in phases:
            c, _ = _phase_unit(pm - pn)
            terms.append(c)
    return math.fsum(terms)


@dataclass(frozen=True)
class MomentReport:
    """Discrete moments sum_{a<=T} |S_az|^{2s} and sum_{a<=T} |S_az|."""

    x: float
    floor_x: int
    T: int
    z: int
    s: int
    moment_2s: float
    first_moment: float
    trivial_bound_first: float
    trivial_bound_2s: float


def discrete_moment(P: PolyCoeffs, x, T: int, z: int = 1, s: int = 1,
                    workers: int = 1) -> MomentReport:
    """Evaluate both moments over the twist range a = 1..T (T = 0 gives empty sums)."""
    if T < 0:
        raise ValueError("T must be nonnegative")
    if s < 1:
        raise ValueError("s must be a positive integer")
    n = floor_scale(x)
    workers = resolve_workers(workers)
    mags = ordered_map(lambda a: weyl_sum(P, x, a, z).magnitude,
                       list(range(1, T + 1)), workers)
    moment_2s = math.fsum(m ** (2 * s) for m in mags)
    first = math.fsum(mags)
    return MomentReport(
        x=float(x), floor_x=n, T=T, z=z, s=s,
        moment_2s=moment_2s, first_moment=first,
        trivial_bound_first=float(T * n),
        trivial_bound_2s=float(T) * float(n) ** (2 * s),
    )


@dataclass(frozen=True)
class HolderCheck:
    lhs: float
    rhs: float
    holds: bool


def holder_check(report: MomentReport) -> HolderCheck:
    """First moment against T^(1-1/2s) * (2s-moment)^(1/2s).

    Equality is attained when all |S_az| coincide, so `holds` allows a
    1e-9 relative slack for float roundoff.
    """
    lhs = report.first_moment
    if report.T == 0:
        return HolderCheck(0.0, 0.0, True)
    inv = 1.0 / (2 * report.s)
    rhs = report.T ** (1.0 - inv) * report.moment_2s ** inv
    return HolderCheck(lhs, rhs, lhs <= rhs * (1.0 + 1e-9))
