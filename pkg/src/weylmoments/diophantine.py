"""Exact rational arithmetic for Diophantine approximation.

All quantities are `fractions.Fraction`, so ``||alpha||`` (distance to the
nearest integer), continued-fraction convergents and Dirichlet
approximations are computed and certified exactly.  Python integers are
unbounded, so no operation here can overflow or lose exactness.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction

ONE_HALF = Fraction(1, 2)


def as_rational(value) -> Fraction:
    """Convert int/Fraction/str to an exact Fraction.

    Strings may be 'p/q' or decimal literals ('0.325'); both convert
    exactly as printed.  Floats are converted via their exact binary value.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    if isinstance(value, float):
        return Fraction(value)
    raise TypeError(f"cannot interpret {value!r} as a rational number")


def dist_to_nearest_int(alpha: Fraction) -> Fraction:
    """||alpha||: exact distance from alpha to the nearest integer, in [0, 1/2]."""
    frac = alpha - math.floor(alpha)
    return min(frac, 1 - frac)


@dataclass(frozen=True)
class RationalApprox:
    """A reduced fraction u/q approximating some alpha, with exact error |alpha - u/q|."""

    u: int
    q: int
    error: Fraction

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("denominator must be positive")
        if math.gcd(self.u, self.q) != 1:
            raise ValueError("u/q must be in lowest terms")
        if self.error < 0:
            raise ValueError("error must be nonnegative")

    @classmethod
    def of(cls, alpha: Fraction, u: int, q: int) -> "RationalApprox":
        g = math.gcd(u, q)
        u, q = u // g, q // g
        return cls(u, q, abs(alpha - Fraction(u, q)))

    @property
    def value(self) -> Fraction:
        return Fraction(self.u, self.q)

    def within_q_squared(self) -> bool:
        """Certificate |alpha - u/q| < q^-2 (exact comparison)."""
        return self.error < Fraction(1, self.q * self.q)

    def within_qT(self, T) -> bool:
        """Certificate |alpha - u/q| < 1/(qT) (exact comparison)."""
        return self.error < Fraction(1, self.q) / as_rational(T)

    def within_dirichlet(self, Q: int) -> bool:
        """Certificate |alpha - u/q| <= 1/(q(Q+1)) (exact comparison)."""
        return self.error <= Fraction(1, self.q * (Q + 1))


def convergents(alpha: Fraction) -> list[RationalApprox]:
    """All continued-fraction convergents u_i/q_i of a rational alpha, in order.

    The final convergent equals alpha exactly; denominators are strictly
    increasing from the second entry on.
    """
    alpha = as_rational(alpha)
    p, q = alpha.numerator, alpha.denominator
    # Euclidean partial quotients of p/q.
    quotients = []
    while q:
        a, r = divmod(p, q)
        quotients.append(a)
        p, q = q, r
    u_prev, u_cur = 1, quotients[0]
    q_prev, q_cur = 0, 1
    out = [RationalApprox(u_cur, q_cur, abs(alpha - u_cur))]
    for a in quotients[1:]:
        u_prev, u_cur = u_cur, a * u_cur + u_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(RationalApprox(u_cur, q_cur, abs(alpha - Fraction(u_cur, q_cur))))
    return out


def dirichlet_approx(alpha: Fraction, Q: int) -> RationalApprox:
    """Best small-denominator approximation with certified Dirichlet quality.

    Returns (u, q) with 1 <= q <= Q, gcd(u, q) = 1 and
    |alpha - u/q| <= 1/(q(Q+1)), verified in exact arithmetic.  Among all
    certifying denominators the smallest is returned; it is always a
    convergent denominator (any q below the next convergent approximates
    no better than the convergent itself), so scanning convergents in
    order of q is exhaustive.
    """
    if Q < 1:
        raise ValueError("Q must be >= 1")
    alpha = as_rational(alpha)
    for approx in convergents(alpha):
        if approx.q > Q:
            break
        if approx.within_dirichlet(Q):
            return approx
    raise AssertionError("Dirichlet's theorem guarantees a certifying convergent")
