"""Brute-force evaluation of the polynomial large-sieve quantity.

Sigma_P sums |sum_{M<n<=M+N} v_n e(an/P(q))|^2 over moduli P(q), q <= Q,
and residues a coprime to P(q).  P must be monic with P(0) = 0 and take
positive integer values on [1, 2Q] so that P(q) is a genuine modulus;
each phase an/P(q) is reduced mod P(q) in integer arithmetic before the
complex exponential is evaluated.

Bound shapes (each times Q^eps * ||v||^2, with omega = 1/((k-1)(k-2)+2)):

  standard     Q^(k+1) + A_k(Q,N),
               A_k = N Q^(1-1/k(k-1)) + N^(1-1/k(k-1)) Q^(1+1/(k-1))
  improved     Q^(k+1) + min(A_k, N^(1-omega) Q^(1+(2k-1)omega))
  conjectured  Q^(k+1) + min(A_k, N^(1-omega) Q^(1+k*omega))   [unproved]
  zhao         Q^(k+1) + N                                     [conjectural sharp form]

The interesting window is Q^k <= N <= Q^(2k); outside it the zhao shape
is already known to hold.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BudgetError, CertificateError
from .parallel import ordered_map, resolve_workers, split_range
from .vinogradov import DEFAULT_BUDGET

TWO_PI = 2.0 * math.pi

SIEVE_BOUNDS = ("standard", "improved", "conjectured", "zhao")


@dataclass(frozen=True)
class MonicPoly:
    """Monic degree-k polynomial with zero constant term: x^k + sum c_j x^j."""

    k: int
    lower_coeffs: tuple[Fraction, ...]  # degrees 1..k-1

    def __post_init__(self):
        if self.k < 2:
            raise ValueError("degree must be at least 2")
        coeffs = tuple(Fraction(c) for c in self.lower_coeffs)
        if len(coeffs) != self.k - 1:
            raise ValueError(f"need exactly {self.k - 1} lower coefficients")
        object.__setattr__(self, "lower_coeffs", coeffs)

    def value(self, q: int) -> Fraction:
        acc = Fraction(1)  # leading coefficient
        for c in reversed(self.lower_coeffs):
            acc = acc * q + c
        return acc * q

    def modulus(self, q: int) -> int:
        """P(q) as a positive integer; anything else violates the setting."""
        v = self.value(q)
        if v.denominator != 1 or v <= 0:
            raise CertificateError(
                f"P({q}) = {v} is not a positive integer; not a usable modulus")
        return int(v)

    def describe(self) -> str:
        parts = [f"x^{self.k}"]
        for j in range(self.k - 1, 0, -1):
            c = self.lower_coeffs[j - 1]
            if c:
                term = "x" if j == 1 else f"x^{j}"
                parts.append(f"{c}*{term}" if c != 1 else term)
        return " + ".join(parts)

    @classmethod
    def parse(cls, text: str) -> "MonicPoly":
        """Parse simple sums of monomials such as 'x^3+x' or 'x^2 - 2x'."""
        cleaned = text.replace(" ", "").replace("-", "+-")
        terms = [t for t in cleaned.split("+") if t]
        coeffs: dict[int, Fraction] = {}
        for term in terms:
            if "x" not in term:
                raise ValueError(f"constant term {term!r} not allowed (P(0) = 0)")
            coeff_part, _, power_part = term.partition("x")
            if coeff_part in ("", "-"):
                coeff = Fraction(coeff_part + "1")
            else:
                coeff = Fraction(coeff_part.rstrip("*"))
            power = int(power_part[1:]) if power_part.startswith("^") else 1
            coeffs[power] = coeffs.get(power, Fraction(0)) + coeff
        k = max(coeffs)
        if coeffs.get(k) != 1:
            raise ValueError("polynomial must be monic")
        return cls(k, tuple(coeffs.get(j, Fraction(0)) for j in range(1, k)))


def check_setting(P: MonicPoly, Q: int) -> None:
    """P(q) must be a positive integer for every q in [1, 2Q]."""
    for q in range(1, 2 * Q + 1):
        P.modulus(q)


def sigma_p(P: MonicPoly, Q: int, v: Sequence[complex], M: int = 0,
            budget: int = DEFAULT_BUDGET, workers: int = 1) -> float:
    """The large-sieve double sum, with N = len(v) and v_n = v[n - M - 1]."""
    if Q < 1:
        raise ValueError("Q must be a positive integer")
    N = len(v)
    if N == 0:
        return 0.0
    check_setting(P, Q)
    cost = sum(P.modulus(q) for q in range(1, Q + 1)) * N
    if cost > budget:
        raise BudgetError(f"sigma_p needs ~{cost} phase evaluations > budget {budget}")
    vc = [complex(c) for c in v]

    def per_q(q_range: range) -> list[float]:
        squares = []
        for q in q_range:
            pq = P.modulus(q)
            for a in range(1, pq + 1):
                if math.gcd(a, pq) != 1:
                    continue
                res, ims = [], []
                for idx in range(N):
                    n = M + 1 + idx
                    theta = ((a * n) % pq) / pq
                    c, s = math.cos(TWO_PI * theta), math.sin(TWO_PI * theta)
                    w = vc[idx]
                    res.append(w.real * c - w.imag * s)
                    ims.append(w.real * s + w.imag * c)
                squares.append(math.fsum(res) ** 2 + math.fsum(ims) ** 2)
        return squares

    workers = resolve_workers(workers)
    parts = ordered_map(per_q, split_range(1, Q + 1, workers), workers)
    return math.fsum(sq for part in parts for sq in part)


@dataclass(frozen=True)
class SieveBoundSet:
    values: dict
    terms: dict
    omitted: tuple[str, ...]


def sieve_bounds(Q: int, N: int, k: int, v_norm_sq: float = 1.0,
                 epsilon: float = 0.0) -> SieveBoundSet:
    """All applicable bound shapes at (Q, N, k), scaled by Q^eps * ||v||^2."""
    if k < 2:
        raise ValueError("k must be at least 2")
    scale = float(Q) ** epsilon * v_norm_sq
    inv = 1.0 / (k * (k - 1))
    q_power = float(Q) ** (k + 1)
    a_k_1 = N * float(Q) ** (1.0 - inv)
    a_k_2 = float(N) ** (1.0 - inv) * float(Q) ** (1.0 + 1.0 / (k - 1))
    a_k = a_k_1 + a_k_2
    terms = {
        "q_power": q_power,
        "a_k_term1": a_k_1,
        "a_k_term2": a_k_2,
        "a_k": a_k,
        "n_term": float(N),
    }
    values = {
        "standard": scale * (q_power + a_k),
        "zhao": scale * (q_power + N),
    }
    omitted: tuple[str, ...] = ()
    if k >= 3:
        omega = 1.0 / ((k - 1) * (k - 2) + 2)
        improved_2 = float(N) ** (1.0 - omega) * float(Q) ** (1.0 + (2 * k - 1) * omega)
        conjectured_2 = float(N) ** (1.0 - omega) * float(Q) ** (1.0 + k * omega)
        terms["improved_second"] = improved_2
        terms["conjectured_second"] = conjectured_2
        values["improved"] = scale * (q_power + min(a_k, improved_2))
        values["conjectured"] = scale * (q_power + min(a_k, conjectured_2))
    else:
        omitted = ("improved", "conjectured")
    return SieveBoundSet(values, terms, omitted)


@dataclass(frozen=True)
class SettingReport:
    range_ok: bool
    setting_ok: bool
    details: str


def range_and_setting_check(P: MonicPoly, Q: int, N: int) -> SettingReport:
    """Interesting range Q^k <= N <= Q^2k and modulus-size setting, constants 1.

    Setting: P positive-integer-valued with P(q) >= Q^k / 2^k on the
    integers q in [Q, 2Q]; monicity and P(0) = 0 hold structurally.
    """
    k = P.k
    range_ok = Q ** k <= N <= Q ** (2 * k)
    issues = []
    floor_frac = Fraction(Q ** k, 2 ** k)
    for q in range(Q, 2 * Q + 1):
        try:
            pq = P.modulus(q)
        except CertificateError as exc:
            issues.append(str(exc))
            continue
        if pq < floor_frac:
            issues.append(f"P({q}) = {pq} < Q^k/2^k = {float(floor_frac):.6g}")
    setting_ok = not issues
    details = "; ".join(issues) if issues else (
        f"monic degree {k}, P(0) = 0, all P(q) >= Q^k/2^k on [Q, 2Q]")
    return SettingReport(range_ok, setting_ok, details)


def make_weights(kind: str, N: int, seed: Optional[int] = None) -> list[complex]:
    """Shipped weight generators: all-ones, alternating, seeded complex."""
    if kind == "ones":
        return [1 + 0j] * N
    if kind == "alternating":
        return [complex((-1) ** i) for i in range(N)]
    if kind == "random":
        rng = random.Random(0 if seed is None else seed)
        return [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(N)]
    raise ValueError(f"unknown weight kind {kind!r}; choose ones, alternating or random")
