"""Large-sieve double sum against an independent oracle, plus bound shapes."""

import cmath
import math
import random
from fractions import Fraction

import pytest

from weylmoments.errors import BudgetError, CertificateError
from weylmoments.largesieve import (MonicPoly, make_weights,
                                    range_and_setting_check, sieve_bounds,
                                    sigma_p)

X_SQUARED = MonicPoly.parse("x^2")
X_CUBED = MonicPoly.parse("x^3")
X_CUBED_PLUS_X = MonicPoly.parse("x^3+x")


def sigma_p_oracle(P, Q, v, M=0):
    """Independent triple loop: direct complex exponentials, no reduction."""
    total = 0.0
    for q in range(1, Q + 1):
        pq = int(P.value(q))
        for a in range(1, pq + 1):
            if math.gcd(a, pq) != 1:
                continue
            inner = sum(v[i] * cmath.exp(2j * math.pi * a * (M + 1 + i) / pq)
                        for i in range(len(v)))
            total += abs(inner) ** 2
    return total


def test_hand_fixtures():
    assert sigma_p(X_SQUARED, 1, [1, 1]) == pytest.approx(4.0, abs=1e-12)
    assert sigma_p(X_SQUARED, 2, [1]) == pytest.approx(3.0, abs=1e-12)
    assert sigma_p(X_SQUARED, 2, [0, 0]) == 0.0


def test_oracle_agreement_random():
    rng = random.Random(108)
    for _ in range(20):
        P = rng.choice([X_SQUARED, X_CUBED, X_CUBED_PLUS_X])
        Q = rng.randint(1, 3)
        N = rng.randint(1, 16)
        M = rng.randint(-5, 5)
        v = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(N)]
        mine = sigma_p(P, Q, v, M)
        ref = sigma_p_oracle(P, Q, v, M)
        assert mine == pytest.approx(ref, rel=1e-9, abs=1e-9)


def test_quadratic_scaling():
    rng = random.Random(109)
    v = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(8)]
    c = complex(0.3, -1.7)
    base = sigma_p(X_CUBED, 2, v)
    scaled = sigma_p(X_CUBED, 2, [c * w for w in v])
    assert scaled == pytest.approx(abs(c) ** 2 * base, rel=1e-9)


def test_q1_partial_sum_lower_bound():
    rng = random.Random(110)
    v = [complex(rng.uniform(-1, 1), rng.uniform(-1, 1)) for _ in range(10)]
    assert sigma_p(X_SQUARED, 3, v) >= sigma_p(X_SQUARED, 1, v) - 1e-12


def test_full_period_orthogonality():
    """All-ones weights over full periods: only moduli P(q) = 1 survive.

    With N a multiple of every P(q), each inner sum over a full period
    vanishes for P(q) > 1 (coprime a), and equals N for P(q) = 1; the
    closed form is N^2 * #{q <= Q : P(q) = 1}.
    """
    Q, N = 2, 4  # P(1) = 1, P(2) = 4, lcm = 4
    v = make_weights("ones", N)
    expected = N ** 2 * sum(1 for q in range(1, Q + 1) if X_SQUARED.modulus(q) == 1)
    assert sigma_p(X_SQUARED, Q, v) == pytest.approx(expected, rel=1e-9)
    # degenerate single-modulus case where every phase really is integral:
    # the phi-weighted closed form applies as printed
    assert sigma_p(X_SQUARED, 1, v) == pytest.approx(1 * N ** 2, rel=1e-12)


def test_sieve_bounds_fixtures():
    b = sieve_bounds(10, 10 ** 4, 3)
    assert b.terms["a_k"] == pytest.approx(2 * 10 ** (29 / 6), rel=1e-12)
    assert b.terms["a_k_term1"] == pytest.approx(b.terms["a_k_term2"], rel=1e-12)
    assert b.terms["improved_second"] == pytest.approx(10 ** 5.25, rel=1e-12)
    # the min picks a_k here
    assert b.values["improved"] == pytest.approx(10 ** 4 + b.terms["a_k"], rel=1e-12)
    assert b.values["zhao"] == pytest.approx(2 * 10 ** 4, rel=1e-12)
    assert b.values["standard"] == pytest.approx(10 ** 4 + b.terms["a_k"], rel=1e-12)


def test_sieve_bounds_scaling_and_thresholds():
    plain = sieve_bounds(10, 100, 3)
    scaled = sieve_bounds(10, 100, 3, v_norm_sq=2.5, epsilon=0.5)
    factor = 10 ** 0.5 * 2.5
    for name, value in plain.values.items():
        assert scaled.values[name] == pytest.approx(factor * value, rel=1e-12)
    low = sieve_bounds(10, 100, 2)
    assert low.omitted == ("improved", "conjectured")
    assert set(low.values) == {"standard", "zhao"}
    with pytest.raises(ValueError):
        sieve_bounds(10, 100, 1)


def test_range_and_setting_check():
    chk = range_and_setting_check(X_CUBED, 10, 10 ** 4)
    assert chk.range_ok and chk.setting_ok
    chk = range_and_setting_check(X_CUBED, 10, 10)
    assert not chk.range_ok
    bad = MonicPoly(2, (Fraction(1, 2),))
    chk = range_and_setting_check(bad, 2, 16)
    assert not chk.setting_ok and "not a positive integer" in chk.details


def test_setting_violation_raises():
    bad = MonicPoly(2, (Fraction(1, 2),))
    with pytest.raises(CertificateError):
        sigma_p(bad, 2, [1, 1])


def test_budget():
    with pytest.raises(BudgetError):
        sigma_p(X_CUBED, 4, [1] * 32, budget=100)


def test_parse_and_describe():
    assert X_CUBED_PLUS_X.k == 3
    assert X_CUBED_PLUS_X.lower_coeffs == (Fraction(1), Fraction(0))
    assert MonicPoly.parse("x^2 - 2x").lower_coeffs == (Fraction(-2),)
    assert X_CUBED_PLUS_X.describe() == "x^3 + x"
    with pytest.raises(ValueError):
        MonicPoly.parse("2x^2")     # not monic
    with pytest.raises(ValueError):
        MonicPoly.parse("x^2+1")    # constant term


def test_make_weights():
    assert make_weights("ones", 3) == [1, 1, 1]
    assert make_weights("alternating", 4) == [1, -1, 1, -1]
    r1 = make_weights("random", 5, seed=42)
    r2 = make_weights("random", 5, seed=42)
    assert r1 == r2
    assert r1 != make_weights("random", 5, seed=43)
    with pytest.raises(ValueError):
        make_weights("nope", 3)
