"""Bound-shape evaluation, regime comparison, sum lemmas, arc classification."""

import math
from fractions import Fraction

import pytest

from weylmoments import bounds
from weylmoments.bounds import (RegimeInput, argmin_theorem, best_theorem,
                                exponents, improvement_range,
                                major_arc_classify, predicted_best, rhs_moment,
                                rhs_smooth, sum_lemma_pair, var_sum_lemma_pair)


def rel_close(a, b, tol=1e-12):
    return a == pytest.approx(b, rel=tol)


# ---------------------------------------------------------------------------
# exponents
# ---------------------------------------------------------------------------

def test_exponents_table():
    e = exponents(3)
    assert (e.s0, e.s1, e.s2) == (2, 3, 4)
    assert (e.sigma, e.rho, e.tau, e.omega) == (
        Fraction(1, 3), Fraction(1, 2), Fraction(1, 2), Fraction(1, 4))
    e = exponents(4)
    assert (e.s0, e.s1, e.s2) == (4, 6, 7)
    assert (e.sigma, e.rho, e.tau, e.omega) == (
        Fraction(1, 3), Fraction(1, 4), Fraction(1, 6), Fraction(1, 8))
    e = exponents(5)
    assert (e.s0, e.s1) == (7, 10)
    assert (e.sigma, e.rho, e.tau, e.omega) == (
        Fraction(3, 10), Fraction(1, 8), Fraction(1, 12), Fraction(1, 14))


def test_exponents_identities_and_edges():
    for k in range(3, 12):
        e = exponents(k)
        assert 2 * e.s0 == k * (k - 1) - 2 * k + 4
        assert e.sigma == Fraction(2, k) - Fraction(2, k * (k - 1))
    e = exponents(2)
    assert (e.s0, e.s1, e.s2) == (1, 1, 2)
    assert e.sigma is None and e.tau is None
    with pytest.raises(ValueError):
        exponents(1)


# ---------------------------------------------------------------------------
# moment shapes
# ---------------------------------------------------------------------------

def test_standard_shape_value():
    bv = rhs_moment(RegimeInput(k=3, x=100, T=1000, z=1, q=100), "standard")
    bracket = 1 / 100 + 1 / 100 + 100 / (1000 * 100.0 ** 3)
    assert rel_close(bv.bracket_sum(), bracket)
    assert rel_close(bv.value, 1000 * 100 * bracket ** (1 / 6))


def test_improved_shape_value():
    bv = rhs_moment(RegimeInput(k=3, x=100, T=1e7, z=1, q=10 ** 6), "improved")
    lq = math.log(10 ** 6)
    bracket = (100.0 ** 2 / 1e6 + 100.0 ** 2 * lq / 1e7
               + 1 / 100 + 1e6 * lq / (1e7 * 100))
    assert rel_close(bv.bracket_sum(), bracket)
    assert rel_close(bv.value, 1e7 * 100 * bracket ** 0.25)


def test_standard_no_improvement_at_q1():
    bv = rhs_moment(RegimeInput(k=3, x=50, T=100, z=1, q=1), "standard")
    assert bv.bracket_sum() >= 1.0
    assert bv.value >= 100 * 50


def test_second_improved_and_conjectured():
    inp = RegimeInput(k=3, x=100, T=1e5, z=1, q=1000, w=50)
    bv = rhs_moment(inp, "second_improved")
    expected = (100.0 ** 2 / (1000 * 50) + 100.0 ** 2 / 1e5 + 1 / (100 * 50)
                + 1000 / (1e5 * 100))
    assert rel_close(bv.bracket_sum(), expected)
    assert bv.applicable
    bad = rhs_moment(RegimeInput(k=3, x=10, T=10, z=1, q=2, w=10 ** 9),
                     "second_improved")
    assert not bad.applicable
    with pytest.raises(ValueError):
        rhs_moment(RegimeInput(k=3, x=10, T=10), "second_improved")  # missing w
    bv = rhs_moment(inp, "conjectured")
    lq = math.log(1000)
    assert rel_close(bv.bracket_sum(),
                     1 / 1000 + lq / 1e5 + 100.0 ** -3 + 1000 * lq / (1e5 * 100 ** 3))


def test_k_thresholds():
    with pytest.raises(ValueError):
        rhs_moment(RegimeInput(k=2, x=10, T=10), "improved")
    with pytest.raises(ValueError):
        rhs_moment(RegimeInput(k=2, x=10, T=10), "conjectured")
    # standard and weyl run at k = 2
    rhs_moment(RegimeInput(k=2, x=10, T=10), "standard")
    rhs_moment(RegimeInput(k=2, x=10, T=10), "weyl")


def test_weyl_classic_is_standard_at_unit_T_and_z():
    """Same bracket term multiset and same value when T = z = 1."""
    for k in (2, 3, 5):
        for q in (1, 7, 120):
            inp = RegimeInput(k=k, x=300.0, T=1.0, z=1, q=q, epsilon=0.25)
            classic = rhs_moment(inp, "weyl")
            standard = rhs_moment(inp, "standard")
            assert 2 * exponents(k).s1 == k * (k - 1)
            assert (sorted(v for _, v in classic.bracket_terms)
                    == pytest.approx(sorted(v for _, v in standard.bracket_terms)))
            # epsilon bases differ as printed (x^eps vs (Txz)^eps = x^eps here)
            assert rel_close(classic.value, standard.value)


def test_q_terms_monotone_in_q():
    """Bracket terms carrying 1/q decrease as q grows, others frozen."""
    for theorem in ("weyl", "improved", "standard"):
        prev = None
        for q in (10, 100, 1000):
            inp = RegimeInput(k=3, x=50, T=100, z=1, q=q)
            terms = dict(rhs_moment(inp, theorem).bracket_terms)
            inverse_q = [v for label, v in terms.items()
                         if "/q" in label or "/(q" in label]
            assert inverse_q
            if prev is not None:
                assert all(cur <= p for cur, p in zip(inverse_q, prev))
            prev = inverse_q


def test_improvement_range_fixtures():
    r = improvement_range(3, 1e4, 1e10, 1)
    assert rel_close(r.q_lo, 10 ** (32 / 3))
    assert rel_close(r.q_hi, 10 ** (34 / 3))
    assert r.nonempty and not r.T_reaches_critical
    r = improvement_range(3, 1e4, 10, 1)
    assert not r.nonempty
    # boundary: T equal to the critical value still opens a window (strict <)
    crit = improvement_range(3, 1e4, 1.0, 1).critical_T
    r = improvement_range(3, 1e4, crit, 1)
    assert r.T_reaches_critical and r.nonempty


def test_best_theorem_and_prediction():
    # small q, large T: the z/q term favours the standard shape
    inp = RegimeInput(k=3, x=100.0, T=1e8, z=1, q=100)
    rep = best_theorem(inp)
    assert rep.argmin == "standard" == predicted_best(inp)
    # deep inside the window at large x the improved shape wins
    r = improvement_range(3, 1e4, 1.0, 1)
    T = 1e4 * r.critical_T
    q = int(30 * r.q_lo)
    inp = RegimeInput(k=3, x=1e4, T=T, z=1, q=q)
    rep = best_theorem(inp)
    assert rep.argmin == "improved" == rep.predicted and rep.agree
    # argmin always equals the direct minimum of the reported values
    assert rep.argmin == argmin_theorem(
        {n: rep.bounds[n].value for n in ("improved", "standard")})
    assert "conjectured" in rep.bounds


def test_argmin_tie_break():
    assert argmin_theorem({"improved": 1.0, "standard": 1.0}) == "improved"
    assert argmin_theorem({"standard": 0.5, "improved": 1.0}) == "standard"


def test_bound_value_recomputable_and_positive():
    inp = RegimeInput(k=4, x=321.0, T=5e5, z=2, q=777, w=12, epsilon=0.125,
                      constant=3.5)
    for theorem in ("weyl", "improved", "standard", "second_improved",
                    "conjectured"):
        bv = rhs_moment(inp, theorem)
        assert bv.value > 0
        recomputed = (bv.constant * bv.leading * bv.bracket_sum() ** bv.exponent
                      * bv.eps_factor)
        assert rel_close(bv.value, recomputed)


# ---------------------------------------------------------------------------
# sum lemmas
# ---------------------------------------------------------------------------

def test_sum_lemma_fixtures():
    res = sum_lemma_pair(Fraction(1, 3), Fraction(0), 10.0, 1, 3, 3)
    assert res.lhs == pytest.approx(16.0, abs=1e-12)
    assert res.rhs_shape == pytest.approx((10 + 3 * math.log(3)) * (2 / 3 + 1))
    assert res.ratio == pytest.approx(16.0 / ((10 + 3 * math.log(3)) * (5 / 3)))
    assert res.cert_ok and res.zero_hits == 1

    res = sum_lemma_pair(Fraction(1, 2), Fraction(1, 4), 4.0, 1, 2, 2)
    assert res.lhs == pytest.approx(8.0, abs=1e-12)

    res = sum_lemma_pair(Fraction(1, 3), Fraction(0), 10.0, 5, 1, 3)
    assert res.lhs == 0.0 and res.ratio == 0.0


def test_var_sum_lemma_fixtures():
    res = var_sum_lemma_pair(Fraction(1, 3), Fraction(1, 5), 5.0, 3)
    assert res.lhs == pytest.approx(15 / 7 + 5 + 5, abs=1e-12)
    assert res.rhs_shape == pytest.approx(5 + 3 * math.log(3))
    assert res.ratio == pytest.approx((15 / 7 + 10) / (5 + 3 * math.log(3)))

    res = var_sum_lemma_pair(Fraction(0), Fraction(1, 2), 3.0, 1)
    assert (res.lhs, res.rhs_shape) == (2.0, 2.0)

    res = var_sum_lemma_pair(Fraction(0), Fraction(0), 7.0, 1)
    assert (res.lhs, res.rhs_shape) == (7.0, 7.0)
    assert res.zero_hits == 1


# frozen at build time from the shipped grids; the LHS is deterministic so
# these are exact regression values
SUM_LEMMA_BASELINE = 1.4186513563284768
VAR_SUM_LEMMA_BASELINE = 1.5847207494900097


def test_shipped_grids_certified_and_bounded():
    sum_results = bounds.run_sum_lemma_grid()
    assert all(r.cert_ok for r in sum_results)
    assert max(r.ratio for r in sum_results) == SUM_LEMMA_BASELINE
    assert all(r.ratio <= SUM_LEMMA_BASELINE for r in sum_results)
    assert SUM_LEMMA_BASELINE <= 8.0

    var_results = bounds.run_var_sum_lemma_grid()
    assert all(r.cert_ok for r in var_results)
    assert max(r.ratio for r in var_results) == VAR_SUM_LEMMA_BASELINE
    assert all(r.ratio <= VAR_SUM_LEMMA_BASELINE for r in var_results)
    assert VAR_SUM_LEMMA_BASELINE <= 8.0


# ---------------------------------------------------------------------------
# arcs
# ---------------------------------------------------------------------------

def test_major_arc_fixtures():
    d = major_arc_classify(Fraction(1, 2) + Fraction(1, 10 ** 9), 3, 10, 10 ** 4)
    assert d.is_major and (d.witness.u, d.witness.q) == (1, 2)
    assert d.witness.error == Fraction(1, 10 ** 9)

    d = major_arc_classify(Fraction(55, 144), 3, 10, 10 ** 4)
    assert not d.is_major and d.q_max == 100

    d = major_arc_classify(Fraction(0), 3, 10, 10 ** 4)
    assert d.is_major and (d.witness.u, d.witness.q) == (0, 1)
    assert d.witness.error == 0


def test_major_arc_reduces_mod_one():
    d = major_arc_classify(Fraction(5, 2) + Fraction(1, 10 ** 9), 3, 10, 10 ** 4)
    assert d.is_major and d.witness.q == 2


# ---------------------------------------------------------------------------
# smooth shapes
# ---------------------------------------------------------------------------

def test_smooth_standard_value():
    bv = rhs_smooth(N=10 ** 4, T=10 ** 6, z=1, A=2.0, lam=1e-8, k=3,
                    theorem="smooth_standard")
    P = 1 * 2.0 * 1e-8 * 1e6
    mu = 1 + 2.0 * 1e-8 * 1e4
    expected = [1e4 * 1e6 * P ** (1 / 6), 1e6 * P ** (-1 / 3),
                2.0 * mu * 1e6 * P ** (-2 / 3)]
    assert [t for _, t in bv.bracket_terms] == pytest.approx(expected, rel=1e-12)
    assert rel_close(bv.value, sum(expected))
    assert bv.applicable
    assert bv.value < 1e4 * 1e6  # nontrivial against N*T
    assert "threshold_tt1" in bv.extras


def test_smooth_improved_terms_and_thresholds():
    N, T, z, A, lam, k = 10 ** 4, 10 ** 6, 1, 2.0, 1e-8, 4
    bv = rhs_smooth(N, T, z, A, lam, k, "smooth_improved")
    P = z * A * lam * T
    mu = 1 + A * lam * N
    rho = 1 / ((k - 2) * (k - 3) + 2)
    expected = [N * T * P ** (rho / k), T * P ** (-1 / k),
                T * mu * z ** 2 * P ** (2 / k - 2),
                mu * z * P ** (1 / k - 1) / lam]
    assert [t for _, t in bv.bracket_terms] == pytest.approx(expected, rel=1e-12)
    t1 = mu ** (k / (2 * k - 2)) * z ** (1 / (k - 1)) * (A * lam) ** -1 \
        * N ** (k / (2 - 2 * k))
    t2 = mu ** (k / (2 * k - 1)) * z ** (1 / (2 * k - 1)) \
        * A ** ((1 - k) / (2 * k - 1)) * lam ** -1 * N ** (k / (1 - 2 * k))
    assert rel_close(bv.extras["threshold_t1"], t1)
    assert rel_close(bv.extras["threshold_t2"], t2)


def test_smooth_window():
    bv = rhs_smooth(N=10 ** 4, T=1e9, z=1, A=2.0, lam=1e-8, k=3,
                    theorem="smooth_improved")
    assert not bv.applicable and "window" in bv.reason


def test_heath_brown_value():
    bv = rhs_smooth(N=10 ** 4, T=1.0, z=1, A=2.0, lam=1e-8, k=3,
                    theorem="heath_brown")
    expected = 1e4 * ((1e-8) ** (1 / 6) + (1e4) ** (-1 / 6)
                      + (1e4) ** (-1 / 3) * (1e-8) ** (-1 / 9))
    assert rel_close(bv.value, expected)


def test_smooth_validation():
    with pytest.raises(ValueError):
        rhs_smooth(100, 10, 1, 2.0, 1e-3, 2, "smooth_standard")   # k < 3
    with pytest.raises(ValueError):
        rhs_smooth(100, 10, 1, 0.5, 1e-3, 3, "smooth_standard")   # A < 1
    with pytest.raises(ValueError):
        rhs_smooth(100, 10, 1, 2.0, 1e-3, 3, "nope")
