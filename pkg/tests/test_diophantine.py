"""Exact Diophantine primitives: distances, convergents, Dirichlet approximation."""

import random
from fractions import Fraction

import pytest

from weylmoments.diophantine import (RationalApprox, as_rational, convergents,
                                     dirichlet_approx, dist_to_nearest_int)


def random_rational(rng, max_num=1000, max_den=400):
    return Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))


@pytest.mark.parametrize("alpha, expected", [
    (Fraction(7, 3), Fraction(1, 3)),
    (Fraction(1, 2), Fraction(1, 2)),
    (Fraction(-5, 4), Fraction(1, 4)),
    (Fraction(0), Fraction(0)),
    (Fraction(17), Fraction(0)),
])
def test_dist_fixtures(alpha, expected):
    assert dist_to_nearest_int(alpha) == expected


def test_dist_invariants():
    rng = random.Random(101)
    for _ in range(300):
        alpha = random_rational(rng)
        d = dist_to_nearest_int(alpha)
        assert 0 <= d <= Fraction(1, 2)
        assert dist_to_nearest_int(-alpha) == d
        assert dist_to_nearest_int(alpha + rng.randint(-5, 5)) == d


@pytest.mark.parametrize("alpha, expected", [
    (Fraction(7, 3), [(2, 1), (7, 3)]),
    (Fraction(13, 40), [(0, 1), (1, 3), (13, 40)]),
    (Fraction(1, 2), [(0, 1), (1, 2)]),
])
def test_convergents_fixtures(alpha, expected):
    assert [(c.u, c.q) for c in convergents(alpha)] == expected


def test_convergents_structure():
    rng = random.Random(102)
    for _ in range(200):
        alpha = random_rational(rng)
        convs = convergents(alpha)
        assert convs[-1].value == alpha and convs[-1].error == 0
        qs = [c.q for c in convs]
        assert all(qs[i] < qs[i + 1] for i in range(1, len(qs) - 1))
        # quality of consecutive convergents
        for cur, nxt in zip(convs, convs[1:]):
            assert cur.error <= Fraction(1, cur.q * nxt.q)


@pytest.mark.parametrize("alpha, Q, expected_uq, expected_err", [
    (Fraction(13, 40), 6, (1, 3), Fraction(1, 120)),
    (Fraction(1, 2), 10, (1, 2), Fraction(0)),
    (Fraction(0), 5, (0, 1), Fraction(0)),
])
def test_dirichlet_fixtures(alpha, Q, expected_uq, expected_err):
    approx = dirichlet_approx(alpha, Q)
    assert (approx.u, approx.q) == expected_uq
    assert approx.error == expected_err


def test_dirichlet_certificate_and_minimality():
    rng = random.Random(103)
    for _ in range(150):
        alpha = random_rational(rng, max_num=500, max_den=300)
        Q = rng.randint(1, 60)
        approx = dirichlet_approx(alpha, Q)
        assert 1 <= approx.q <= Q
        # re-verify the certificate independently, in exact arithmetic
        assert abs(alpha - Fraction(approx.u, approx.q)) <= Fraction(1, approx.q * (Q + 1))
        # no smaller denominator certifies (brute force over both round directions)
        for q in range(1, approx.q):
            for u in (int(alpha * q), int(alpha * q) + 1, int(alpha * q) - 1):
                assert abs(alpha - Fraction(u, q)) > Fraction(1, q * (Q + 1))


def test_certification_predicates():
    approx = RationalApprox.of(Fraction(13, 40), 1, 3)
    assert approx.within_q_squared()       # 1/120 < 1/9
    assert approx.within_qT(30)            # 1/120 < 1/90
    assert not approx.within_qT(50)        # 1/120 > 1/150
    assert approx.within_dirichlet(6)


def test_rational_approx_validation():
    with pytest.raises(ValueError):
        RationalApprox(2, 4, Fraction(0))   # not reduced
    with pytest.raises(ValueError):
        RationalApprox(1, 0, Fraction(0))   # bad denominator


def test_as_rational_parsing():
    assert as_rational("13/40") == Fraction(13, 40)
    assert as_rational("0.325") == Fraction(13, 40)
    assert as_rational(7) == Fraction(7)
    with pytest.raises(TypeError):
        as_rational(object())
