"""Evaluation of g_lambda: mediant recursion, closed series, ?-function,
certified intervals, Farey sampling."""

import random
from fractions import Fraction
from math import gcd

import pytest

from dtu import cf
from dtu.cf import CFConvention, PeriodicCF
from dtu.geval import (CertifiedInterval, LambdaKind, g_finite_series,
                       g_interval, g_mediant, question_mark, sample_farey)
from dtu.golden import GoldenScalar


def farey_fractions(order):
    out = []
    for den in range(1, order + 1):
        for num in range(1, den):
            if gcd(num, den) == 1:
                out.append(Fraction(num, den))
    return sorted(set(out))


def test_mediant_examples():
    assert g_mediant(LambdaKind.PHI_INV, Fraction(1, 2)) == GoldenScalar(-1, 1)
    assert g_mediant(LambdaKind.HALF, Fraction(1, 3)) == Fraction(1, 4)
    assert g_mediant(LambdaKind.PHI_INV, Fraction(2, 5)) == GoldenScalar(7, -4)
    assert g_mediant(LambdaKind.HALF, Fraction(0)) == Fraction(0)
    assert g_mediant(LambdaKind.HALF, Fraction(1)) == Fraction(1)
    with pytest.raises(ValueError):
        g_mediant(LambdaKind.HALF, Fraction(3, 2))


def test_series_examples():
    assert g_finite_series(LambdaKind.PHI_INV, (2,)) == GoldenScalar(-1, 1)
    assert g_finite_series(LambdaKind.PHI_INV, (2, 2)) == GoldenScalar(7, -4)
    assert g_finite_series(LambdaKind.TAU, (2,)) == GoldenScalar(2, -1)
    with pytest.raises(ValueError):
        g_finite_series(LambdaKind.TAU, ())


def test_series_equals_mediant_on_farey_order_24_with_random_weights():
    rng = random.Random(23)
    weights = [LambdaKind.HALF, LambdaKind.PHI_INV, LambdaKind.TAU]
    weights += [Fraction(rng.randint(1, 9), rng.randint(10, 19))
                for _ in range(5)]
    for lam in weights:
        for x in farey_fractions(24):
            assert g_finite_series(lam, cf.cf_of(x)) == g_mediant(lam, x), (lam, x)


def test_series_convention_insensitive():
    rng = random.Random(29)
    for _ in range(200):
        den = rng.randint(3, 200)
        num = rng.randint(1, den - 1)
        x = Fraction(num, den)
        a = cf.cf_of(x, CFConvention.LAST_AT_LEAST_TWO)
        b = cf.cf_of(x, CFConvention.LAST_IS_ONE)
        for lam in (LambdaKind.PHI_INV, LambdaKind.TAU, LambdaKind.HALF):
            assert g_finite_series(lam, a) == g_finite_series(lam, b)


def test_question_mark():
    assert question_mark(Fraction(1, 3)) == Fraction(1, 4)
    assert question_mark(Fraction(1, 2)) == Fraction(1, 2)
    assert question_mark(Fraction(2, 5)) == Fraction(3, 8)
    for x in farey_fractions(20):
        q = question_mark(x)
        assert q == g_mediant(LambdaKind.HALF, x)
        # dyadic denominator
        assert q.denominator & (q.denominator - 1) == 0


def test_reflection_identity_exact():
    for x in farey_fractions(20) + [Fraction(0), Fraction(1)]:
        lhs = g_mediant(LambdaKind.PHI_INV, x) + g_mediant(LambdaKind.TAU, 1 - x)
        assert lhs == GoldenScalar(1)


def test_interval_enclosure_and_width():
    tol = Fraction(1, 10 ** 6)
    iv = g_interval(LambdaKind.PHI_INV, PeriodicCF((), (1,)), tol)
    assert isinstance(iv, CertifiedInterval)
    assert iv.width <= tol
    # the value is squeezed by evaluations at deep convergents
    lo_approx = g_mediant(LambdaKind.PHI_INV, cf.value_of((1,) * 26))
    hi_approx = g_mediant(LambdaKind.PHI_INV, cf.value_of((1,) * 25))
    assert lo_approx < hi_approx
    assert iv.hi >= lo_approx - tol and iv.lo <= hi_approx + tol


def test_interval_partial_sum_form():
    tol = Fraction(1, 1000)
    iv = g_interval(LambdaKind.PHI_INV, PeriodicCF((), (2,)), tol)
    assert iv.width <= tol
    # partial sums of phi^(1 - S_i) for the all-twos word bracket the value
    partial = GoldenScalar(0)
    weighted = 0
    sign = 1
    for i in range(1, 40):
        weighted += 2 * (2 if i % 2 == 0 else 1)
        partial = partial + GoldenScalar.phi_power(1 - weighted) * sign
        sign = -sign
    plo, phi_ = partial.bounds(256)
    assert iv.lo - tol <= plo <= iv.hi + tol


def test_interval_reflection_cross_check():
    tol = Fraction(1, 10 ** 6)
    a = g_interval(LambdaKind.TAU, PeriodicCF((2,), (1,)), tol)
    b = g_interval(LambdaKind.PHI_INV, PeriodicCF((), (1,)), tol)
    # x = [0; overline 1] and 1 - x = [0; 2, overline 1]: values sum to 1
    total_lo = a.lo + b.lo
    total_hi = a.hi + b.hi
    assert total_lo <= 1 <= total_hi


def test_interval_validation():
    with pytest.raises(ValueError):
        g_interval(LambdaKind.HALF, PeriodicCF((), (1,)), Fraction(1, 10))
    with pytest.raises(ValueError):
        g_interval(LambdaKind.TAU, PeriodicCF((), (1,)), Fraction(0))


@pytest.mark.parametrize("lam", [LambdaKind.HALF, LambdaKind.PHI_INV,
                                 LambdaKind.TAU, Fraction(2, 7)])
def test_sample_farey_complete_sorted_monotone(lam):
    depth = 12
    table = sample_farey(lam, depth)
    xs = [x for x, _ in table]
    assert xs == farey_fractions(depth) == sorted(xs) or \
        xs == [Fraction(0)] + farey_fractions(depth) + [Fraction(1)]
    values = [g for _, g in table]
    assert all(values[i] < values[i + 1] for i in range(len(values) - 1))
    assert values[0] == 0 if not isinstance(values[0], GoldenScalar) else values[0] == GoldenScalar(0)


def test_sample_farey_examples_and_cap():
    table = dict(sample_farey(LambdaKind.HALF, 2))
    assert table == {Fraction(0): Fraction(0), Fraction(1, 2): Fraction(1, 2),
                     Fraction(1): Fraction(1)}
    table3 = dict(sample_farey(LambdaKind.PHI_INV, 3))
    assert table3[Fraction(1, 3)] == GoldenScalar(2, -1)
    assert table3[Fraction(1, 2)] == GoldenScalar(-1, 1)
    assert table3[Fraction(2, 3)] == GoldenScalar(-4, 3)
    tau_table = dict(sample_farey(LambdaKind.TAU, 3))
    for x, g in tau_table.items():
        assert g == GoldenScalar(1) - table3[1 - x]
    with pytest.raises(ValueError):
        sample_farey(LambdaKind.HALF, 10, depth_cap=5)
