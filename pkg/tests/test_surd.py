"""Quadratic surd canonicalization, arithmetic and certified comparison."""

import random
from fractions import Fraction
from math import isqrt

import pytest

from dtu.golden import GoldenScalar
from dtu.surd import QuadraticSurd, compare_values


def test_canonical_forms():
    assert QuadraticSurd(2, 4, 2, 896) == QuadraticSurd(1, 16, 1, 14)
    s = QuadraticSurd(2, 4, 2, 896)
    assert (s.p, s.q, s.r, s.d) == (1, 16, 1, 14)
    # perfect-square radicand folds into the rational part
    t = QuadraticSurd(1, 3, 2, 9)
    assert (t.p, t.q, t.r, t.d) == (5, 0, 1, 1)
    # negative denominator normalizes
    u = QuadraticSurd(1, -1, -2, 5)
    assert (u.p, u.q, u.r, u.d) == (-1, 1, 2, 5)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 0, 5)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 1, 1, -3)


def test_identical_canonical_triples_compare_equal():
    a = QuadraticSurd(2, 1, 1, 3)
    b = QuadraticSurd(4, 2, 2, 3)
    assert (a.p, a.q, a.r, a.d) == (b.p, b.q, b.r, b.d)
    assert a == b


def test_ordering_examples():
    sqrt3m1 = QuadraticSurd(-1, 1, 1, 3)
    golden_conj = QuadraticSurd(-1, 1, 2, 5)  # (sqrt5 - 1)/2
    assert sqrt3m1 > golden_conj
    lam = QuadraticSurd(15, 4, 1, 14)
    assert compare_values(lam * lam, GoldenScalar.phi_power(15)) == -1
    assert compare_values(lam * lam, GoldenScalar.phi_power(14)) == 1


def test_cross_field_equality_via_square_merge():
    # sqrt(8) and 2 sqrt(2) in nominally different radicands
    a = QuadraticSurd(0, 1, 1, 8)
    b = QuadraticSurd(0, 2, 1, 2)
    assert a == b
    assert a.algebraically_equal(b)
    # sqrt(2) vs sqrt(3): never equal, ordering by refinement
    assert QuadraticSurd(0, 1, 1, 2) < QuadraticSurd(0, 1, 1, 3)


def test_arithmetic_in_field():
    s = QuadraticSurd(1, 1, 2, 5)  # (1 + sqrt5)/2 = phi
    assert s * s == s + 1
    inv = QuadraticSurd(1, 0, 1, 1) / s
    assert inv == s - 1
    with pytest.raises(ValueError):
        QuadraticSurd(0, 1, 1, 2) + QuadraticSurd(0, 1, 1, 3)


def test_golden_promotion():
    g = GoldenScalar(Fraction(1, 2), Fraction(-3, 4))
    s = QuadraticSurd.from_golden(g)
    lo, hi = s.bounds(128)
    glo, ghi = g.bounds(128)
    assert max(lo, glo) <= min(hi, ghi)  # the enclosures overlap
    assert compare_values(s, g) == 0


def test_comparison_against_random_decimal_oracle():
    rng = random.Random(99)
    digits = 60
    scale = 10 ** digits
    for _ in range(2000):
        d = rng.choice([2, 3, 5, 7, 11, 13])
        s = QuadraticSurd(rng.randint(-20, 20), rng.randint(-20, 20),
                          rng.randint(1, 20), d)
        t = QuadraticSurd(rng.randint(-20, 20), rng.randint(-20, 20),
                          rng.randint(1, 20), d)
        sq = isqrt(d * scale * scale)
        def approx(x):
            return Fraction(x.p * scale + x.q * sq, x.r * scale)
        diff = approx(s) - approx(t)
        if abs(diff) > Fraction(1, 10 ** 20):  # clear separation
            assert (s > t) == (diff > 0)
        else:
            assert s.algebraically_equal(t) == (s == t)


def test_rational_surds():
    s = QuadraticSurd.from_fraction(Fraction(-3, 7))
    assert s.is_rational() and s.as_fraction() == Fraction(-3, 7)
    assert s < 0 < s + 1
