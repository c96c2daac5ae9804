"""Evaluation of the Denjoy-Tichy-Uitz functions g_lambda.

g_lambda is defined on the Stern-Brocot/Farey tree by g(0)=0, g(1)=1 and
g(mediant(l, r)) = (1-lambda) g(l) + lambda g(r); equivalently, at
x = [0; a1, a2, ...] it is the alternating series whose i-th term is
lambda^(a1+a3+...-1) * (1-lambda)^(a2+a4+...) truncated at index i.

lambda = 1/2 gives the Minkowski question-mark function; lambda = 1/phi and
lambda = 1/phi^2 take exact values in the golden field.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from . import cf
from .cf import CFConvention, Orientation, PeriodicCF
from .golden import GOLDEN_ONE, GOLDEN_ZERO, GoldenScalar

DEFAULT_FAREY_DEPTH_CAP = 512

ExactScalar = Union[Fraction, GoldenScalar]


class LambdaKind(enum.Enum):
    """Named weights; rational weights are passed as Fraction values."""

    HALF = "half"
    PHI_INV = "phi-inv"
    TAU = "tau"


Lambda = Union[LambdaKind, Fraction]


def _field(lam: Lambda):
    """(lambda, 1-lambda, zero, one) in the exact field matching the weight."""
    if lam is LambdaKind.PHI_INV:
        return GoldenScalar(-1, 1), GoldenScalar(2, -1), GOLDEN_ZERO, GOLDEN_ONE
    if lam is LambdaKind.TAU:
        return GoldenScalar(2, -1), GoldenScalar(-1, 1), GOLDEN_ZERO, GOLDEN_ONE
    if lam is LambdaKind.HALF:
        half = Fraction(1, 2)
        return half, half, Fraction(0), Fraction(1)
    value = Fraction(lam)
    if not 0 < value < 1:
        raise ValueError(f"rational weight must lie in (0, 1), got {value}")
    return value, 1 - value, Fraction(0), Fraction(1)


def g_mediant(lam: Lambda, x: Fraction) -> ExactScalar:
    """Evaluate g_lambda at a rational x by descending the Stern-Brocot tree."""
    lam_v, com_v, zero, one = _field(lam)
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0:
        return zero
    if x == 1:
        return one
    lo_n, lo_d, g_lo = 0, 1, zero
    hi_n, hi_d, g_hi = 1, 1, one
    while True:
        med_n, med_d = lo_n + hi_n, lo_d + hi_d
        g_med = com_v * g_lo + lam_v * g_hi
        med = Fraction(med_n, med_d)
        if x == med:
            return g_med
        if x < med:
            hi_n, hi_d, g_hi = med_n, med_d, g_med
        else:
            lo_n, lo_d, g_lo = med_n, med_d, g_med


def g_finite_series(lam: Lambda, seq) -> ExactScalar:
    """Evaluate g_lambda([0; a1..an]) by the closed alternating sum.

    Non-canonical input (trailing 1) is normalized first; the t-th partial
    term is lambda^(sum of odd-indexed a_i up to t, minus 1) times
    (1-lambda)^(sum of even-indexed a_i up to t).
    """
    seq = cf.canonical(cf.check_quotients(seq, allow_empty=False))
    lam_v, com_v, zero, _ = _field(lam)
    odd_sum = 0
    even_sum = 0
    total = zero
    sign = 1
    for i, a in enumerate(seq, start=1):
        if i % 2 == 1:
            odd_sum += a
        else:
            even_sum += a
        term = lam_v ** (odd_sum - 1) * com_v ** even_sum
        total = total + term if sign > 0 else total - term
        sign = -sign
    return total


def question_mark(x: Fraction) -> Fraction:
    """Minkowski's ?-function: dyadic-valued, equal to g at weight 1/2."""
    x = Fraction(x)
    if not 0 <= x <= 1:
        raise ValueError(f"x must lie in [0, 1], got {x}")
    if x == 0:
        return Fraction(0)
    if x == 1:
        return Fraction(1)
    seq = cf.cf_of(x, CFConvention.LAST_AT_LEAST_TWO)
    total = Fraction(0)
    exponent = 0
    sign = 1
    for a in seq:
        exponent += a
        total += sign * Fraction(1, 2 ** (exponent - 1))
        sign = -sign
    return total


@dataclass(frozen=True)
class CertifiedInterval:
    """A rational enclosure [lo, hi] of an exact real value."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if self.lo > self.hi:
            raise ValueError("interval endpoints out of order")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def contains(self, value) -> bool:
        return value >= self.lo and value <= self.hi

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2


def _golden_enclosure(value: GoldenScalar, slack: Fraction) -> tuple[Fraction, Fraction]:
    bits = 64
    while True:
        lo, hi = value.bounds(bits)
        if hi - lo <= slack:
            return lo, hi
        bits *= 2


def g_interval(lam: LambdaKind, x: PeriodicCF, tol: Fraction) -> CertifiedInterval:
    """Certified enclosure of g at a quadratic irrational, width <= tol.

    The alternating series in powers of 1/phi is truncated once the next
    term drops below tol/2 (terms strictly decrease because the weighted
    quotient sums strictly increase); the tail is bounded by the first
    omitted term, and the golden-field partial sums are rationalized with
    the remaining tolerance budget.
    """
    if lam not in (LambdaKind.PHI_INV, LambdaKind.TAU):
        raise ValueError("certified interval evaluation needs a golden weight")
    tol = Fraction(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")
    orientation = Orientation.PHI if lam is LambdaKind.PHI_INV else Orientation.TAU
    offset = 1 if lam is LambdaKind.PHI_INV else 2
    threshold = tol / 2
    partial = GOLDEN_ZERO
    weighted = 0
    sign = 1
    lo_sum = hi_sum = partial
    for i, a in enumerate(x.quotients(), start=1):
        weighted += a * orientation.weight(i)
        term = GoldenScalar.phi_power(offset - weighted)
        nxt = partial + term if sign > 0 else partial - term
        lo_sum, hi_sum = (partial, nxt) if sign > 0 else (nxt, partial)
        partial = nxt
        sign = -sign
        if term < threshold:
            break
    slack = tol / 8
    lo, _ = _golden_enclosure(lo_sum, slack)
    _, hi = _golden_enclosure(hi_sum, slack)
    return CertifiedInterval(lo, hi)


def sample_farey(lam: Lambda, depth: int,
                 depth_cap: int = DEFAULT_FAREY_DEPTH_CAP) -> list[tuple[Fraction, ExactScalar]]:
    """All Farey fractions of order <= depth with exact g values, sorted by x.

    Values are propagated down the tree (each mediant's value from its two
    parents), so the table is a single in-order traversal.
    """
    if depth < 1:
        raise ValueError("depth must be >= 1")
    if depth > depth_cap:
        raise ValueError(f"depth {depth} exceeds cap {depth_cap}")
    lam_v, com_v, zero, one = _field(lam)
    out: list[tuple[Fraction, ExactScalar]] = [(Fraction(0), zero)]
    # iterative in-order traversal of the mediant tree restricted to
    # denominators <= depth; state 0 visits the left subtree first
    stack = [(0, 1, zero, 1, 1, one, 0)]
    while stack:
        ln, ld, gl, rn, rd, gr, state = stack.pop()
        md = ld + rd
        if md > depth:
            continue
        mn = ln + rn
        gm = com_v * gl + lam_v * gr
        if state == 0:
            stack.append((ln, ld, gl, rn, rd, gr, 1))
            stack.append((ln, ld, gl, mn, md, gm, 0))
        else:
            out.append((Fraction(mn, md), gm))
            stack.append((mn, md, gm, rn, rd, gr, 0))
    out.append((Fraction(1), one))
    return out
