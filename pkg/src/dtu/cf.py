"""Continued fractions and continuants over exact integer arithmetic.

Quotient sequences are plain tuples of positive integers a_1..a_n, read as
the regular continued fraction [0; a_1, a_2, ...].  The continuant <A> is
the denominator of that fraction: <> = 1, <a1> = a1, and
<a1..an> = an * <a1..a_{n-1}> + <a1..a_{n-2}>.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .surd import QuadraticSurd

Quotients = tuple[int, ...]


class Orientation(enum.Enum):
    """Weight vector for quotient sums: PHI = (1,2,1,2,...), TAU = (2,1,2,1,...)."""

    PHI = "phi"
    TAU = "tau"

    def weight(self, index: int) -> int:
        """Weight of the 1-based position `index`."""
        if self is Orientation.PHI:
            return 2 if index % 2 == 0 else 1
        return 1 if index % 2 == 0 else 2


class CFConvention(enum.Enum):
    """Normal form of a finite continued fraction: last quotient >= 2, or == 1."""

    LAST_AT_LEAST_TWO = "last>=2"
    LAST_IS_ONE = "last=1"


def check_quotients(seq: Sequence[int], allow_empty: bool = True) -> Quotients:
    """Validate and freeze a quotient sequence; every item must be >= 1."""
    out = tuple(seq)
    if not allow_empty and not out:
        raise ValueError("empty quotient sequence not allowed here")
    for a in out:
        if not isinstance(a, int) or isinstance(a, bool) or a < 1:
            raise ValueError(f"partial quotients must be integers >= 1, got {a!r}")
    return out


def continuant(seq: Sequence[int]) -> int:
    """The continuant <a_1, ..., a_n>; <> = 1."""
    seq = check_quotients(seq)
    value, prev = 1, 0
    for a in seq:
        value, prev = a * value + prev, value
    return value


def quotient_matrix(seq: Sequence[int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """Ordered product of [[a_i, 1], [1, 0]]: [[<A>, <A^->], [<A_->, <A_-^->]].

    <A^-> drops the last element, <A_-> the first, <A_-^-> both; the
    determinant is (-1)^n.
    """
    seq = check_quotients(seq, allow_empty=False)
    m00, m01, m10, m11 = 1, 0, 0, 1
    for a in seq:
        m00, m01 = m00 * a + m01, m00
        m10, m11 = m10 * a + m11, m10
    return (m00, m01), (m10, m11)


def value_of(seq: Sequence[int]) -> Fraction:
    """Exact value of [0; a_1, ..., a_n] = <A_->/<A>, in (0, 1]."""
    (m00, _), (m10, _) = quotient_matrix(seq)
    return Fraction(m10, m00)


def cf_value(seq: Sequence[int]) -> Fraction:
    """Like value_of but 0 for the empty sequence (the convention of empty tails)."""
    return value_of(seq) if seq else Fraction(0)


def cf_of(x: Fraction,
          convention: CFConvention = CFConvention.LAST_AT_LEAST_TWO) -> Quotients:
    """Quotient sequence of a rational x in (0, 1) by Euclid's algorithm."""
    x = Fraction(x)
    if not 0 < x < 1:
        raise ValueError(f"x must lie strictly inside (0, 1), got {x}")
    num, den = x.numerator, x.denominator
    seq = []
    while num:
        a, rem = divmod(den, num)
        seq.append(a)
        den, num = num, rem
    # Euclid always ends with a quotient >= 2 for x in (0, 1)
    if convention is CFConvention.LAST_IS_ONE:
        seq[-1] -= 1
        seq.append(1)
    return tuple(seq)


def canonical(seq: Sequence[int]) -> Quotients:
    """Normalize to the last-quotient >= 2 form: [..., a_n, 1] -> [..., a_n + 1]."""
    seq = check_quotients(seq)
    if len(seq) >= 2 and seq[-1] == 1:
        return seq[:-2] + (seq[-2] + 1,)
    return seq


def reverse(seq: Sequence[int]) -> Quotients:
    """The reversed sequence; continuants are invariant under reversal."""
    return tuple(reversed(check_quotients(seq)))


def weighted_sum(seq: Sequence[int], o: Orientation) -> int:
    """Sum of a_i weighted by the orientation's (1,2,...) or (2,1,...) pattern."""
    seq = check_quotients(seq)
    return sum(a * o.weight(i) for i, a in enumerate(seq, start=1))


def light_positions(n: int, o: Orientation) -> tuple[int, ...]:
    """1-based weight-1 positions of a length-n word."""
    return tuple(i for i in range(1, n + 1) if o.weight(i) == 1)


def heavy_positions(n: int, o: Orientation) -> tuple[int, ...]:
    """1-based weight-2 positions of a length-n word."""
    return tuple(i for i in range(1, n + 1) if o.weight(i) == 2)


@dataclass(frozen=True)
class PeriodicCF:
    """An eventually periodic continued fraction: preperiod then repeated period."""

    preperiod: Quotients
    period: Quotients

    def __post_init__(self):
        object.__setattr__(self, "preperiod", check_quotients(self.preperiod))
        object.__setattr__(self, "period", check_quotients(self.period, allow_empty=False))

    def quotients(self) -> Iterator[int]:
        """The infinite quotient stream."""
        yield from self.preperiod
        while True:
            yield from self.period


def periodic_value(x: PeriodicCF) -> QuadraticSurd:
    """Exact value of the eventually periodic continued fraction, in (0, 1).

    The purely periodic part y solves <A^-> y^2 + (<A> - <A_-^->) y - <A_-> = 0
    (positive root); a preperiod P maps y through the Moebius transform
    (<P_-> + y <P_-^->) / (<P> + y <P^->).
    """
    (m00, m01), (m10, m11) = quotient_matrix(x.period)
    a, b, c = m01, m00 - m11, -m10
    disc = b * b - 4 * a * c
    y = QuadraticSurd(-b, 1, 2 * a, disc)
    if x.preperiod:
        (p00, p01), (p10, p11) = quotient_matrix(x.preperiod)
        y = (QuadraticSurd.from_fraction(Fraction(p10)) + y * p11) / \
            (QuadraticSurd.from_fraction(Fraction(p00)) + y * p01)
    if not (QuadraticSurd.from_fraction(0) < y < QuadraticSurd.from_fraction(1)):
        raise AssertionError("periodic continued fraction value outside (0, 1)")
    return y


def convergents(seq: Sequence[int]) -> list[Fraction]:
    """Successive convergents p_i/q_i of [0; a_1, ..., a_n]."""
    seq = check_quotients(seq)
    out = []
    p_prev, p = 1, 0
    q_prev, q = 0, 1
    for a in seq:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        out.append(Fraction(p, q))
    return out
