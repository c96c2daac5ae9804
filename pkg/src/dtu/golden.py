"""Exact arithmetic in the golden field Q(phi), phi = (1+sqrt5)/2, phi^2 = phi + 1."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Union

RationalLike = Union[int, Fraction]


class GoldenScalar:
    """An exact element a + b*phi of Q(sqrt5), with a, b rational.

    The representation is unique; comparisons follow the real embedding
    phi = (1+sqrt5)/2 and are decided by exact rational arithmetic.
    """

    __slots__ = ("a", "b")

    def __init__(self, a: RationalLike, b: RationalLike = 0):
        object.__setattr__(self, "a", Fraction(a))
        object.__setattr__(self, "b", Fraction(b))

    def __setattr__(self, name, value):
        raise AttributeError("GoldenScalar is immutable")

    # -- construction -----------------------------------------------------

    @classmethod
    def phi_power(cls, k: int) -> "GoldenScalar":
        """phi**k for any integer k.

        Nonnegative powers use phi^2 = phi + 1 ascending; negative powers
        use the descending recurrence phi^-(k+1) = phi^-(k-1) - phi^-k.
        """
        if k >= 0:
            a, b = 1, 0  # phi^0
            for _ in range(k):
                a, b = b, a + b  # multiply by phi
            return cls(a, b)
        # descending from phi^0 = 1, phi^-1 = -1 + phi
        pa, pb = 1, 0
        ca, cb = -1, 1
        for _ in range(-k - 1):
            pa, pb, ca, cb = ca, cb, pa - ca, pb - cb
        return cls(ca, cb)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other) -> "GoldenScalar":
        if isinstance(other, GoldenScalar):
            return other
        if isinstance(other, (int, Fraction)):
            return GoldenScalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenScalar(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return GoldenScalar(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a + b phi)(c + d phi) = ac + bd + (ad + bc + bd) phi
        a, b, c, d = self.a, self.b, other.a, other.b
        return GoldenScalar(a * c + b * d, a * d + b * c + b * d)

    __rmul__ = __mul__

    def __neg__(self):
        return GoldenScalar(-self.a, -self.b)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers")
        result = GoldenScalar(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    # -- exact ordering ----------------------------------------------------

    def sign(self) -> int:
        """Exact sign of the real value a + b*phi."""
        # a + b(1+sqrt5)/2 = u + v*sqrt5 with u = a + b/2, v = b/2
        u = self.a + self.b / 2
        v = self.b / 2
        if v == 0:
            return (u > 0) - (u < 0)
        if u == 0:
            return 1 if v > 0 else -1
        if u > 0 and v > 0:
            return 1
        if u < 0 and v < 0:
            return -1
        # opposite signs: compare u^2 against 5 v^2
        lhs, rhs = u * u, 5 * v * v
        if lhs == rhs:
            return 0
        if u > 0:  # v < 0
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    def _cmp(self, other) -> int:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return (self - other).sign()

    def __eq__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c == 0

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __hash__(self):
        return hash((self.a, self.b))

    # -- numeric views -----------------------------------------------------

    def is_rational(self) -> bool:
        return self.b == 0

    def as_fraction(self) -> Fraction:
        if self.b != 0:
            raise ValueError("value is irrational")
        return self.a

    def bounds(self, bits: int = 64) -> tuple[Fraction, Fraction]:
        """A rational enclosure [lo, hi] of the real value, width <= 2^-bits+2.

        The working precision adapts to the coefficient magnitude, so the
        width bound holds even for huge Fibonacci-sized components.
        """
        v = self.b / 2
        base = self.a + v
        if v == 0:
            return base, base
        # width = |v| * 2^-k: pad k by the magnitude of v
        k = bits + max(0, abs(v.numerator).bit_length()
                       - v.denominator.bit_length()) + 2
        s = isqrt(5 << (2 * k))
        lo5 = Fraction(s, 1 << k)
        hi5 = Fraction(s + 1, 1 << k)
        if v > 0:
            return base + v * lo5, base + v * hi5
        return base + v * hi5, base + v * lo5

    def __float__(self):
        lo, hi = self.bounds(96)
        return float((lo + hi) / 2)

    def __repr__(self):
        return f"GoldenScalar({self.a!r}, {self.b!r})"

    def __str__(self):
        from .encode import golden_str

        return golden_str(self)


PHI = GoldenScalar(0, 1)
GOLDEN_ONE = GoldenScalar(1)
GOLDEN_ZERO = GoldenScalar(0)
