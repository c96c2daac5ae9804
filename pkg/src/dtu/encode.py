"""Textual encodings shared by the CLI and reports.

Formats: Fraction "p/q" (plain "p" when integral), GoldenScalar "a+b*phi"
with rational a, b, QuadraticSurd "(p+q*sqrt(d))/r", quotient sequences
"a1,a2,...".  Every emitted value re-parses to an equal value.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction

from .golden import GoldenScalar
from .surd import QuadraticSurd

_FRACTION_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")
_GOLDEN_RE = re.compile(
    r"^(?P<a>[+-]?\d+(?:/\d+)?)?"
    r"(?:(?P<sign>[+-])?(?P<b>\d+(?:/\d+)?)\*phi)?$"
)
_SURD_RE = re.compile(
    r"^\((?P<p>[+-]?\d+)(?P<sign>[+-])(?P<q>\d+)\*sqrt\((?P<d>\d+)\)\)/(?P<r>\d+)$"
)


def fraction_str(x: Fraction) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(text: str) -> Fraction:
    m = _FRACTION_RE.match(text.strip())
    if not m:
        raise ValueError(f"malformed fraction: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) else 1
    if den == 0:
        raise ValueError(f"zero denominator: {text!r}")
    return Fraction(num, den)


def golden_str(g: GoldenScalar) -> str:
    if g.b == 0:
        return fraction_str(g.a)
    sign = "+" if g.b > 0 else "-"
    mag = fraction_str(abs(g.b))
    return f"{fraction_str(g.a)}{sign}{mag}*phi"


def parse_golden(text: str) -> GoldenScalar:
    text = text.strip().replace(" ", "")
    if "phi" not in text:
        return GoldenScalar(parse_fraction(text))
    m = _GOLDEN_RE.match(text)
    if not m or m.group("b") is None:
        raise ValueError(f"malformed golden scalar: {text!r}")
    a = parse_fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = parse_fraction(m.group("b"))
    if m.group("sign") == "-":
        b = -b
    return GoldenScalar(a, b)


def surd_str(s: QuadraticSurd) -> str:
    if s.q == 0:
        return fraction_str(Fraction(s.p, s.r))
    sign = "+" if s.q > 0 else "-"
    return f"({s.p}{sign}{abs(s.q)}*sqrt({s.d}))/{s.r}"


def parse_surd(text: str) -> QuadraticSurd:
    text = text.strip().replace(" ", "")
    if "sqrt" not in text:
        x = parse_fraction(text)
        return QuadraticSurd.from_fraction(x)
    m = _SURD_RE.match(text)
    if not m:
        raise ValueError(f"malformed quadratic surd: {text!r}")
    q = int(m.group("q"))
    if m.group("sign") == "-":
        q = -q
    return QuadraticSurd(int(m.group("p")), q, int(m.group("r")), int(m.group("d")))


def seq_str(seq) -> str:
    return ",".join(str(a) for a in seq)


def parse_seq(text: str) -> tuple[int, ...]:
    parts = [p for p in text.strip().split(",") if p != ""]
    try:
        seq = tuple(int(p) for p in parts)
    except ValueError as exc:
        raise ValueError(f"malformed quotient sequence: {text!r}") from exc
    if any(a < 1 for a in seq):
        raise ValueError(f"partial quotients must be >= 1: {text!r}")
    return seq


def exact_str(value) -> str:
    """Canonical textual encoding of any exact value this package produces."""
    if isinstance(value, GoldenScalar):
        return golden_str(value)
    if isinstance(value, QuadraticSurd):
        return surd_str(value)
    return fraction_str(Fraction(value))


def decimal_str(value, digits: int = 30) -> str:
    """Approximate decimal rendering with exactly `digits` significant digits.

    The value is enclosed to well below one unit of the last digit before
    rounding, so the printed digits are stable and deterministic.
    """
    if isinstance(value, (GoldenScalar, QuadraticSurd)):
        bits = 4 * (digits + 20)
        lo, hi = value.bounds(bits)
        approx = (lo + hi) / 2
    else:
        approx = Fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits + 5
        dec = Decimal(approx.numerator) / Decimal(approx.denominator)
        if dec == 0:
            return "0." + "0" * (digits - 1)
        quantum = Decimal(1).scaleb(dec.adjusted() - digits + 1)
        return str(dec.quantize(quantum))
