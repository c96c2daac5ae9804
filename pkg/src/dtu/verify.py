"""Self-verification suite: reruns the computable claims behind the classifier
and the threshold bracket, and renders a pass/fail report."""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from . import cf
from .cf import Orientation, PeriodicCF
from .classify import (Classification, KappaBracket, classify, kappa,
                       kappa2_bracket)
from .encode import fraction_str, seq_str
from .golden import GoldenScalar

_SEED = 0x5F3759


@dataclass(frozen=True)
class CheckResult:
    name: str
    expected: str
    observed: str
    passed: bool

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"


@dataclass(frozen=True)
class VerifyReport:
    checks: tuple[CheckResult, ...]
    bracket: Optional[KappaBracket]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)


def _random_word(rng: random.Random, pairs: int, lo: int, hi: int) -> tuple[int, ...]:
    return tuple(rng.randint(lo, hi) for _ in range(2 * pairs))


def random_low_sum_word(rng: random.Random, max_pairs: int = 6) -> tuple[int, ...]:
    """A random even period with per-pair weighted sum strictly below 4.

    Built constructively: all ones, then a random sub-budget of n/2 - 1 extra
    units spent on positions (weight-1 bumps cost 1, weight-2 bumps cost 2),
    which keeps the weighted sum below 2n.
    """
    pairs = rng.randint(1, max_pairs)
    n = 2 * pairs
    word = [1] * n
    budget = rng.randint(0, n // 2 - 1) if n >= 4 else 0
    while budget > 0:
        pos = rng.randrange(n)
        cost = 2 if pos % 2 == 1 else 1  # 0-based: odd index is weight-2
        if cost <= budget:
            word[pos] += 1
            budget -= cost
        elif budget == 1:
            word[rng.randrange(pairs) * 2] += 1
            budget = 0
    return tuple(word)


def verify_suite(eps: Fraction = Fraction(1, 500),
                 family_m: int = 400,
                 family_alpha: Fraction = Fraction(11, 20),
                 inject_fault: Optional[str] = None) -> VerifyReport:
    """Run every verification check and collect one row per check.

    `inject_fault` flips the outcome of the named check; it exists so the
    report/exit-code plumbing can be exercised end to end.
    """
    checks: list[CheckResult] = []

    def record(name: str, expected: str, observed: str, passed: bool):
        if inject_fault == name:
            passed = not passed
            observed += " [injected fault]"
        checks.append(CheckResult(name, expected, observed, passed))

    # 1. the four pinned single-period verdicts
    pinned = [((7, 4), Classification.DERIV_ZERO),
              ((7, 3), Classification.DERIV_INFINITY),
              ((1, 2), Classification.DERIV_INFINITY),
              ((1, 3), Classification.DERIV_ZERO)]
    for period, expected in pinned:
        got = classify(PeriodicCF((), period))
        record(f"witness-{seq_str(period).replace(',', '-')}",
               expected.value, got.value, got is expected)

    # 2. every even period over {1, 2} up to length 10 -> infinite derivative
    bad = 0
    total = 0
    for length in range(2, 11, 2):
        for word in itertools.product((1, 2), repeat=length):
            total += 1
            if classify(PeriodicCF((), word)) is not Classification.DERIV_INFINITY:
                bad += 1
    record("bounded-by-two-periods", f"all {total} DerivInfinity",
           f"{total - bad}/{total} DerivInfinity", bad == 0)

    # 3. random words with per-pair sum below 4 -> infinite derivative
    rng = random.Random(_SEED)
    words = [random_low_sum_word(rng) for _ in range(200)]
    assert all(kappa(w, Orientation.PHI) < 4 for w in words)
    bad = sum(1 for w in words
              if classify(PeriodicCF((), w)) is not Classification.DERIV_INFINITY)
    record("low-sum-words", "200/200 DerivInfinity",
           f"{200 - bad}/200 DerivInfinity", bad == 0)

    # 4. sparse-tail family member: period 1^(2m-1), alpha*m + 1
    m, alpha = family_m, Fraction(family_alpha)
    if (alpha * m).denominator != 1:
        raise ValueError("family parameters need alpha*m integral")
    eps_cond = alpha - Fraction(1, 2)
    cond_ok = eps_cond > 0 and GoldenScalar.phi_power(int(m * eps_cond)) >= 3 * m
    word = (1,) * (2 * m - 1) + (int(alpha * m) + 1,)
    got = classify(PeriodicCF((), word))
    kap = kappa(word, Orientation.PHI)
    record("sparse-tail-family",
           f"DerivZero at kappa {fraction_str(3 + 2 * alpha)} (side conditions hold)",
           f"{got.value} at kappa {fraction_str(kap)}"
           f" (side conditions {'hold' if cond_ok else 'violated'})",
           got is Classification.DERIV_ZERO and kap == 3 + 2 * alpha and cond_ok)

    # 5. orientation duality on random even periods
    rng2 = random.Random(_SEED + 1)
    dual_bad = 0
    for _ in range(100):
        word = _random_word(rng2, rng2.randint(1, 5), 1, 9)
        tau_side = classify(PeriodicCF((), word), Orientation.TAU)
        phi_side = classify(PeriodicCF((), cf.reverse(word)), Orientation.PHI)
        if tau_side is not phi_side:
            dual_bad += 1
    record("orientation-duality", "100/100 agree",
           f"{100 - dual_bad}/100 agree", dual_bad == 0)

    # 6. the threshold bracket
    bracket = kappa2_bracket(eps)
    lo_cls = classify(bracket.witness_lo)
    hi_cls = classify(bracket.witness_hi)
    structural = (bracket.hi - bracket.lo <= 2 * eps
                  and lo_cls is Classification.DERIV_INFINITY
                  and hi_cls is Classification.DERIV_ZERO)
    lo_s = cf.weighted_sum(bracket.witness_lo.period, Orientation.PHI)
    hi_s = cf.weighted_sum(bracket.witness_hi.period, Orientation.PHI)
    lo_pairs = len(bracket.witness_lo.period) // 2
    hi_pairs = len(bracket.witness_hi.period) // 2
    record("threshold-bracket",
           f"enclosure width <= {fraction_str(2 * eps)},"
           f" witnesses DerivInfinity/DerivZero",
           f"[{lo_s}/{lo_pairs}, {hi_s}/{hi_pairs}] width"
           f" {fraction_str(bracket.hi - bracket.lo)},"
           f" witnesses {lo_cls.value}/{hi_cls.value}",
           structural)

    return VerifyReport(tuple(checks), bracket)


def report_markdown(report: VerifyReport) -> str:
    lines = ["# Verification report", "",
             "| check | expected | observed | status |",
             "|---|---|---|---|"]
    for c in report.checks:
        lines.append(f"| {c.name} | {c.expected} | {c.observed} | {c.status} |")
    lines.append("")
    if report.bracket is not None:
        b = report.bracket
        lo_s = cf.weighted_sum(b.witness_lo.period, Orientation.PHI)
        hi_s = cf.weighted_sum(b.witness_hi.period, Orientation.PHI)
        lines += [
            "## Threshold enclosure",
            "",
            f"- lower endpoint: {lo_s}/{len(b.witness_lo.period) // 2}"
            f" = {fraction_str(b.lo)} (witness period `{seq_str(b.witness_lo.period)}`,"
            f" derivative +infinity)",
            f"- upper endpoint: {hi_s}/{len(b.witness_hi.period) // 2}"
            f" = {fraction_str(b.hi)} (witness period `{seq_str(b.witness_hi.period)}`,"
            f" derivative 0)",
            f"- bisection steps: {len(b.trace)}",
            "",
        ]
    lines.append(f"Overall: {'PASS' if report.passed else 'FAIL'}")
    lines.append("")
    return "\n".join(lines)


def report_json(report: VerifyReport) -> str:
    payload = {
        "checks": [{"name": c.name, "expected": c.expected,
                    "observed": c.observed, "status": c.status}
                   for c in report.checks],
        "passed": report.passed,
    }
    if report.bracket is not None:
        b = report.bracket
        payload["kappa2"] = {
            "lo": fraction_str(b.lo),
            "hi": fraction_str(b.hi),
            "witness_lo": seq_str(b.witness_lo.period),
            "witness_hi": seq_str(b.witness_hi.period),
            "steps": len(b.trace),
        }
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def trace_json(bracket: KappaBracket) -> str:
    rows = [{"step": s.step,
             "density": fraction_str(s.density),
             "period_length": s.period_length,
             "kappa": fraction_str(s.kappa),
             "classification": s.classification.value}
            for s in bracket.trace]
    return json.dumps(rows, sort_keys=True, indent=2) + "\n"
