"""Minimization and maximization of continuants at fixed length and weighted sum.

M(n, S) is the set of quotient sequences of even length n whose weighted sum
(per the chosen orientation) equals S.  The module provides an exhaustive
enumeration oracle, a direct near-minimal construction, window-narrowing
normalization by unit variations, reduction to three-value words by certified
(1,2)-variations, and the balanced-block construction of near-maximal words.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import cf
from .cf import Orientation, Quotients
from .variation import VariationDirection, is_abs_increasing_12

DEFAULT_BRUTE_CAP = 10_000_000
DEFAULT_SUM_CAP = 1_000_000


class InfeasibleError(ValueError):
    """No word of the requested length can reach the requested weighted sum."""


class CapExceededError(RuntimeError):
    """The enumeration space exceeds the configured cap."""


@dataclass(frozen=True)
class ExtremalInstance:
    """Length n (even), target weighted sum S, and orientation."""

    n: int
    s: int
    orientation: Orientation = Orientation.PHI

    def __post_init__(self):
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError("length must be a positive even integer")
        if self.s > DEFAULT_SUM_CAP:
            raise ValueError(f"target sum exceeds cap {DEFAULT_SUM_CAP}")

    @property
    def pairs(self) -> int:
        return self.n // 2

    @property
    def per_pair(self) -> Fraction:
        return Fraction(2 * self.s, self.n)

    @property
    def feasible(self) -> bool:
        return self.s >= 3 * self.n // 2


def _require_feasible(inst: ExtremalInstance):
    if not inst.feasible:
        raise InfeasibleError(
            f"S={inst.s} below the all-ones floor {3 * inst.n // 2} for n={inst.n}")


def count_words(inst: ExtremalInstance) -> int:
    """Number of words in M(n, S), by pairwise convolution."""
    _require_feasible(inst)
    m, s = inst.pairs, inst.s
    # per-pair cost c has max(0, (c-1)//2) realizations for either orientation
    ways = [0] * (s + 1)
    ways[0] = 1
    for _ in range(m):
        nxt = [0] * (s + 1)
        for acc in range(s + 1):
            w = ways[acc]
            if w:
                for c in range(3, s - acc + 1):
                    nxt[acc + c] += w * ((c - 1) // 2)
        ways = nxt
    return ways[s]


@dataclass(frozen=True)
class Extrema:
    min_seq: Quotients
    min_value: int
    max_seq: Quotients
    max_value: int
    count: int


def brute_extrema(inst: ExtremalInstance, cap: int = DEFAULT_BRUTE_CAP) -> Extrema:
    """Exhaustive minimum and maximum continuant over M(n, S).

    Ties break to the lexicographically smallest sequence.  Raises
    CapExceededError when the enumeration space exceeds `cap`; the count is
    established by dynamic programming before any enumeration.  Prefixes are
    enumerated in Python; the final two pairs are evaluated through cached
    vectorized tables (with an exact big-integer fallback when the values
    could leave the int64 range).
    """
    if inst.n > 12:
        raise ValueError("exhaustive search is limited to n <= 12")
    _require_feasible(inst)
    total = count_words(inst)
    if total > cap:
        raise CapExceededError(f"{total} words exceed the cap of {cap}")

    phi = inst.orientation is Orientation.PHI
    m, s = inst.pairs, inst.s
    best: list = [None, None]  # [(min_value, min_seq), (max_value, max_seq)]

    def consider(value: int, seq: Quotients):
        cur_min, cur_max = best
        if cur_min is None or value < cur_min[0] or (value == cur_min[0]
                                                     and seq < cur_min[1]):
            best[0] = (value, seq)
        if cur_max is None or value > cur_max[0] or (value == cur_max[0]
                                                     and seq < cur_max[1]):
            best[1] = (value, seq)

    pair_cache: dict = {}

    def pair_arrays(cost: int):
        """Position-ordered (pos1, pos2) arrays of all pairs of given cost."""
        hit = pair_cache.get(cost)
        if hit is None:
            v = np.arange(1, (cost - 1) // 2 + 1, dtype=np.int64)
            other = np.int64(cost) - 2 * v
            hit = (other, v) if phi else (v, other)
            pair_cache[cost] = hit
        return hit

    table_cache: dict = {}

    def two_pair_table(budget: int):
        """All two-pair words of weighted sum `budget`: position arrays
        P1..P4 plus the first column (X00, X10) of their matrix product."""
        hit = table_cache.get(budget)
        if hit is None:
            parts = []
            for c1 in range(3, budget - 2):
                a1, a2 = pair_arrays(c1)
                b1, b2 = pair_arrays(budget - c1)
                if not len(a1) or not len(b1):
                    continue
                la, lb = len(a1), len(b1)
                A1, A2 = np.repeat(a1, lb), np.repeat(a2, lb)
                B1, B2 = np.tile(b1, la), np.tile(b2, la)
                b00 = B1 * B2 + 1
                x00 = (A1 * A2 + 1) * b00 + A1 * B2
                x10 = A2 * b00 + B2
                parts.append((A1, A2, B1, B2, x00, x10))
            if parts:
                hit = tuple(np.concatenate([p[i] for p in parts])
                            for i in range(6))
            else:
                hit = tuple(np.empty(0, dtype=np.int64) for _ in range(6))
            table_cache[budget] = hit
        return hit

    def pick(quads, values, idx_ties):
        """Lexicographically smallest quadruple among tie indices."""
        p1, p2, p3, p4 = quads
        order = np.lexsort((p4[idx_ties], p3[idx_ties],
                            p2[idx_ties], p1[idx_ties]))
        i = int(idx_ties[order[0]])
        return (int(p1[i]), int(p2[i]), int(p3[i]), int(p4[i])), int(values[i])

    def leaf_two(budget: int, r0: int, r1: int, prefix: tuple):
        p1, p2, p3, p4, x00, x10 = two_pair_table(budget)
        if not len(x00):
            return
        bound = r0 * int(x00.max()) + r1 * int(x10.max())
        if bound < (1 << 62):
            values = np.int64(r0) * x00 + np.int64(r1) * x10
            lo_v = int(values.min())
            hi_v = int(values.max())
            quad_lo, _ = pick((p1, p2, p3, p4), values,
                              np.flatnonzero(values == lo_v))
            quad_hi, _ = pick((p1, p2, p3, p4), values,
                              np.flatnonzero(values == hi_v))
            consider(lo_v, prefix + quad_lo)
            consider(hi_v, prefix + quad_hi)
        else:
            for i in range(len(x00)):
                value = r0 * int(x00[i]) + r1 * int(x10[i])
                consider(value, prefix + (int(p1[i]), int(p2[i]),
                                          int(p3[i]), int(p4[i])))

    def leaf_one(budget: int, r0: int, r1: int, prefix: tuple):
        pos1, pos2 = pair_arrays(budget)
        for i in range(len(pos1)):
            a, b = int(pos1[i]), int(pos2[i])
            consider(r0 * (a * b + 1) + r1 * b, prefix + (a, b))

    last_levels = 2 if m >= 2 else 1
    leaf = leaf_two if m >= 2 else leaf_one

    def rec(level: int, budget: int, r0: int, r1: int, prefix: tuple):
        if level == m - last_levels:
            leaf(budget, r0, r1, prefix)
            return
        rest = 3 * (m - 1 - level)
        # iterate the pair in position order for lexicographic enumeration
        w1, w2 = (1, 2) if phi else (2, 1)
        p1 = 1
        while w1 * p1 + w2 + rest <= budget:
            p2 = 1
            while w1 * p1 + w2 * p2 + rest <= budget:
                n0 = r0 * (p1 * p2 + 1) + r1 * p2
                n1 = r0 * p1 + r1
                rec(level + 1, budget - w1 * p1 - w2 * p2, n0, n1,
                    prefix + (p1, p2))
                p2 += 1
            p1 += 1

    rec(0, s, 1, 0, ())
    (min_v, min_seq), (max_v, max_seq) = best
    return Extrema(min_seq, min_v, max_seq, max_v, total)


# -- direct near-minimum -------------------------------------------------------


def min_construct(inst: ExtremalInstance) -> Quotients:
    """All-ones word with one large quotient at a weight-2 position.

    The surplus S - 3n/2 is packed into a single heavy quotient s (each unit
    of s above 1 costs 2); an odd surplus additionally turns one light
    position into 2.  Among the fixed candidate placements the exact smallest
    continuant is returned (lexicographic tie-break).
    """
    _require_feasible(inst)
    n, o = inst.n, inst.orientation
    delta = inst.s - 3 * n // 2
    heavy = cf.heavy_positions(n, o)
    light = cf.light_positions(n, o)

    def build(s_pos: int, bump_pos: Optional[int]) -> Quotients:
        word = [1] * n
        if bump_pos is not None:
            word[bump_pos - 1] = 2
        word[s_pos - 1] += (delta - (1 if bump_pos is not None else 0)) // 2
        return tuple(word)

    if delta % 2 == 0:
        candidates = [build(heavy[0], None)]
    else:
        candidates = [build(heavy[0], light[0]), build(heavy[0], light[-1])]
    best = min(candidates, key=lambda w: (cf.continuant(w), w))
    assert cf.weighted_sum(best, o) == inst.s
    return best


# -- window narrowing by unit variations ----------------------------------------


def normalize_m4(seq: Sequence[int], o: Orientation) -> Quotients:
    """Narrow both weight classes to windows {a, a+1} by unit variations.

    Steepest ascent: among all equalizing replacements of a same-class pair
    differing by >= 2, apply the one with the largest resulting continuant
    (preferring any increasing step when one exists); repeats until both
    classes have spread <= 1.  Terminates because every step strictly lowers
    the within-class sum of squares.
    """
    seq = list(cf.check_quotients(seq, allow_empty=False))
    n = len(seq)
    classes = (cf.light_positions(n, o), cf.heavy_positions(n, o))
    while True:
        candidates = []
        for positions in classes:
            for ii in positions:
                for jj in positions:
                    if ii == jj:
                        continue
                    hi, lo = seq[ii - 1], seq[jj - 1]
                    if hi - lo < 2:
                        continue
                    d = (hi - lo) // 2
                    for dd in ((d,) if (hi - lo) % 2 == 0 else (d, d + 1)):
                        out = list(seq)
                        out[ii - 1], out[jj - 1] = hi - dd, lo + dd
                        candidates.append(tuple(out))
        if not candidates:
            return tuple(seq)
        seq = list(max(candidates, key=lambda w: (cf.continuant(w),
                                                  [-x for x in w])))


# -- three-value shapes ---------------------------------------------------------


class M3Case(enum.Enum):
    LOW = "low"
    MID = "mid"
    HIGH = "high"


@dataclass(frozen=True)
class M3Shape:
    """Value windows of a three-value word class with per-pair sums around 4a."""

    a: int
    case: M3Case

    def __post_init__(self):
        if self.a < 2:
            raise ValueError("shape parameter a must be >= 2")

    @property
    def light_values(self) -> tuple[int, ...]:
        a = self.a
        return {M3Case.LOW: (2 * a - 1, 2 * a),
                M3Case.MID: (2 * a, 2 * a + 1),
                M3Case.HIGH: (2 * a + 1,)}[self.case]

    @property
    def heavy_values(self) -> tuple[int, ...]:
        a = self.a
        return {M3Case.LOW: (a,),
                M3Case.MID: (a,),
                M3Case.HIGH: (a, a + 1)}[self.case]

    @property
    def per_pair_range(self) -> tuple[int, int]:
        a = self.a
        return {M3Case.LOW: (4 * a - 1, 4 * a),
                M3Case.MID: (4 * a, 4 * a + 1),
                M3Case.HIGH: (4 * a + 1, 4 * a + 3)}[self.case]


def m3_parameters(per_pair: Fraction) -> M3Shape:
    """The unique shape whose per-pair range contains per_pair (boundaries
    resolve to the range that starts lower); requires per_pair >= 7."""
    per_pair = Fraction(per_pair)
    if per_pair < 7:
        raise ValueError("three-value shapes need per-pair sums >= 7")
    a = -((-(per_pair - 3)) // 4)  # ceil((per_pair - 3) / 4)
    a = max(2, int(a))
    if per_pair <= 4 * a:
        case = M3Case.LOW
    elif per_pair <= 4 * a + 1:
        case = M3Case.MID
    else:
        case = M3Case.HIGH
    return M3Shape(a, case)


def _in_shape(light: frozenset, heavy: frozenset) -> Optional[M3Shape]:
    for a in sorted({v for v in heavy} | {v - 1 for v in heavy}):
        if a < 2:
            continue
        for case in M3Case:
            shape = M3Shape(a, case)
            if light <= set(shape.light_values) and heavy <= set(shape.heavy_values):
                return shape
    return None


@dataclass(frozen=True)
class M3Result:
    sequence: Quotients
    certified: bool
    shape: Optional[M3Shape]


def reduce_m3(seq: Sequence[int], o: Orientation) -> M3Result:
    """Drive a window-form word into a three-value shape by certified
    (1,2)-variations, never decreasing the continuant.

    The step certificates assume interior positions (two quotients on either
    flank), so candidate positions are tried interior-first and every step is
    confirmed by exact comparison before it is kept.  Words with per-pair sum
    below 8 are returned unchanged and flagged; if no strictly increasing
    certified step exists before a shape is reached, the partial result is
    flagged as well.
    """
    seq = cf.check_quotients(seq, allow_empty=False)
    n = len(seq)
    o_light = cf.light_positions(n, o)
    o_heavy = cf.heavy_positions(n, o)
    lights = [seq[i - 1] for i in o_light]
    heavies = [seq[i - 1] for i in o_heavy]
    if max(lights) - min(lights) > 1 or max(heavies) - min(heavies) > 1:
        raise ValueError("input must already have value windows of spread <= 1")
    s = cf.weighted_sum(seq, o)
    if Fraction(2 * s, n) < 8:
        return M3Result(seq, False, None)

    def interior_first(positions):
        return sorted(positions, key=lambda p: (not 3 <= p <= n - 2, p))

    word = list(seq)
    guard = 4 * s * n + 16
    for _ in range(guard):
        light = frozenset(word[i - 1] for i in o_light)
        heavy = frozenset(word[i - 1] for i in o_heavy)
        shape = _in_shape(light, heavy)
        if shape is not None:
            out = tuple(word)
            assert cf.weighted_sum(out, o) == s
            return M3Result(out, True, shape)
        lmin, lmax = min(light), max(light)
        hmin, hmax = min(heavy), max(heavy)
        before = cf.continuant(word)
        moves = []
        # lower one heavy, raise two lights
        if hmax >= 3 and is_abs_increasing_12(hmax - 1, lmin,
                                              VariationDirection.RAISE_HEAVY):
            moves.append((hmax, -1, lmin, +1))
        # raise one heavy, lower two lights
        if lmax >= 2 and is_abs_increasing_12(hmin, lmax - 1,
                                              VariationDirection.RAISE_LIGHT):
            moves.append((hmin, +1, lmax, -1))
        best = None
        for h_from, dh, l_from, dl in moves:
            h_pos = interior_first(i for i in o_heavy if word[i - 1] == h_from)
            l_pos = interior_first(i for i in o_light if word[i - 1] == l_from)
            if not h_pos or len(l_pos) < 2:
                continue
            for hp in h_pos[:4]:
                for i1 in range(min(4, len(l_pos))):
                    for i2 in range(i1 + 1, min(5, len(l_pos))):
                        cand = list(word)
                        cand[hp - 1] += dh
                        cand[l_pos[i1] - 1] += dl
                        cand[l_pos[i2] - 1] += dl
                        value = cf.continuant(cand)
                        if best is None or value > best[0]:
                            best = (value, cand)
        if best is None or best[0] <= before:
            out = tuple(word)
            assert cf.weighted_sum(out, o) == s
            return M3Result(out, False, None)
        word = best[1]
    raise RuntimeError("three-value reduction failed to terminate")


# -- balanced block maximum -----------------------------------------------------


def _mechanical_blocks(common, rare, n_common: int, n_rare: int) -> list:
    """Arrange blocks so the rare kind sits at the mechanical-word positions
    floor((j+1) rho) - floor(j rho) = 1, rho = rare density."""
    m = n_common + n_rare
    out = []
    for j in range(m):
        take_rare = ((j + 1) * n_rare) // m - (j * n_rare) // m == 1
        out.append(rare if take_rare else common)
    return out


def _assemble(blocks: list) -> Quotients:
    """Flatten (light, heavy) pairs into the (1,2,...)-weighted position order."""
    word = []
    for light_v, heavy_v in blocks:
        word.extend((light_v, heavy_v))
    return tuple(word)


def balanced_max(inst: ExtremalInstance) -> Quotients:
    """Near-maximal word built from two block kinds in balanced arrangement.

    The shape is fixed by the per-pair sum; the block multiset is the unique
    mix meeting S exactly (one auxiliary (2a+2, a) pair absorbs the odd
    remainder in the high case, where block sums step by 2).  Blocks are laid
    out as a mechanical word and the exact best rotation (and auxiliary
    placement) is selected by continuant comparison.
    """
    _require_feasible(inst)
    if inst.per_pair < 8:
        raise ValueError("balanced construction requires per-pair sums >= 8")
    m = inst.pairs
    shape = m3_parameters(inst.per_pair)
    a = shape.a
    if shape.case is M3Case.LOW:
        b0, b1, step = (2 * a - 1, a), (2 * a, a), 1
    elif shape.case is M3Case.MID:
        b0, b1, step = (2 * a, a), (2 * a + 1, a), 1
    else:
        b0, b1, step = (2 * a + 1, a), (2 * a + 1, a + 1), 2

    pp0 = b0[0] + 2 * b0[1]
    rem = inst.s - m * pp0
    special = None
    ordinary = m
    if rem < 0:
        raise InfeasibleError("per-pair sum below the shape floor")
    if step == 2 and rem % 2 == 1:
        special = (2 * a + 2, a)
        ordinary = m - 1
        rem -= 1
    k, leftover = divmod(rem, step)
    if leftover or not 0 <= k <= ordinary:
        raise InfeasibleError(
            f"S={inst.s} is not representable with shape {shape} blocks")

    if k <= ordinary - k:
        blocks = _mechanical_blocks(b0, b1, ordinary - k, k)
    else:
        blocks = _mechanical_blocks(b1, b0, k, ordinary - k)

    layouts = []
    if special is None:
        base_lists = [blocks]
    else:
        base_lists = [blocks[:i] + [special] + blocks[i:]
                      for i in range(len(blocks) + 1)]
    for lst in base_lists:
        for shift in range(len(lst)):
            layouts.append(lst[shift:] + lst[:shift])
    best = max((_assemble(lst) for lst in layouts),
               key=lambda w: (cf.continuant(w), [-x for x in w]))
    if inst.orientation is not Orientation.PHI:
        best = cf.reverse(best)
    assert cf.weighted_sum(best, inst.orientation) == inst.s
    return best


@dataclass(frozen=True)
class MaxConstruction:
    sequence: Quotients
    certified: bool


def max_construct(inst: ExtremalInstance) -> MaxConstruction:
    """Near-maximal word: balanced blocks for per-pair >= 8 (within the proven
    constant factor of the true maximum); below that, a window-narrowed greedy
    seed, flagged as uncertified."""
    _require_feasible(inst)
    if inst.per_pair >= 8:
        return MaxConstruction(balanced_max(inst), True)
    n, o = inst.n, inst.orientation
    delta = inst.s - 3 * n // 2
    word = [1] * n
    heavy = cf.heavy_positions(n, o)
    light = cf.light_positions(n, o)
    i = 0
    while delta >= 2:
        word[heavy[i % len(heavy)] - 1] += 1
        delta -= 2
        i += 1
    if delta:
        word[light[0] - 1] += 1
    seed = tuple(word)
    assert cf.weighted_sum(seed, o) == inst.s
    return MaxConstruction(normalize_m4(seed, o), False)
