"""Scalar machinery behind the bounds: Cauchy-type radii, the trinomial
K^{m+1} - 2K^m + 1, and exact Pell-number arithmetic."""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple, Sequence


class Root(NamedTuple):
    value: float
    degenerate: bool = False


def cauchy_polynomial(leading: float, lower: Sequence[float], z: float) -> float:
    """G(z) = leading*z^m - sum_i lower[i] z^{m-1-i}, lower in descending powers."""
    acc = leading
    for c in lower:
        acc = acc * z - c
    return acc


def _cauchy_scale(leading: float, lower: Sequence[float], z: float) -> float:
    acc = leading
    for c in lower:
        acc = acc * z + c
    return acc


def unique_positive_root(leading: float, lower: Sequence[float]) -> Root:
    """Unique positive root of leading*z^m - lower[0] z^{m-1} - ... - lower[m-1].

    ``lower`` lists the m nonnegative coefficients from z^{m-1} down to z^0.
    When all of them vanish the only nonnegative root is 0, returned with
    ``degenerate=True``.
    """
    leading = float(leading)
    lower = [float(c) for c in lower]
    if not leading > 0.0:
        raise ValueError("leading coefficient must be positive")
    if any(c < 0.0 or not math.isfinite(c) for c in lower):
        raise ValueError("lower coefficients must be finite and nonnegative")
    if not lower or max(lower) == 0.0:
        return Root(0.0, degenerate=True)

    lo, hi = 0.0, 1.0 + max(lower) / leading
    while cauchy_polynomial(leading, lower, hi) <= 0.0:  # guards rounding at the Cauchy bound
        hi *= 2.0
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if cauchy_polynomial(leading, lower, mid) > 0.0:
            hi = mid
        else:
            lo = mid
    # lo and hi are adjacent floats; keep the one with smaller |G|
    root = lo if abs(cauchy_polynomial(leading, lower, lo)) <= abs(
        cauchy_polynomial(leading, lower, hi)
    ) else hi
    return Root(root)


def cauchy_residual(leading: float, lower: Sequence[float], z: float) -> float:
    """|G(z)| relative to leading*z^m + sum lower*z^j."""
    scale = _cauchy_scale(leading, lower, z)
    return abs(cauchy_polynomial(leading, lower, z)) / scale if scale else 0.0


def _trinomial_sign(m: int, num: int, bits: int) -> int:
    # sign of p(K) for K = num / 2^bits, scaled by 2^{bits(m+1)}
    val = num ** (m + 1) - (num**m << (bits + 1)) + (1 << (bits * (m + 1)))
    return (val > 0) - (val < 0)


@lru_cache(maxsize=None)
def trinomial_greatest_root_exact(m: int, bits: int | None = None) -> Fraction:
    """Greatest positive root of K^{m+1} - 2K^m + 1 as an exact dyadic rational.

    Bisection runs in integer arithmetic on [1, 2] down to width 2^-bits.  The
    default precision (64 + 2m bits) keeps |p(k_1)| tiny even though
    p'(k_1) grows like 2^m.
    """
    if m < 1:
        raise ValueError("degree must be at least 1")
    if m == 1:
        return Fraction(1)
    if bits is None:
        bits = 64 + 2 * m
    one = 1 << bits
    lo, hi = one + 1, 2 * one  # p(1 + 2^-bits) < 0 <= p(2) = 1 for m >= 2
    if _trinomial_sign(m, lo, bits) >= 0:
        return Fraction(1)
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _trinomial_sign(m, mid, bits) > 0:
            hi = mid
        else:
            lo = mid
    lo_frac, hi_frac = Fraction(lo, one), Fraction(hi, one)
    return lo_frac if abs(trinomial(m, lo_frac)) <= abs(trinomial(m, hi_frac)) else hi_frac


def trinomial(m: int, k):
    """K^{m+1} - 2K^m + 1, evaluated in the arithmetic of ``k``."""
    return k ** (m + 1) - 2 * k**m + 1


def trinomial_greatest_root(m: int) -> Root:
    """k_1(m) rounded to a float.  m = 1 gives the double root 1 (degenerate)."""
    return Root(float(trinomial_greatest_root_exact(m)), degenerate=(m == 1))


@lru_cache(maxsize=None)
def _pell_table(k: int) -> tuple[int, ...]:
    vals = [0, 1]
    while len(vals) <= k:
        vals.append(2 * vals[-1] + vals[-2])
    return tuple(vals)


def pell(k: int) -> int:
    if k < 0:
        raise ValueError("Pell index must be nonnegative")
    return _pell_table(max(k, 1))[k]


def binomial(n: int, r: int) -> int:
    return math.comb(n, r)


def pell_identity_sides(m: int) -> tuple[int, int]:
    """(sum_{k=0}^m C(2m, m+k) P_k^2, 2^{3(m-1)}) as exact integers."""
    if m < 1:
        raise ValueError("m must be at least 1")
    lhs = sum(binomial(2 * m, m + k) * pell(k) ** 2 for k in range(m + 1))
    return lhs, 2 ** (3 * (m - 1))


def pell_identity_check(m: int) -> bool:
    lhs, rhs = pell_identity_sides(m)
    return lhs == rhs


def pell_weight(m: int, k: int) -> Fraction:
    """2^{3(1-m)} C(2m, m+k) P_k^2 exactly; these weights sum to 1 over k = 0..m."""
    return Fraction(binomial(2 * m, m + k) * pell(k) ** 2, 2 ** (3 * (m - 1)))
