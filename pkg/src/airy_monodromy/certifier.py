"""Finiteness certificates from the piecewise-linear function

    f_r(x) = sum_{i<r} {p^i x} + sum_{i<r} {-d p^i x}.

If for some ``r0`` the values ``f_{r0}(a/d)`` (a = 1..d-1) and the left limits of
``f_{r0}`` at the breakpoints ``a/(p^{r0-1} d)`` (a = 1..p^{r0-1} d) are all
``>= r0/2``, the monodromy is finite.  Everything is kept as integer numerators
over a fixed denominator; no floating point enters a comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .criterion import check_args

MAX_DENOMINATOR = 2**40


@dataclass(frozen=True)
class ScaledRational:
    num: int
    den: int

    def __post_init__(self):
        if self.den <= 0:
            raise ValueError("denominator must be positive")

    def at_least_half_of(self, r: int) -> bool:
        """``num/den >= r/2`` by cross-multiplication."""
        return 2 * self.num >= r * self.den

    def to_fraction(self) -> Fraction:
        return Fraction(self.num, self.den)


@dataclass(frozen=True)
class FiniteCertificate:
    r0: int
    value_points: int  # condition (1): d - 1 points a/d
    limit_points: int  # condition (2): p^(r0-1) d left limits

    @property
    def checked_points(self) -> tuple[int, int]:
        return (self.value_points, self.limit_points)


def _check_point(a: int, den: int, p: int, d: int, r: int, upper: int) -> None:
    if r < 1:
        raise ValueError(f"level r={r} must be >= 1")
    if not 0 < a < upper:
        raise ValueError(f"a/den = {a}/{den} outside the allowed range")
    if (p ** (r - 1) * d) % den:
        raise ValueError(f"den={den} does not divide p^(r-1) d = {p ** (r - 1) * d}")
    if den * p * d >= MAX_DENOMINATOR:
        raise OverflowError("denominator too large for exact 64-bit evaluation")


def _sums(a: int, den: int, p: int, d: int, r: int) -> tuple[int, int, int]:
    """(first group numerator, number of integral first-group terms, second group numerator)."""
    first = second = zeros = 0
    u = a % den
    for _ in range(r):
        first += u
        zeros += u == 0
        second += (-d * u) % den
        u = (u * p) % den
    return first, zeros, second


def f_value(a: int, den: int, p: int, d: int, r: int) -> ScaledRational:
    """``f_r(a/den)`` for ``0 < a/den < 1``."""
    _check_point(a, den, p, d, r, den)
    first, _, second = _sums(a, den, p, d, r)
    return ScaledRational(first + second, den)


def f_left_limit(a: int, den: int, p: int, d: int, r: int) -> ScaledRational:
    """``lim_{x -> (a/den)^-} f_r(x)`` for ``0 < a/den <= 1``.

    A term ``{p^i x}`` whose argument hits an integer tends to 1 from the left.
    A term ``{-d p^i x}`` whose argument hits an integer approaches it from
    above, so it tends to 0 and keeps its value.
    """
    _check_point(a, den, p, d, r, den + 1)
    first, zeros, second = _sums(a, den, p, d, r)
    return ScaledRational(first + zeros * den + second, den)


def _condition_values(p: int, d: int, r0: int) -> bool:
    for a in range(1, d):
        first, zeros, second = _sums(a, d, p, d, r0)
        # every -d p^i a/d is an integer
        assert second == 0 and zeros == 0
        if 2 * first < r0 * d:
            return False
    return True


def _condition_limits(p: int, d: int, r0: int) -> bool:
    den = p ** (r0 - 1) * d
    a = np.arange(1, den + 1, dtype=np.int64)
    total = np.zeros_like(a)
    u = a.copy()
    for _ in range(r0):
        first = u % den
        total += np.where(first == 0, den, first)
        total += (-d * first) % den
        u = (first * p) % den
    return bool(np.all(2 * total >= r0 * den))


def certify(p: int, d: int, r0: int) -> FiniteCertificate | None:
    check_args(p, d)
    if r0 < 1:
        raise ValueError(f"r0={r0} must be >= 1")
    den = p ** (r0 - 1) * d
    if den * p * d >= MAX_DENOMINATOR:
        raise OverflowError(f"p^(r0-1) d = {den} is beyond the exact evaluation bound")
    if not _condition_values(p, d, r0):
        return None
    if not _condition_limits(p, d, r0):
        return None
    return FiniteCertificate(r0=r0, value_points=d - 1, limit_points=den)


def default_r0_max(p: int) -> int:
    """12 for p = 2; for odd p the largest r0 with p^(r0-1) <= 2^11."""
    if p == 2:
        return 12
    r0 = 1
    while p**r0 <= 2**11:
        r0 += 1
    return r0


def find_certificate(p: int, d: int, r0_max: int | None = None) -> FiniteCertificate | None:
    if r0_max is None:
        r0_max = default_r0_max(p)
    for r0 in range(1, r0_max + 1):
        cert = certify(p, d, r0)
        if cert is not None:
            return cert
    return None
