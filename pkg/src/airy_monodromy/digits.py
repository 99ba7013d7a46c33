"""Base-p digit sums of residues modulo p^r - 1.

For a fixed prime ``p`` and level ``r`` every integer ``x`` has a unique
representative ``1 <= y <= p^r - 1`` modulo ``m = p^r - 1``; its digit sum
``[x]`` is the sum of the base-p digits of ``y``.  Note that multiples of ``m``
reduce to ``m`` itself, so ``[0] = r(p - 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

MAX_MODULUS = 2**63


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class DigitContext:
    """Immutable frame ``(p, r)`` with modulus ``m = p^r - 1``."""

    p: int
    r: int
    m: int = field(init=False)
    powers: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"p={self.p} is not prime")
        if self.r < 1:
            raise ValueError(f"level r={self.r} must be >= 1")
        m = self.p**self.r - 1
        if m >= MAX_MODULUS:
            raise OverflowError(f"p^r - 1 = {self.p}^{self.r} - 1 exceeds the 64-bit bound")
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "powers", tuple(self.p**i for i in range(self.r)))

    @property
    def max_digit_sum(self) -> int:
        return self.r * (self.p - 1)


def reduce(x: int, ctx: DigitContext) -> int:
    """Representative of ``x`` in ``[1, m]``."""
    return (x - 1) % ctx.m + 1


def digits(y: int, p: int) -> list[int]:
    """Base-p digits of a non-negative integer, least significant first."""
    out = []
    while y:
        y, rem = divmod(y, p)
        out.append(rem)
    return out


def digit_sum(x: int, ctx: DigitContext) -> int:
    y = reduce(x, ctx)
    if ctx.p == 2:
        return y.bit_count()
    return sum(digits(y, ctx.p))


def digit_sum_via_fractions(x: int, ctx: DigitContext) -> int:
    """``(p-1) * sum_i {p^i x / m}`` evaluated over the common denominator ``m``."""
    m = ctx.m
    if x % m == 0:
        raise ValueError("the fractional-part formula needs x not divisible by p^r - 1")
    total = sum((pi * x) % m for pi in ctx.powers)
    num = (ctx.p - 1) * total
    q, rem = divmod(num, m)
    # the sum of the fractional parts is a multiple of 1/(p-1)
    assert rem == 0, (x, ctx)
    return q


def orbit(x: int, ctx: DigitContext) -> list[int]:
    """Residues ``p^k x mod m`` (as representatives in [1, m]) for k < r, deduplicated."""
    y = reduce(x, ctx)
    seen = []
    for _ in range(ctx.r):
        if y in seen:
            break
        seen.append(y)
        y = reduce(y * ctx.p, ctx)
    return seen


def is_orbit_representative(x: int, ctx: DigitContext) -> bool:
    return reduce(x, ctx) == min(orbit(x, ctx))


# -- vectorized kernels -----------------------------------------------------


@lru_cache(maxsize=32)
def _block_table(p: int) -> tuple[int, np.ndarray]:
    """Digit sums of every integer below ``B = p^k``, the largest such block <= 2^16."""
    k = 1
    while p ** (k + 1) <= 2**16:
        k += 1
    table = np.zeros(1, dtype=np.int64)
    for _ in range(k):
        table = (table[None, :] + np.arange(p, dtype=np.int64)[:, None]).T.reshape(-1)
    return p**k, table


def digit_sum_array(y: np.ndarray, p: int, r: int) -> np.ndarray:
    """Digit sums of already-reduced residues ``1 <= y <= p^r - 1`` (int64 array)."""
    if p == 2:
        return np.bitwise_count(y.astype(np.uint64)).astype(np.int64)
    block, table = _block_table(p)
    y = y.astype(np.int64, copy=True)
    out = np.zeros_like(y)
    while True:
        y, low = np.divmod(y, block)
        out += table[low]
        if not y.any():
            return out


def reduce_array(x: np.ndarray, m: int) -> np.ndarray:
    return (x - 1) % m + 1
