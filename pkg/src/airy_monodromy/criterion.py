"""Search for violations of the digit-sum inequality

    [d x]_{p,r} <= [x]_{p,r} + r(p-1)/2,   1 <= x <= p^r - 2.

A single violation at any level proves that the Airy sheaf for ``x^d`` has
infinite geometric monodromy.  All comparisons are done on integers, doubled
to avoid the half.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .digits import DigitContext, digit_sum, digit_sum_array, is_prime

SCAN_BOUND = 2**24
MAX_SCAN_MODULUS = 2**36
CHUNK = 1 << 20


@dataclass(frozen=True)
class Witness:
    r: int
    x: int
    lhs: int  # [dx]_{p,r}
    rhs_digit: int  # [x]_{p,r}

    def violates(self, p: int) -> bool:
        return 2 * self.lhs > 2 * self.rhs_digit + self.r * (p - 1)


def check_args(p: int, d: int) -> None:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if d < 3:
        raise ValueError(f"d={d} must be >= 3")
    if math.gcd(d, p) != 1:
        raise ValueError(f"gcd(d, p) = gcd({d}, {p}) != 1")


def default_r_max(p: int) -> int:
    """24 for p = 2; otherwise the largest r with p^r - 1 < 2^24."""
    if p == 2:
        return 24
    r = 1
    while p ** (r + 1) - 1 < SCAN_BOUND:
        r += 1
    return r


def violates(p: int, d: int, r: int, x: int) -> bool:
    """Pointwise test of the strict inequality at ``(r, x)``."""
    ctx = DigitContext(p, r)
    return 2 * digit_sum(d * x, ctx) > 2 * digit_sum(x, ctx) + ctx.max_digit_sum


def make_witness(p: int, d: int, r: int, x: int) -> Witness:
    ctx = DigitContext(p, r)
    return Witness(r=r, x=x, lhs=digit_sum(d * x, ctx), rhs_digit=digit_sum(x, ctx))


def _first_violation(p: int, d: int, r: int, start: int, stop: int) -> int | None:
    """Smallest violating x in ``[start, stop)`` or None."""
    m = p**r - 1
    bound = r * (p - 1)
    dm = d % m
    for lo in range(start, stop, CHUNK):
        x = np.arange(lo, min(lo + CHUNK, stop), dtype=np.int64)
        dx = (x * dm - 1) % m + 1
        lhs = digit_sum_array(dx, p, r)
        rhs = digit_sum_array(x, p, r)
        hits = np.flatnonzero(2 * lhs > 2 * rhs + bound)
        if hits.size:
            return int(x[hits[0]])
    return None


def check_level(p: int, d: int, r: int) -> Witness | None:
    """Minimal violating x at level ``r``, scanning ``1 <= x <= p^r - 2``."""
    check_args(p, d)
    m = p**r - 1
    if m > MAX_SCAN_MODULUS:
        raise ValueError(f"level r={r} too large for p={p} (p^r - 1 = {m})")
    if m < 2:
        return None
    if m * (d % m) >= 2**62:
        raise OverflowError("d * x would overflow the 64-bit scan kernel")
    x = _first_violation(p, d, r, 1, m - 1)
    if x is None:
        return None
    w = make_witness(p, d, r, x)
    assert w.violates(p)
    return w


def find_witness(p: int, d: int, r_max: int | None = None) -> Witness | None:
    """First witness over levels ``r = 1 .. r_max`` (minimal r, then minimal x)."""
    check_args(p, d)
    if r_max is None:
        r_max = default_r_max(p)
    for r in range(1, r_max + 1):
        w = check_level(p, d, r)
        if w is not None:
            return w
    return None
