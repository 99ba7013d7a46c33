"""Slow, independent reference implementations used to derive expected values."""

from fractions import Fraction
import cmath
import math

import numpy as np


def brute_digit_sum(x, p, r):
    m = p**r - 1
    y = x % m or m
    return sum(int(c, 36) for c in np.base_repr(y, base=p))


def brute_violations(p, d, r):
    """Every x in [1, p^r - 2] with [dx] > [x] + r(p-1)/2, via rationals."""
    bound = Fraction(r * (p - 1), 2)
    return [
        x
        for x in range(1, p**r - 1)
        if brute_digit_sum(d * x, p, r) > brute_digit_sum(x, p, r) + bound
    ]


def frac(q: Fraction) -> Fraction:
    return q - math.floor(q)


def f_exact(x: Fraction, p, d, r) -> Fraction:
    return sum(frac(p**i * x) for i in range(r)) + sum(frac(-d * p**i * x) for i in range(r))


def f_left_limit_exact(b: Fraction, p, d, r) -> Fraction:
    """Left limit at b from a point just to the left plus the known constant slope."""
    eps = Fraction(1, 4 * p ** (r - 1) * d)
    slope = (1 - d) * (p**r - 1) // (p - 1)
    return f_exact(b - eps, p, d, r) + slope * eps


def brute_trace(F, x):
    """Tr(x) = x + x^p + ... via polynomial arithmetic only."""
    total = 0
    for k in range(F.r):
        total = F.add(total, F.pow_poly(x, F.p**k))
    assert total < F.p
    return total


def brute_exp_sum_complex(F, d, t):
    zeta = cmath.exp(2j * math.pi / F.p)
    return sum(
        zeta ** brute_trace(F, F.add(F.pow_poly(x, d), F.mul_poly(t, x))) for x in range(F.q)
    )
