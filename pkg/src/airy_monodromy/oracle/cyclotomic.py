"""Exact arithmetic in Z[zeta_p] and valuations at lambda = 1 - zeta_p."""

from __future__ import annotations

import math
from dataclasses import dataclass


@dataclass(frozen=True)
class CyclotomicInteger:
    """``sum_i coeffs[i] zeta_p^i`` in the basis 1, zeta, ..., zeta^{p-2}."""

    p: int
    coeffs: tuple[int, ...]

    def __post_init__(self):
        if len(self.coeffs) != max(self.p - 1, 1):
            raise ValueError(f"expected {max(self.p - 1, 1)} coefficients, got {len(self.coeffs)}")

    @classmethod
    def from_powers(cls, p: int, counts) -> CyclotomicInteger:
        """Element ``sum_k counts[k] zeta^k`` from coefficients of zeta^0..zeta^{p-1}."""
        counts = [int(c) for c in counts]
        if len(counts) != p:
            raise ValueError(f"expected {p} power coefficients")
        if p == 2:
            return cls(2, (counts[0] - counts[1],))
        top = counts[-1]
        # zeta^{p-1} = -(1 + zeta + ... + zeta^{p-2})
        return cls(p, tuple(c - top for c in counts[:-1]))

    @classmethod
    def integer(cls, p: int, n: int) -> CyclotomicInteger:
        return cls(p, (n,) + (0,) * (max(p - 1, 1) - 1))

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __add__(self, other: CyclotomicInteger) -> CyclotomicInteger:
        return CyclotomicInteger(self.p, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> CyclotomicInteger:
        return CyclotomicInteger(self.p, tuple(-a for a in self.coeffs))

    def __sub__(self, other: CyclotomicInteger) -> CyclotomicInteger:
        return self + (-other)

    def __mul__(self, other: CyclotomicInteger) -> CyclotomicInteger:
        p = self.p
        if p == 2:
            return CyclotomicInteger(2, (self.coeffs[0] * other.coeffs[0],))
        acc = [0] * p  # reduce modulo zeta^p = 1 first
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    acc[(i + j) % p] += a * b
        return CyclotomicInteger.from_powers(p, acc)

    def __pow__(self, n: int) -> CyclotomicInteger:
        out = CyclotomicInteger.integer(self.p, 1)
        for _ in range(n):
            out = out * self
        return out

    def to_complex(self) -> complex:
        z = complex(math.cos(2 * math.pi / self.p), math.sin(2 * math.pi / self.p))
        return sum(c * z**i for i, c in enumerate(self.coeffs))


def divide_by_lambda(z: CyclotomicInteger) -> CyclotomicInteger | None:
    """``z / (1 - zeta)`` if it lies in Z[zeta], else None."""
    p = z.p
    s = sum(z.coeffs)  # z mod lambda is z(1) mod p
    if s % p:
        return None
    k = s // p
    if p == 2:
        return CyclotomicInteger(2, (k,))
    # z - k * Phi_p vanishes at X = 1, so it is divisible by (X - 1) in Z[X]
    a = [c - k for c in z.coeffs] + [-k]
    quot = [0] * (p - 1)
    carry = 0
    for i in range(p - 1, 0, -1):
        carry += a[i]
        quot[i - 1] = carry
    assert carry + a[0] == 0
    # (1 - X) w = z' means w = -(z' / (X - 1))
    return CyclotomicInteger(p, tuple(-c for c in quot))


def lambda_valuation(z: CyclotomicInteger, cap: int | None = None) -> float:
    """``v_lambda(z)``; ``inf`` for zero.  With ``cap`` the count stops at ``cap``."""
    if z.is_zero():
        return math.inf
    v = 0
    while cap is None or v < cap:
        w = divide_by_lambda(z)
        if w is None:
            break
        z, v = w, v + 1
    return v
