"""Closed-form recognizers for exponents with provably finite monodromy,
the large-p infinitude shortcut, and the binomial witness used for Lie
irreducibility.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import criterion
from .criterion import Witness, check_args
from .digits import digits


@dataclass(frozen=True)
class FamilyTag:
    """``d = p^a + 1`` (kind "power_plus_one") or ``d = (p^a + 1)/(p^b + 1)``, ``a = b c``."""

    kind: str
    a: int
    b: int | None = None
    c: int | None = None

    def check(self, p: int, d: int) -> bool:
        if self.kind == "power_plus_one":
            return self.a >= 1 and d - 1 == p**self.a
        if self.kind == "ratio":
            b, c = self.b, self.c
            return (
                b is not None
                and c is not None
                and b >= 1
                and c >= 3
                and c % 2 == 1
                and self.a == b * c
                and (p**b + 1) * d == p**self.a + 1
            )
        return False

    def describe(self, p: int) -> str:
        if self.kind == "power_plus_one":
            return f"{p}^{self.a}+1"
        return f"({p}^{self.a}+1)/({p}^{self.b}+1)"


def _power_exponent(n: int, p: int) -> int | None:
    """a >= 1 with n == p^a, else None."""
    a = 0
    while n > 1 and n % p == 0:
        n //= p
        a += 1
    return a if n == 1 and a >= 1 else None


def recognize(p: int, d: int) -> FamilyTag | None:
    check_args(p, d)
    a = _power_exponent(d - 1, p)
    if a is not None:
        return FamilyTag("power_plus_one", a)
    b = 1
    while p ** (3 * b) + 1 <= (p**b + 1) * d:
        target = (p**b + 1) * d
        c = 3
        while p ** (b * c) + 1 <= target:
            if p ** (b * c) + 1 == target:
                tag = FamilyTag("ratio", b * c, b, c)
                assert tag.check(p, d)
                return tag
            c += 2
        b += 1
    return None


def large_p_witness(p: int, d: int) -> Witness | None:
    """Level-1 witness ``x = q`` with ``p = q d + s``, ``0 < s <= d``, when ``p >= 2d + 1``."""
    check_args(p, d)
    if p < 2 * d + 1:
        return None
    q = (p - 1) // d
    w = criterion.make_witness(p, d, 1, q)
    if not w.violates(p) or criterion.check_level(p, d, 1) is None:
        raise AssertionError(f"large-p witness failed to validate for p={p}, d={d}")
    return w


def binomial_nonzero_mod_p(n: int, k: int, p: int) -> bool:
    """binom(n, k) != 0 mod p iff every base-p digit of k is <= the digit of n."""
    if k < 0 or k > n:
        return False
    dn, dk = digits(n, p), digits(k, p)
    return all(kd <= (dn[i] if i < len(dn) else 0) for i, kd in enumerate(dk))


def lucas_witness(p: int, d: int) -> int:
    """``l = p^{ord_p(d-1)}`` with ``l < d - (d-1)/p``, ``p`` not dividing ``d - l``
    and ``binom(d, l)`` prime to ``p``."""
    check_args(p, d)
    if _power_exponent(d - 1, p) is not None:
        raise ValueError(f"d={d} is of the form p^a+1")
    n, e = d - 1, 0
    while n % p == 0:
        n //= p
        e += 1
    l = p**e
    assert l * p < d * p - (d - 1), (p, d, l)
    assert (d - l) % p != 0, (p, d, l)
    assert binomial_nonzero_mod_p(d, l, p), (p, d, l)
    return l


def enumerate_conjectured_finite(p: int, d_max: int) -> list[int]:
    """All ``3 <= d <= d_max`` of the form ``2^a + 1`` or ``(2^{bc} + 1)/(2^b + 1)``, c odd >= 3."""
    if p != 2:
        raise ValueError("the conjectured list is only stated for p = 2")
    found = set()
    a = 1
    while 2**a + 1 <= d_max:
        found.add(2**a + 1)
        a += 1
    b = 1
    while (2 ** (3 * b) + 1) // (2**b + 1) <= d_max:
        c = 3
        while (2 ** (b * c) + 1) // (2**b + 1) <= d_max:
            num = 2 ** (b * c) + 1
            assert num % (2**b + 1) == 0
            found.add(num // (2**b + 1))
            c += 2
        b += 1
    return sorted(x for x in found if x >= 3)
