"""Finite fields F_{p^r} with exp/log tables.

Elements are integers ``0 <= e < p^r`` encoding the coefficient vector of a
polynomial of degree < r: ``e = sum_i c_i p^i`` where ``c_i`` is the
coefficient of ``X^i``.  The modulus is the lexicographically first monic
irreducible (for r = 1 this is ``X`` and the elements are plain residues).
"""

from __future__ import annotations

import math
from functools import cached_property

import numpy as np

from ..digits import is_prime

MAX_ORDER = 2**22


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


# -- polynomials over F_p, coefficient lists low degree first ---------------


def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def poly_mod(a: list[int], f: list[int], p: int) -> list[int]:
    """Remainder of ``a`` modulo the monic polynomial ``f``."""
    a = _trim([c % p for c in a])
    n = len(f) - 1
    while len(a) > n:
        lead = a[-1]
        shift = len(a) - 1 - n
        for i, fc in enumerate(f):
            a[shift + i] = (a[shift + i] - lead * fc) % p
        _trim(a)
    return a


def poly_mul(a: list[int], b: list[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    return out


def is_irreducible(f: list[int], p: int) -> bool:
    """Exhaustive check: no monic divisor of degree 1..deg(f)/2."""
    n = len(f) - 1
    for k in range(1, n // 2 + 1):
        for code in range(p**k):
            g = [(code // p**i) % p for i in range(k)] + [1]
            if not poly_mod(list(f), g, p):
                return False
    return True


def first_irreducible(p: int, r: int) -> list[int]:
    for code in range(p**r):
        f = [(code // p**i) % p for i in range(r)] + [1]
        if is_irreducible(f, p):
            return f
    raise AssertionError(f"no irreducible polynomial of degree {r} over F_{p}")


class FiniteField:
    def __init__(self, p: int, r: int):
        if not is_prime(p):
            raise ValueError(f"p={p} is not prime")
        if r < 1:
            raise ValueError(f"degree r={r} must be >= 1")
        if p**r - 1 > MAX_ORDER:
            raise ValueError(f"p^r - 1 = {p**r - 1} exceeds the table bound 2^22")
        self.p = p
        self.r = r
        self.q = p**r
        self.modulus = tuple(first_irreducible(p, r))
        self._powers = np.array([p**i for i in range(r)], dtype=np.int64)
        self.generator = self._find_generator()
        self.exp_table = self._build_exp()
        log = np.full(self.q, -1, dtype=np.int64)
        log[self.exp_table] = np.arange(self.q - 1, dtype=np.int64)
        self.log_table = log
        self.trace_table = self._build_trace()

    def __repr__(self):
        return f"FiniteField(p={self.p}, r={self.r})"

    # -- encoding ---------------------------------------------------------

    def to_vec(self, e: int) -> list[int]:
        return [(e // self.p**i) % self.p for i in range(self.r)]

    def from_vec(self, v) -> int:
        return sum(int(c) % self.p * self.p**i for i, c in enumerate(v))

    def digits_array(self, e: np.ndarray) -> np.ndarray:
        """Shape (len(e), r) coefficient matrix."""
        return (e[:, None] // self._powers[None, :]) % self.p

    # -- arithmetic -------------------------------------------------------

    def mul_poly(self, a: int, b: int) -> int:
        """Product by polynomial multiplication; independent of the tables."""
        prod = poly_mul(_trim(self.to_vec(a)), _trim(self.to_vec(b)), self.p)
        return self.from_vec(poly_mod(prod, list(self.modulus), self.p))

    def pow_poly(self, a: int, n: int) -> int:
        result, base = 1, a
        while n:
            if n & 1:
                result = self.mul_poly(result, base)
            base = self.mul_poly(base, base)
            n >>= 1
        return result

    def add(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        return self.from_vec(x + y for x, y in zip(self.to_vec(a), self.to_vec(b)))

    def add_array(self, a: np.ndarray, b: np.ndarray) -> np.ndarray:
        if self.p == 2:
            return a ^ b
        s = (self.digits_array(a) + self.digits_array(b)) % self.p
        return s @ self._powers

    def neg(self, a: int) -> int:
        return self.from_vec(-c for c in self.to_vec(a))

    def mul(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        n = self.q - 1
        return int(self.exp_table[(self.log_table[a] + self.log_table[b]) % n])

    def power(self, a: int, n: int) -> int:
        if a == 0:
            return 0 if n > 0 else 1
        return int(self.exp_table[(self.log_table[a] * n) % (self.q - 1)])

    def power_table(self, d: int) -> np.ndarray:
        """``e^d`` for every element e."""
        out = np.zeros(self.q, dtype=np.int64)
        idx = np.arange(1, self.q)
        out[1:] = self.exp_table[(self.log_table[idx] * d) % (self.q - 1)]
        return out

    def scale_table(self, t: int) -> np.ndarray:
        """``t * e`` for every element e."""
        out = np.zeros(self.q, dtype=np.int64)
        if t:
            idx = np.arange(1, self.q)
            out[1:] = self.exp_table[(self.log_table[idx] + self.log_table[t]) % (self.q - 1)]
        return out

    def frobenius_trace(self, a: int, over: int = 1) -> int:
        """Relative trace ``sum_{k < r/over} a^{p^(over k)}`` as a field element."""
        if self.r % over:
            raise ValueError(f"{over} does not divide {self.r}")
        total, y = 0, a
        step = self.p**over
        for _ in range(self.r // over):
            total = self.add(total, y)
            y = self.power(y, step)
        return total

    @cached_property
    def elements(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)

    # -- construction -----------------------------------------------------

    def _find_generator(self) -> int:
        n = self.q - 1
        if n == 1:
            return 1
        ells = _prime_factors(n)
        for g in range(1, self.q):
            if all(self.pow_poly(g, n // ell) != 1 for ell in ells):
                return g
        raise AssertionError("multiplicative group has no generator")

    def _mul_matrix(self, h: int) -> np.ndarray:
        """Matrix of ``v -> h v`` acting on coefficient column vectors."""
        cols = []
        col = self.to_vec(h)
        for _ in range(self.r):
            cols.append(col)
            shifted = [0] + col
            col = (poly_mod(shifted, list(self.modulus), self.p) + [0] * self.r)[: self.r]
        return np.array(cols, dtype=np.int64).T

    def _build_exp(self) -> np.ndarray:
        n = self.q - 1
        block = max(1, math.isqrt(n))
        mg = self._mul_matrix(self.generator)
        first = np.zeros((block, self.r), dtype=np.int64)
        v = np.array(self.to_vec(1), dtype=np.int64)
        for i in range(block):
            first[i] = v
            v = (mg @ v) % self.p
        step = self._mul_matrix(self.from_vec(v))  # g^block
        rows, cur = [first], first
        total = block
        while total < n:
            cur = (cur @ step.T) % self.p
            rows.append(cur)
            total += block
        vecs = np.concatenate(rows)[:n]
        return vecs @ self._powers

    def _build_trace(self) -> np.ndarray:
        # Tr(y) is the trace of multiplication by y; linear in y.
        basis = [int(np.trace(self._mul_matrix(self.p**j))) % self.p for j in range(self.r)]
        coeff = self.digits_array(self.elements)
        return (coeff @ np.array(basis, dtype=np.int64)) % self.p


def build_field(p: int, r: int) -> FiniteField:
    return FiniteField(p, r)
