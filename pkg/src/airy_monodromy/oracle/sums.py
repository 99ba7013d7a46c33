"""Exponential sums ``S(t) = sum_x psi(Tr(x^d + t x))`` over a finite field, computed
exactly in Z[zeta_p], plus float-level character and Gauss sum checks.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

from .cyclotomic import CyclotomicInteger, lambda_valuation
from .field import FiniteField


def _check_exponent(F: FiniteField, d: int) -> None:
    if math.gcd(d, F.p) != 1:
        raise ValueError(f"gcd(d, p) = gcd({d}, {F.p}) != 1")


def _trace_counts(F: FiniteField, values: np.ndarray) -> list[int]:
    return np.bincount(values % F.p, minlength=F.p).tolist()


def exp_sum(F: FiniteField, d: int, t: int) -> CyclotomicInteger:
    _check_exponent(F, d)
    tr = F.trace_table
    phase = tr[F.power_table(d)] + tr[F.scale_table(t)]
    return CyclotomicInteger.from_powers(F.p, _trace_counts(F, phase))


def all_exp_sums(F: FiniteField, d: int) -> list[CyclotomicInteger]:
    """``S(t)`` for every t, indexed by the element encoding."""
    _check_exponent(F, d)
    tr = F.trace_table
    base = tr[F.power_table(d)]
    return [
        CyclotomicInteger.from_powers(F.p, _trace_counts(F, base + tr[F.scale_table(t)]))
        for t in range(F.q)
    ]


@dataclass
class DivisibilityReport:
    p: int
    r: int
    d: int
    valuations: dict[int, float]
    failures: list[int] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def threshold(self) -> float:
        return self.r * (self.p - 1) / 2


def check_divisibility_all_t(F: FiniteField, d: int) -> DivisibilityReport:
    """``S(t)`` divisible by ``p^{r/2}``, i.e. ``2 v_lambda(S(t)) >= r(p-1)``, for every t."""
    bound = F.r * (F.p - 1)
    vals = {}
    failures = []
    for t, s in enumerate(all_exp_sums(F, d)):
        v = lambda_valuation(s, cap=bound + F.p)
        vals[t] = v
        if 2 * v < bound:
            failures.append(t)
    return DivisibilityReport(F.p, F.r, d, vals, failures)


def _require_char2(F: FiniteField) -> None:
    if F.p != 2:
        raise ValueError("the fourth-moment identity is only implemented for p = 2")


def fourth_moment_lhs(F: FiniteField, d: int) -> int:
    _require_char2(F)
    return sum(s.coeffs[0] ** 4 for s in all_exp_sums(F, d))


def fourth_moment_rhs(F: FiniteField, d: int) -> int:
    """``q * sum_{x,y,z} (-1)^{Tr(x^d + y^d + z^d + (x+y+z)^d)}`` by brute force over triples."""
    _require_char2(F)
    _check_exponent(F, d)
    sign = 1 - 2 * F.trace_table[F.power_table(d)]
    idx = F.elements
    yz = idx[:, None] ^ idx[None, :]
    pair = sign[:, None] * sign[None, :]
    total = 0
    for x in range(F.q):
        total += int(sign[x]) * int(np.sum(pair * sign[yz ^ x]))
    return F.q * total


def fourth_moment_check(F: FiniteField, d: int) -> tuple[int, int, bool]:
    lhs, rhs = fourth_moment_lhs(F, d), fourth_moment_rhs(F, d)
    return lhs, rhs, lhs == rhs


def normalized_fourth_moment(F: FiniteField, d: int) -> float:
    return fourth_moment_lhs(F, d) / F.q**3


# -- float checks -----------------------------------------------------------


def float_tolerance(F: FiniteField) -> float:
    return 1e-9 if F.q <= 2**12 else 1e-6


def _root(k, n: int):
    return np.exp(2j * np.pi * (np.asarray(k) % n) / n)


def character_lemma_check(
    F: FiniteField, d: int, z: int, chi_index: int
) -> tuple[complex, complex, bool]:
    """``sum_{x^d = z} chi(x)`` against ``sum_{eta^d = chi} eta(z)`` with ``chi = chi0^chi_index``."""
    n = F.q - 1
    if z == 0:
        raise ValueError("z must be nonzero")
    if not 0 <= chi_index < n:
        raise ValueError(f"chi_index must lie in [0, {n})")
    units = np.arange(1, F.q)
    sols = units[F.power_table(d)[1:] == z]
    lhs = complex(np.sum(_root(chi_index * F.log_table[sols], n)))
    c = np.arange(n)
    etas = c[(d * c - chi_index) % n == 0]
    rhs = complex(np.sum(_root(etas * int(F.log_table[z]), n)))
    return lhs, rhs, abs(lhs - rhs) < float_tolerance(F)


def gauss_sum_float(F: FiniteField, chi_index: int) -> complex:
    """``G(psi, chi) = -sum_{u != 0} psi(Tr u) chi(u)`` for non-trivial ``chi = chi0^chi_index``."""
    n = F.q - 1
    if chi_index % n == 0:
        raise ValueError("the Gauss sum needs a non-trivial character")
    u = F.exp_table  # u = g^k, k = 0..n-1
    terms = _root(F.trace_table[u], F.p) * _root(chi_index * np.arange(n), n)
    return complex(-np.sum(terms))


def hasse_davenport_pair(F: FiniteField, s: int, chi_index: int) -> tuple[complex, complex]:
    """``(G(psi_r, chi o N), G(psi_s, chi)^(r/s))`` for a character of the subfield F_{p^s}.

    ``chi`` is taken on the subfield's multiplicative group generated by the norm
    of the fixed generator, ``h = g^((q-1)/(p^s-1))``.
    """
    if F.r % s:
        raise ValueError(f"subfield degree {s} must divide {F.r}")
    small = F.p**s - 1
    if chi_index % small == 0:
        raise ValueError("the Gauss sum needs a non-trivial character")
    mult = (F.q - 1) // small
    total = 0j
    for j in range(small):
        u = int(F.exp_table[j * mult])
        tr = F.frobenius_trace(u, over=1) if s == F.r else _subfield_trace(F, u, s)
        total += cmath.exp(2j * math.pi * tr / F.p) * cmath.exp(2j * math.pi * chi_index * j / small)
    g_small = -total
    g_big = gauss_sum_float(F, chi_index * mult)
    return g_big, g_small ** (F.r // s)


def _subfield_trace(F: FiniteField, u: int, s: int) -> int:
    """``Tr_{F_{p^s}/F_p}(u)`` for u in the subfield, as an integer in [0, p)."""
    total, y = 0, u
    for _ in range(s):
        total = F.add(total, y)
        y = F.power(y, F.p)
    if total >= F.p:
        raise AssertionError("subfield trace left the prime field")
    return total


def quadratic_gauss_pair(F: FiniteField) -> tuple[complex, complex]:
    """``(G(psi, rho)^2, rho(-1) q)`` for the order-2 character ``rho`` (p odd)."""
    if F.p == 2:
        raise ValueError("the quadratic character needs p odd")
    n = F.q - 1
    g = gauss_sum_float(F, n // 2)
    minus_one = F.neg(1)
    rho = (-1) ** int(F.log_table[minus_one])
    return g * g, complex(rho * F.q)
