import random
from fractions import Fraction

import pytest

from airy_monodromy.certifier import (
    FiniteCertificate,
    certify,
    f_left_limit,
    f_value,
    find_certificate,
)
from airy_monodromy.criterion import check_level
from oracles import f_exact, f_left_limit_exact


@pytest.mark.parametrize(
    "a, den, p, d, r, expected",
    [(1, 5, 2, 5, 4, Fraction(2)), (1, 5, 2, 5, 1, Fraction(1, 5)), (1, 2, 3, 4, 1, Fraction(1, 2))],
)
def test_f_value_examples(a, den, p, d, r, expected):
    assert f_value(a, den, p, d, r).to_fraction() == expected
    assert f_exact(Fraction(a, den), p, d, r) == expected


@pytest.mark.parametrize(
    "a, den, p, d, r, expected",
    [(1, 40, 2, 5, 4, Fraction(5, 2)), (8, 40, 2, 5, 4, Fraction(2)), (1, 1, 2, 3, 1, Fraction(1))],
)
def test_left_limit_examples(a, den, p, d, r, expected):
    assert f_left_limit(a, den, p, d, r).to_fraction() == expected
    assert f_left_limit_exact(Fraction(a, den), p, d, r) == expected


@pytest.mark.parametrize("p, d, r", [(2, 3, 3), (2, 5, 4), (2, 7, 3), (3, 4, 3), (3, 5, 2), (5, 3, 2), (2, 9, 5)])
def test_left_limit_matches_exact_oracle(p, d, r):
    den = p ** (r - 1) * d
    for a in range(1, den + 1):
        assert f_left_limit(a, den, p, d, r).to_fraction() == f_left_limit_exact(Fraction(a, den), p, d, r)
        if a < den:
            v = f_value(a, den, p, d, r)
            assert v.to_fraction() == f_exact(Fraction(a, den), p, d, r)
            # the first group jumps down at its integers; the second group is left-continuous
            assert f_left_limit(a, den, p, d, r).to_fraction() >= v.to_fraction()


@pytest.mark.parametrize("a, den", [(0, 5), (5, 5), (1, 7)])
def test_f_value_rejects(a, den):
    with pytest.raises(ValueError):
        f_value(a, den, 2, 5, 4)


def test_comparison_is_integral():
    v = f_value(1, 5, 2, 5, 4)
    assert v.at_least_half_of(4) and not v.at_least_half_of(5)


def test_certify_examples():
    assert certify(2, 5, 4) == FiniteCertificate(4, 4, 40)
    assert certify(2, 5, 1) is None
    assert all(certify(2, 7, r0) is None for r0 in range(1, 9))


@pytest.mark.parametrize("p, d, r0_max, expected", [(2, 5, 6, 4), (2, 3, 6, 2), (2, 7, 6, None)])
def test_find_certificate_examples(p, d, r0_max, expected):
    cert = find_certificate(p, d, r0_max)
    assert (cert.r0 if cert else None) == expected


def _brute_certify(p, d, r0):
    half = Fraction(r0, 2)
    if any(f_exact(Fraction(a, d), p, d, r0) < half for a in range(1, d)):
        return False
    den = p ** (r0 - 1) * d
    return all(f_left_limit_exact(Fraction(a, den), p, d, r0) >= half for a in range(1, den + 1))


@pytest.mark.parametrize("p, d", [(2, 3), (2, 5), (2, 7), (2, 9), (3, 4), (3, 5), (5, 3), (5, 6)])
def test_certify_matches_rational_oracle(p, d):
    for r0 in range(1, 5 if p == 2 else 3):
        assert (certify(p, d, r0) is not None) == _brute_certify(p, d, r0)


def test_condition_one_second_sum_vanishes():
    for p, d, r in [(2, 5, 4), (3, 7, 3), (5, 4, 2)]:
        for a in range(1, d):
            assert sum(-d * p**i * Fraction(a, d) % 1 for i in range(r)) == 0


@pytest.mark.parametrize("p, d", [(2, 3), (2, 5), (2, 9), (3, 4), (5, 6), (3, 10)])
def test_certificate_soundness_against_scanner(p, d):
    cert = find_certificate(p, d, 6)
    assert cert is not None
    r = cert.r0
    while p**r - 1 <= 2**20:
        assert check_level(p, d, r) is None
        r += cert.r0


@pytest.mark.parametrize("p, d, r0, k", [(2, 5, 2, 2), (2, 7, 2, 3), (3, 4, 1, 3), (2, 3, 3, 2), (5, 3, 1, 2)])
def test_level_composition_additivity(p, d, r0, k):
    r = r0 * k
    den = p ** (r - 1) * d
    rng = random.Random(p * 1000 + d * 10 + r0)
    for a in rng.sample(range(1, den), min(200, den - 1)):
        x = Fraction(a, den)
        parts = sum(f_exact(p ** (j * r0) * x % 1, p, d, r0) for j in range(k))
        assert f_value(a, den, p, d, r).to_fraction() == parts
