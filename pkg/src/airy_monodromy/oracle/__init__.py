"""Brute-force exponential sums over small finite fields, used as ground truth."""

from .cyclotomic import CyclotomicInteger, divide_by_lambda, lambda_valuation
from .field import FiniteField, build_field
from .sums import (
    DivisibilityReport,
    all_exp_sums,
    character_lemma_check,
    check_divisibility_all_t,
    exp_sum,
    fourth_moment_check,
    gauss_sum_float,
    hasse_davenport_pair,
    normalized_fourth_moment,
    quadratic_gauss_pair,
)

__all__ = [
    "CyclotomicInteger",
    "DivisibilityReport",
    "FiniteField",
    "all_exp_sums",
    "build_field",
    "character_lemma_check",
    "check_divisibility_all_t",
    "divide_by_lambda",
    "exp_sum",
    "fourth_moment_check",
    "gauss_sum_float",
    "hasse_davenport_pair",
    "lambda_valuation",
    "normalized_fourth_moment",
    "quadratic_gauss_pair",
]
