"""Finite vs infinite geometric monodromy for the exponential sums
``t -> sum_x psi(x^d + t x)`` over F_p, decided through base-p digit sums."""

from .certifier import FiniteCertificate, certify, find_certificate
from .classifier import Classification, Limits, classify, monodromy_group, scan_range
from .criterion import Witness, check_level, find_witness
from .digits import DigitContext, digit_sum, digit_sum_via_fractions, reduce
from .families import FamilyTag, enumerate_conjectured_finite, large_p_witness, lucas_witness, recognize

__version__ = "0.1.0"

__all__ = [
    "Classification",
    "DigitContext",
    "FamilyTag",
    "FiniteCertificate",
    "Limits",
    "Witness",
    "certify",
    "check_level",
    "classify",
    "digit_sum",
    "digit_sum_via_fractions",
    "enumerate_conjectured_finite",
    "find_certificate",
    "find_witness",
    "large_p_witness",
    "lucas_witness",
    "monodromy_group",
    "recognize",
    "reduce",
    "scan_range",
]
