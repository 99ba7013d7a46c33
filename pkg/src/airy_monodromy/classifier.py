"""Decide finite / infinite monodromy for ``(p, d)`` and attach the evidence.

Pipeline: family recognizer, large-p shortcut, witness search, finiteness
certification, and otherwise an explicit Unknown carrying the limits searched.
"""

from __future__ import annotations

import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Union

from . import certifier, criterion, families
from .certifier import FiniteCertificate
from .criterion import Witness, check_args
from .families import FamilyTag

FINITE = "finite"
INFINITE = "infinite"
UNKNOWN = "unknown"


@dataclass(frozen=True)
class Limits:
    r_max: int
    r0_max: int

    @classmethod
    def default(cls, p: int) -> Limits:
        return cls(criterion.default_r_max(p), certifier.default_r0_max(p))


@dataclass(frozen=True)
class FiniteByFamily:
    tag: FamilyTag
    kind: str = "family"


@dataclass(frozen=True)
class FiniteCertified:
    certificate: FiniteCertificate
    kind: str = "certified"


@dataclass(frozen=True)
class InfiniteWitness:
    witness: Witness
    kind: str = "witness"


@dataclass(frozen=True)
class Unknown:
    limits: Limits
    kind: str = "unknown"


Certificate = Union[FiniteByFamily, FiniteCertified, InfiniteWitness, Unknown]


@dataclass(frozen=True)
class Classification:
    p: int
    d: int
    verdict: str
    certificate: Certificate
    group: str | None
    limits: Limits
    elapsed: float = field(default=0.0, compare=False)

    def __post_init__(self):
        finite = isinstance(self.certificate, (FiniteByFamily, FiniteCertified))
        infinite = isinstance(self.certificate, InfiniteWitness)
        if (self.verdict == FINITE) != finite or (self.verdict == INFINITE) != infinite:
            raise ValueError(f"verdict {self.verdict!r} does not match {self.certificate.kind}")
        if infinite != (self.group is not None):
            raise ValueError("a group is attached exactly to infinite verdicts")


def monodromy_group(p: int, d: int) -> str:
    if p == 2 or d % 2 == 1:
        return f"Sp({d - 1})"
    return f"SL({d - 1})"


def classify(p: int, d: int, limits: Limits | None = None) -> Classification:
    check_args(p, d)
    if limits is None:
        limits = Limits.default(p)
    start = time.perf_counter()

    def done(verdict, cert):
        group = monodromy_group(p, d) if verdict == INFINITE else None
        return Classification(p, d, verdict, cert, group, limits, time.perf_counter() - start)

    tag = families.recognize(p, d)
    if tag is not None:
        return done(FINITE, FiniteByFamily(tag))
    if families.large_p_witness(p, d) is not None:
        # report the canonical (minimal x) level-1 witness
        return done(INFINITE, InfiniteWitness(criterion.check_level(p, d, 1)))
    w = criterion.find_witness(p, d, limits.r_max)
    if w is not None:
        return done(INFINITE, InfiniteWitness(w))
    cert = certifier.find_certificate(p, d, limits.r0_max)
    if cert is not None:
        return done(FINITE, FiniteCertified(cert))
    return done(UNKNOWN, Unknown(limits))


@dataclass
class ConjectureReport:
    """Scan verdicts against the conjectured list of finite exponents for p = 2."""

    conjectured: list[int]
    agree: list[int] = field(default_factory=list)
    disagree: list[int] = field(default_factory=list)
    unresolved: list[int] = field(default_factory=list)
    certified_off_family: list[int] = field(default_factory=list)


@dataclass
class ScanResult:
    p: int
    d_min: int
    d_max: int
    limits: Limits
    results: list[Classification]
    skipped: list[int]
    report: ConjectureReport | None = None


def _classify_star(args):
    return classify(*args)


def compare_with_conjecture(
    results: list[Classification], d_min: int, d_max: int
) -> ConjectureReport:
    conj = families.enumerate_conjectured_finite(2, d_max)
    listed = set(conj)
    report = ConjectureReport(conjectured=[d for d in conj if d >= d_min])
    for c in results:
        if c.verdict == UNKNOWN:
            report.unresolved.append(c.d)
            continue
        if isinstance(c.certificate, FiniteCertified):
            report.certified_off_family.append(c.d)
        if (c.verdict == FINITE) == (c.d in listed):
            report.agree.append(c.d)
        else:
            report.disagree.append(c.d)
    return report


def scan_range(
    p: int,
    d_min: int,
    d_max: int,
    limits: Limits | None = None,
    workers: int = 1,
    known: dict[int, Classification] | None = None,
) -> ScanResult:
    """Classify every admissible d in ``[d_min, d_max]``; ``known`` results are reused."""
    if d_min < 3:
        raise ValueError(f"d_min={d_min} must be >= 3")
    if limits is None:
        limits = Limits.default(p)
    known = known or {}
    admissible = [d for d in range(d_min, d_max + 1) if math.gcd(d, p) == 1]
    skipped = [d for d in range(d_min, d_max + 1) if math.gcd(d, p) != 1]
    todo = [d for d in admissible if d not in known]
    jobs = [(p, d, limits) for d in todo]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            fresh = list(pool.map(_classify_star, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    else:
        fresh = [classify(*job) for job in jobs]
    by_d = {c.d: c for c in fresh}
    by_d.update({d: known[d] for d in admissible if d in known})
    results = [by_d[d] for d in admissible]
    report = compare_with_conjecture(results, d_min, d_max) if p == 2 else None
    return ScanResult(p, d_min, d_max, limits, results, skipped, report)
