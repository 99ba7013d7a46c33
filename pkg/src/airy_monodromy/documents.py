"""JSON and CSV encodings of classification results, and replay verification."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any

from . import certifier
from .certifier import FiniteCertificate
from .classifier import (
    FINITE,
    INFINITE,
    UNKNOWN,
    Classification,
    ConjectureReport,
    FiniteByFamily,
    FiniteCertified,
    InfiniteWitness,
    Limits,
    Unknown,
    monodromy_group,
)
from .criterion import Witness
from .digits import DigitContext, digit_sum
from .families import FamilyTag

SCHEMA_VERSION = "1"
CSV_HEADER = ["p", "d", "verdict", "cert_kind", "r", "x", "r0", "group"]


class SchemaError(ValueError):
    pass


@dataclass
class ResultDocument:
    command: str
    results: list[Classification]
    skipped: list[int] = field(default_factory=list)
    conjecture_report: ConjectureReport | None = None
    schema_version: str = SCHEMA_VERSION

    @property
    def summary(self) -> dict[str, int]:
        counts = {FINITE: 0, INFINITE: 0, UNKNOWN: 0}
        for c in self.results:
            counts[c.verdict] += 1
        return counts


# -- JSON -------------------------------------------------------------------


def certificate_to_dict(cert) -> dict[str, Any]:
    if isinstance(cert, FiniteByFamily):
        t = cert.tag
        return {"kind": cert.kind, "family": t.kind, "a": t.a, "b": t.b, "c": t.c}
    if isinstance(cert, FiniteCertified):
        c = cert.certificate
        return {"kind": cert.kind, "r0": c.r0, "value_points": c.value_points, "limit_points": c.limit_points}
    if isinstance(cert, InfiniteWitness):
        w = cert.witness
        return {"kind": cert.kind, "r": w.r, "x": w.x, "lhs": w.lhs, "rhs_digit": w.rhs_digit}
    return {"kind": cert.kind, "r_max": cert.limits.r_max, "r0_max": cert.limits.r0_max}


def certificate_from_dict(data: dict[str, Any]):
    kind = data["kind"]
    if kind == "family":
        return FiniteByFamily(FamilyTag(data["family"], data["a"], data.get("b"), data.get("c")))
    if kind == "certified":
        return FiniteCertified(FiniteCertificate(data["r0"], data["value_points"], data["limit_points"]))
    if kind == "witness":
        return InfiniteWitness(Witness(data["r"], data["x"], data["lhs"], data["rhs_digit"]))
    if kind == "unknown":
        return Unknown(Limits(data["r_max"], data["r0_max"]))
    raise SchemaError(f"unknown certificate kind {kind!r}")


def classification_to_dict(c: Classification) -> dict[str, Any]:
    return {
        "p": c.p,
        "d": c.d,
        "verdict": c.verdict,
        "certificate": certificate_to_dict(c.certificate),
        "group": c.group,
        "limits": {"r_max": c.limits.r_max, "r0_max": c.limits.r0_max},
        "elapsed": c.elapsed,
    }


def classification_from_dict(data: dict[str, Any]) -> Classification:
    lim = data["limits"]
    return Classification(
        p=data["p"],
        d=data["d"],
        verdict=data["verdict"],
        certificate=certificate_from_dict(data["certificate"]),
        group=data["group"],
        limits=Limits(lim["r_max"], lim["r0_max"]),
        elapsed=data.get("elapsed", 0.0),
    )


def document_to_dict(doc: ResultDocument) -> dict[str, Any]:
    rep = doc.conjecture_report
    return {
        "schema_version": doc.schema_version,
        "command": doc.command,
        "results": [classification_to_dict(c) for c in doc.results],
        "skipped": list(doc.skipped),
        "summary": doc.summary,
        "conjecture_report": None
        if rep is None
        else {
            "label": "conjectural",
            "conjectured": rep.conjectured,
            "agree": rep.agree,
            "disagree": rep.disagree,
            "unresolved": rep.unresolved,
            "certified_off_family": rep.certified_off_family,
        },
    }


def document_from_dict(data: dict[str, Any]) -> ResultDocument:
    version = data.get("schema_version")
    if version != SCHEMA_VERSION:
        raise SchemaError(f"unsupported schema_version {version!r}")
    try:
        rep = data.get("conjecture_report")
        report = None
        if rep is not None:
            report = ConjectureReport(
                rep["conjectured"], rep["agree"], rep["disagree"], rep["unresolved"], rep["certified_off_family"]
            )
        return ResultDocument(
            command=data["command"],
            results=[classification_from_dict(r) for r in data["results"]],
            skipped=list(data.get("skipped", [])),
            conjecture_report=report,
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SchemaError(f"malformed result document: {exc}") from exc


def dumps(doc: ResultDocument, drop_elapsed: bool = False) -> str:
    data = document_to_dict(doc)
    if drop_elapsed:
        for r in data["results"]:
            r.pop("elapsed")
    return json.dumps(data, indent=2, sort_keys=True) + "\n"


def loads(text: str) -> ResultDocument:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SchemaError(f"not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise SchemaError("result document must be a JSON object")
    return document_from_dict(data)


# -- CSV / text -------------------------------------------------------------


def csv_row(c: Classification) -> dict[str, Any]:
    cert = c.certificate
    row = dict.fromkeys(CSV_HEADER, "")
    row.update(p=c.p, d=c.d, verdict=c.verdict, cert_kind=cert.kind, group=c.group or "")
    if isinstance(cert, InfiniteWitness):
        row.update(r=cert.witness.r, x=cert.witness.x)
    elif isinstance(cert, FiniteCertified):
        row.update(r0=cert.certificate.r0)
    return row


def to_csv(results: list[Classification]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_HEADER, lineterminator="\n")
    writer.writeheader()
    for c in results:
        writer.writerow(csv_row(c))
    return buf.getvalue()


def describe(c: Classification) -> str:
    cert = c.certificate
    head = f"p={c.p} d={c.d}: {c.verdict.upper()}"
    if isinstance(cert, FiniteByFamily):
        return f"{head} (family d = {cert.tag.describe(c.p)})"
    if isinstance(cert, FiniteCertified):
        return f"{head} (certified at r0={cert.certificate.r0})"
    if isinstance(cert, InfiniteWitness):
        w = cert.witness
        return f"{head} (witness r={w.r} x={w.x}: [dx]={w.lhs} > [x]+r(p-1)/2={w.rhs_digit}+{w.r * (c.p - 1)}/2), group {c.group}"
    return f"{head} (searched r_max={cert.limits.r_max}, r0_max={cert.limits.r0_max})"


def to_text(doc: ResultDocument) -> str:
    lines = [describe(c) for c in doc.results]
    s = doc.summary
    lines.append(f"summary: finite={s[FINITE]} infinite={s[INFINITE]} unknown={s[UNKNOWN]}")
    if doc.skipped:
        lines.append("skipped (gcd(d, p) != 1): " + " ".join(map(str, doc.skipped)))
    rep = doc.conjecture_report
    if rep is not None:
        lines.append("conjectured finite (p=2): " + " ".join(map(str, rep.conjectured)))
        if rep.disagree:
            lines.append("!!! DISAGREEMENT with the conjectured list: " + " ".join(map(str, rep.disagree)))
        if rep.unresolved:
            lines.append("unresolved: " + " ".join(map(str, rep.unresolved)))
        if rep.certified_off_family:
            lines.append("certified finite outside the families: " + " ".join(map(str, rep.certified_off_family)))
    return "\n".join(lines) + "\n"


# -- replay -----------------------------------------------------------------


def replay(c: Classification) -> str | None:
    """Recompute the evidence in ``c``; returns a reason on failure."""
    cert = c.certificate
    if isinstance(cert, InfiniteWitness):
        w = cert.witness
        try:
            ctx = DigitContext(c.p, w.r)
        except (ValueError, OverflowError) as exc:
            return str(exc)
        if not 1 <= w.x <= ctx.m - 1:
            return f"witness x={w.x} outside [1, p^r - 2]"
        lhs, rhs = digit_sum(c.d * w.x, ctx), digit_sum(w.x, ctx)
        if (lhs, rhs) != (w.lhs, w.rhs_digit):
            return f"digit sums recompute to ({lhs}, {rhs}), document has ({w.lhs}, {w.rhs_digit})"
        if not 2 * lhs > 2 * rhs + ctx.max_digit_sum:
            return "witness does not violate the inequality"
        if c.group != monodromy_group(c.p, c.d):
            return f"group {c.group} should be {monodromy_group(c.p, c.d)}"
    elif isinstance(cert, FiniteByFamily):
        if not cert.tag.check(c.p, c.d):
            return f"family tag {cert.tag} does not match d={c.d}"
    elif isinstance(cert, FiniteCertified):
        again = certifier.certify(c.p, c.d, cert.certificate.r0)
        if again != cert.certificate:
            return f"certificate at r0={cert.certificate.r0} does not replay"
    return None


def verify_document(doc: ResultDocument) -> list[tuple[int, int, str]]:
    failures = []
    for c in doc.results:
        reason = replay(c)
        if reason is not None:
            failures.append((c.p, c.d, reason))
    return failures
