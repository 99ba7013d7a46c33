"""Command-line front end.

Exit codes: 0 resolved / passed, 1 usage or arithmetic error, 2 unknown,
failed check, or disagreement.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from pathlib import Path

from . import classifier, documents
from .classifier import UNKNOWN, Limits
from .digits import is_prime
from .documents import ResultDocument, SchemaError
from .oracle import (
    build_field,
    character_lemma_check,
    check_divisibility_all_t,
    fourth_moment_check,
    gauss_sum_float,
    hasse_davenport_pair,
    normalized_fourth_moment,
    quadratic_gauss_pair,
)
from .oracle.sums import float_tolerance

EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2


class UsageError(Exception):
    pass


def _threads(args) -> int:
    if args.threads is not None:
        return max(1, args.threads)
    env = os.environ.get("AIRY_THREADS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise UsageError(f"AIRY_THREADS={env!r} is not an integer") from None
    return 1


def _validate(p: int, d: int | None = None) -> None:
    if not is_prime(p):
        raise UsageError(f"p={p} is not prime")
    if d is not None:
        if d < 3:
            raise UsageError(f"d={d} must be >= 3")
        if math.gcd(d, p) != 1:
            raise UsageError(f"gcd(d, p) = gcd({d}, {p}) != 1")


def _limits(args) -> Limits:
    base = Limits.default(args.p)
    return Limits(
        args.r_max if args.r_max is not None else base.r_max,
        args.r0_max if args.r0_max is not None else base.r0_max,
    )


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _render(doc: ResultDocument, fmt: str) -> str:
    if fmt == "json":
        return documents.dumps(doc)
    if fmt == "csv":
        return documents.to_csv(doc.results)
    return documents.to_text(doc)


def cmd_classify(args) -> int:
    _validate(args.p, args.d)
    limits = _limits(args)
    c = classifier.classify(args.p, args.d, limits)
    command = f"classify --p {args.p} --d {args.d} --r-max {limits.r_max} --r0-max {limits.r0_max}"
    _emit(_render(ResultDocument(command, [c]), args.format), args.out)
    return EXIT_FAIL if c.verdict == UNKNOWN else EXIT_OK


def cmd_scan(args) -> int:
    _validate(args.p)
    if args.d_min < 3:
        raise UsageError(f"--d-min {args.d_min} must be >= 3")
    if args.d_max < args.d_min:
        raise UsageError("--d-max must be >= --d-min")
    limits = _limits(args)
    known = {}
    if args.resume and Path(args.resume).exists():
        previous = documents.loads(Path(args.resume).read_text())
        known = {c.d: c for c in previous.results if c.p == args.p and c.verdict != UNKNOWN}
    scan = classifier.scan_range(args.p, args.d_min, args.d_max, limits, _threads(args), known)
    command = (
        f"scan --p {args.p} --d-min {args.d_min} --d-max {args.d_max} "
        f"--r-max {limits.r_max} --r0-max {limits.r0_max}"
    )
    doc = ResultDocument(command, scan.results, scan.skipped, scan.report)
    _emit(_render(doc, args.format), args.out)
    if args.resume:
        Path(args.resume).write_text(documents.dumps(doc))
    rep = scan.report
    if rep is not None and rep.disagree:
        print(f"DISAGREEMENT with the conjectured finite list at d = {rep.disagree}", file=sys.stderr)
    bad = doc.summary[UNKNOWN] > 0 or (rep is not None and bool(rep.disagree))
    return EXIT_FAIL if bad else EXIT_OK


def _gauss_checks(F) -> list[str]:
    failures = []
    tol = 1e-6
    for k in range(1, F.q - 1):
        g = gauss_sum_float(F, k)
        if abs(abs(g) ** 2 - F.q) > tol:
            failures.append(f"|G(chi^{k})|^2 = {abs(g) ** 2:.9f} != {F.q}")
    if F.p != 2:
        sq, expected = quadratic_gauss_pair(F)
        if abs(sq - expected) > tol:
            failures.append(f"G(rho)^2 = {sq} != {expected}")
    for s in range(1, F.r):
        if F.r % s == 0 and F.p**s > 2:
            for k in range(1, F.p**s - 1):
                big, small = hasse_davenport_pair(F, s, k)
                if abs(big - small) > tol:
                    failures.append(f"Hasse-Davenport over F_{F.p}^{s}, chi^{k}: {big} != {small}")
    return failures


def cmd_oracle(args) -> int:
    _validate(args.p, args.d)
    if args.r < 1:
        raise UsageError("--r must be >= 1")
    try:
        F = build_field(args.p, args.r)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    report = check_divisibility_all_t(F, args.d)
    out = [f"field F_{args.p}^{args.r} modulus {list(F.modulus)} generator {F.generator}"]
    out.append(f"threshold: v_lambda(S(t)) >= r(p-1)/2 = {report.threshold:g}")
    out.append("t\tv_lambda\tstatus")
    for t, v in report.valuations.items():
        status = "FAIL" if t in report.failures else "ok"
        out.append(f"{t}\t{v}\t{status}")
    ok = report.passed
    if ok:
        out.append(f"PASS: all {F.q} sums divisible by p^(r/2)")
    else:
        t0 = report.failures[0]
        out.append(f"FAIL at t={t0} (v={report.valuations[t0]} < {report.threshold:g})")
    if args.fourth_moment:
        if args.p != 2:
            raise UsageError("--fourth-moment needs p = 2")
        lhs, rhs, equal = fourth_moment_check(F, args.d)
        out.append(f"fourth moment: lhs={lhs} rhs={rhs} {'identity holds' if equal else 'MISMATCH'}")
        out.append(f"normalized fourth moment: {normalized_fourth_moment(F, args.d):.6f}")
        ok = ok and equal
    if args.gauss_checks:
        failures = _gauss_checks(F)
        if F.q - 1 > 1:
            z = F.generator
            lhs, rhs, equal = character_lemma_check(F, args.d, z, 1 % (F.q - 1))
            if not equal:
                failures.append(f"character lemma at z={z}: {lhs} != {rhs} (tol {float_tolerance(F)})")
        out.extend(failures or ["gauss checks: all pass"])
        ok = ok and not failures
    _emit("\n".join(out) + "\n", args.out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_verify(args) -> int:
    doc = documents.loads(Path(args.input).read_text())
    failures = documents.verify_document(doc)
    for p, d, reason in failures:
        print(f"REPLAY FAILED p={p} d={d}: {reason}")
    s = doc.summary
    print(f"verified {len(doc.results) - len(failures)}/{len(doc.results)} entries "
          f"(finite={s['finite']} infinite={s['infinite']} unknown={s['unknown']})")
    return EXIT_FAIL if failures else EXIT_OK


def _common(sub):
    sub.add_argument("--r-max", type=int, default=None, help="deepest level for the witness search")
    sub.add_argument("--r0-max", type=int, default=None, help="deepest level for certification")
    sub.add_argument("--threads", type=int, default=None, help="worker processes (default: $AIRY_THREADS or 1)")
    sub.add_argument("--format", choices=["json", "csv", "text"], default="json")
    sub.add_argument("--out", default=None, help="write to this file instead of stdout")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="airy-monodromy",
        description="Finite vs infinite monodromy of the exponential sums t -> sum_x psi(x^d + t x).",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    c = subs.add_parser("classify", help="classify a single (p, d)")
    c.add_argument("--p", type=int, required=True)
    c.add_argument("--d", type=int, required=True)
    _common(c)
    c.set_defaults(func=cmd_classify)

    s = subs.add_parser("scan", help="classify a range of d")
    s.add_argument("--p", type=int, required=True)
    s.add_argument("--d-min", type=int, required=True)
    s.add_argument("--d-max", type=int, required=True)
    s.add_argument("--resume", default=None, help="result document to merge and update")
    _common(s)
    s.set_defaults(func=cmd_scan)

    o = subs.add_parser("oracle", help="brute-force divisibility of the sums over F_{p^r}")
    o.add_argument("--p", type=int, required=True)
    o.add_argument("--r", type=int, required=True)
    o.add_argument("--d", type=int, required=True)
    o.add_argument("--fourth-moment", action="store_true")
    o.add_argument("--gauss-checks", action="store_true")
    o.add_argument("--out", default=None)
    o.set_defaults(func=cmd_oracle)

    v = subs.add_parser("verify", help="replay every witness and certificate in a result document")
    v.add_argument("--in", dest="input", required=True)
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, SchemaError, ValueError, OverflowError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
