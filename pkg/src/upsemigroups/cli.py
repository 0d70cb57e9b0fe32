"""Command-line front end.

Exit codes: 0 all checks pass, 1 a law is violated, 2 bad input or usage.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .core import (
    CheckReport,
    ClassLabel,
    DomainError,
    SemigroupOp,
    UpAlgebra,
    check_associativity,
    check_up_axioms,
    classify,
    distributivity_profile,
    sorted_labels,
)
from .enumeration import MAX_SEARCH_ORDER, SearchConfig, enumerate_up_algebras, enumerate_up_semigroups, summarize
from .fileformat import AlgebraFile, ParseError, format_algebra_file, read_algebra_file
from .powerset import (
    MAX_UNIVERSE,
    OpKind,
    SEMIGROUP_KINDS,
    Universe,
    build_power_semigroup,
    build_power_up_algebra,
    verify_identity_suite,
)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


@dataclass
class Report:
    """Machine-readable command result; ``to_dict``/``from_dict`` round-trip."""

    command: list[str]
    verdict: str = "pass"
    checks: dict[str, CheckReport] = field(default_factory=dict)
    profile: dict[str, bool] | None = None
    labels: list[str] | None = None
    counts: dict[str, Any] | None = None
    structures: list[dict] | None = None
    error: str | None = None
    timing_s: float = 0.0

    def to_dict(self) -> dict:
        return {
            "command": self.command,
            "verdict": self.verdict,
            "checks": {k: v.to_dict() for k, v in self.checks.items()},
            "profile": self.profile,
            "labels": self.labels,
            "counts": self.counts,
            "structures": self.structures,
            "error": self.error,
            "timing_s": self.timing_s,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "Report":
        return cls(
            command=d["command"],
            verdict=d["verdict"],
            checks={k: CheckReport.from_dict(v) for k, v in d["checks"].items()},
            profile=d["profile"],
            labels=d["labels"],
            counts=d["counts"],
            structures=d["structures"],
            error=d["error"],
            timing_s=d["timing_s"],
        )


def _print_check(name: str, report: CheckReport, out):
    status = "ok" if report.passed else "FAIL"
    print(f"{name}: {status}", file=out)
    for w in report.witnesses:
        elems = ", ".join(map(str, w.elements))
        print(f"  {w.law} violated at ({elems}): {w.lhs} != {w.rhs}", file=out)


def _emit(report: Report, as_json: bool, out) -> int:
    code = EXIT_OK if report.verdict == "pass" else (
        EXIT_USAGE if report.verdict == "error" else EXIT_VIOLATION)
    if as_json:
        json.dump(report.to_dict(), out, indent=2)
        out.write("\n")
        return code
    if report.error:
        print(f"error: {report.error}", file=sys.stderr)
    for name, chk in report.checks.items():
        _print_check(name, chk, out)
    if report.profile is not None:
        flags = " ".join(f"{k}={'T' if v else 'F'}" for k, v in report.profile.items())
        print(f"profile: {flags}", file=out)
    if report.labels is not None:
        print(f"labels: {' '.join(report.labels) if report.labels else '(none)'}", file=out)
    if report.counts is not None:
        for k, v in report.counts.items():
            if isinstance(v, dict):
                print(f"{k}: " + " ".join(f"{kk}={vv}" for kk, vv in v.items()), file=out)
            else:
                print(f"{k}: {v}", file=out)
    for s in report.structures or []:
        print("---", file=out)
        print("dot:", file=out)
        for row in s["dot"]:
            print("  " + " ".join(map(str, row)), file=out)
        if "star" in s:
            print("star:", file=out)
            for row in s["star"]:
                print("  " + " ".join(map(str, row)), file=out)
            print(f"labels: {' '.join(s['labels'])}", file=out)
    if report.verdict != "error":
        print(f"verdict: {report.verdict}", file=out)
    return code


def _load(path: str, report: Report) -> AlgebraFile | None:
    try:
        return read_algebra_file(path)
    except (OSError, ParseError, DomainError) as exc:
        report.verdict = "error"
        report.error = str(exc)
        return None


def _check_pair(af: AlgebraFile, report: Report):
    report.checks["up-axioms"] = check_up_axioms(af.dot, af.zero)
    if af.star is not None:
        report.checks["associativity"] = check_associativity(af.star)
    if not all(c.passed for c in report.checks.values()):
        report.verdict = "fail"


def cmd_check(args, report: Report):
    af = _load(args.file, report)
    if af is not None:
        _check_pair(af, report)


def classify_file(af: AlgebraFile, report: Report):
    _check_pair(af, report)
    if report.verdict != "pass":
        return
    dot = UpAlgebra(af.dot, af.zero)
    star = SemigroupOp(af.star)
    profile = distributivity_profile(dot, star)
    report.profile = profile.to_dict()
    report.labels = [label.value for label in sorted_labels(classify(profile))]


def cmd_classify(args, report: Report):
    af = _load(args.file, report)
    if af is None:
        return
    if af.star is None:
        report.verdict = "error"
        report.error = f"{args.file}: classify needs a 'star:' section"
        return
    classify_file(af, report)


def cmd_enumerate(args, report: Report):
    if not 1 <= args.order <= MAX_SEARCH_ORDER:
        report.verdict = "error"
        report.error = f"--order must be in 1..{MAX_SEARCH_ORDER}"
        return
    label = ClassLabel.parse(args.class_code) if args.class_code else None
    cfg = SearchConfig(args.order, args.up_to_iso, label, args.limit)
    summary = summarize(cfg).to_dict()
    counts = {k: v for k, v in summary.items() if k != "order" and k != "up_to_iso"}
    counts = {"order": args.order, "up_to_iso": args.up_to_iso, **counts}
    if label is not None:
        counts["class_filter"] = label.value
        counts["matching_pairs"] = summary["label_counts"][label.value]
    report.counts = counts
    if args.limit is not None:
        report.structures = []
        if args.algebras_only:
            for alg in enumerate_up_algebras(cfg):
                report.structures.append({"dot": alg.table.rows()})
        else:
            for alg, star, labels in enumerate_up_semigroups(cfg):
                report.structures.append({
                    "dot": alg.table.rows(),
                    "star": star.table.rows(),
                    "labels": [l.value for l in sorted_labels(labels)],
                })


def cmd_powerset(args, report: Report):
    u = Universe(args.universe)
    if args.verify_identities:
        suite = verify_identity_suite(u)
        report.checks["identities"] = suite
        passed = sum(suite.results.values())
        report.counts = {"universe": u.size, "identities_passed": passed,
                         "identities_total": len(suite.laws)}
        if not suite.passed:
            report.verdict = "fail"
        return
    if args.type is None or args.kind is None:
        report.verdict = "error"
        report.error = "--classify and --export need --type and --kind"
        return
    kind = OpKind(args.kind)
    dot = build_power_up_algebra(u, args.type)
    star = build_power_semigroup(u, kind)
    af = AlgebraFile(u.order, dot.zero, dot.table, star.table)
    if args.classify:
        classify_file(af, report)
        return
    comment = (f"power-set model: universe size {u.size}, UP-algebra type {args.type}, "
               f"semigroup {kind.value}")
    Path(args.export).write_text(format_algebra_file(af, comment))
    report.counts = {"universe": u.size, "order": u.order, "exported": str(args.export)}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="upsemigroups",
        description="Check, classify and enumerate UP-algebras paired with semigroups.",
    )
    sub = p.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="check the UP axioms (and associativity of star)")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_check)

    c = sub.add_parser("classify", help="distributivity profile and class labels")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_classify)

    c = sub.add_parser("enumerate", help="exhaustive enumeration of a given order")
    c.add_argument("--order", type=int, required=True)
    c.add_argument("--up-to-iso", action="store_true")
    c.add_argument("--class", dest="class_code", choices=[l.value for l in ClassLabel])
    c.add_argument("--limit", type=int, help="also list up to this many structures")
    c.add_argument("--algebras-only", action="store_true",
                   help="list UP-algebras instead of pairs (with --limit)")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("powerset", help="power-set models over a universe of size M")
    c.add_argument("--universe", type=int, required=True, choices=range(MAX_UNIVERSE + 1),
                   metavar=f"{{0..{MAX_UNIVERSE}}}")
    action = c.add_mutually_exclusive_group(required=True)
    action.add_argument("--verify-identities", action="store_true")
    action.add_argument("--classify", action="store_true")
    action.add_argument("--export", metavar="PATH")
    c.add_argument("--type", type=int, choices=(1, 2))
    c.add_argument("--kind", choices=[k.value for k in SEMIGROUP_KINDS])
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_powerset)
    return p


def main(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    report = Report(command=argv)
    start = time.perf_counter()
    try:
        args.func(args, report)
    except DomainError as exc:
        report.verdict = "error"
        report.error = str(exc)
    report.timing_s = round(time.perf_counter() - start, 6)
    return _emit(report, args.json, out)

