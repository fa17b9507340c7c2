"""Text and JSON renderings of verification reports."""

from __future__ import annotations

import json

from .verify import VerificationReport


def report_to_dict(report: VerificationReport) -> dict:
    return {
        "schema": report.schema,
        "sampler": report.sampler,
        "samples": report.samples,
        "passes": report.passes,
        "failures": report.failures,
        "precondition_failures": report.precondition_failures,
        "branches": dict(report.branches),
        "both": report.both,
        "neither": report.neither,
        "counterexamples": [
            {
                "index": cx.index,
                "reason": cx.reason,
                "valuation": dict(sorted(cx.valuation.items())),
                "config": cx.config,
            }
            for cx in report.counterexamples
        ],
        "seed": report.seed,
    }


def _text(report: VerificationReport) -> str:
    lines = [
        f"schema: {report.schema}",
        f"sampler: {report.sampler}",
        f"seed: {report.seed}",
        f"samples: {report.samples}",
        f"passes: {report.passes}/{report.samples}",
        f"failures: {report.failures}",
        f"precondition failures: {report.precondition_failures}",
    ]
    for label, count in report.branches.items():
        lines.append(f"branch {label}: {count}")
    lines.append(f"both: {report.both}")
    lines.append(f"neither: {report.neither}")
    for cx in report.counterexamples:
        coords = " ".join(
            f"{name}={'(' + ', '.join(v) + ')' if isinstance(v, list) else v}"
            for name, v in cx.config.items()
        )
        lines.append(f"counterexample #{cx.index} [{cx.reason}]: {coords}")
    lines.append("RESULT: " + ("PASS" if report.all_pass else "FAIL"))
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "text") -> bytes:
    if fmt == "json":
        return (json.dumps(report_to_dict(report), indent=2) + "\n").encode("utf-8")
    if fmt == "text":
        return _text(report).encode("utf-8")
    raise ValueError(f"unknown report format {fmt!r}")
