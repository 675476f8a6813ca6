"""Self-contained run reports with deterministic verdict sections."""

from __future__ import annotations

import json
import sys
import time
from dataclasses import dataclass, field

from . import __version__

__all__ = ["Report", "emit_report", "EXIT_PASS", "EXIT_VERDICT", "EXIT_INPUT",
           "EXIT_RESOURCE"]

EXIT_PASS = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_RESOURCE = 3

SCHEMA_VERSION = 1


@dataclass
class Report:
    """Everything needed to re-run and audit one scenario or command."""

    id: str
    inputs: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    witnesses: dict = field(default_factory=dict)
    timings: dict = field(default_factory=dict)
    cache_hits: list = field(default_factory=list)
    expected: dict = field(default_factory=dict)

    def passed(self) -> bool:
        return all(self.verdicts.get(k) == v for k, v in self.expected.items()) \
            and all(v != "failed" for v in self.verdicts.values())

    def to_jsonable(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "id": self.id,
            "tool_version": __version__,
            "inputs": self.inputs,
            "verdicts": self.verdicts,
            "witnesses": self.witnesses,
            "timings": self.timings,
            "cache_hits": self.cache_hits,
        }


class StepTimer:
    def __init__(self, report: Report, name: str):
        self.report = report
        self.name = name

    def __enter__(self):
        self.t0 = time.perf_counter()
        return self

    def __exit__(self, *exc):
        self.report.timings[self.name] = round(time.perf_counter() - self.t0, 3)
        return False


def emit_report(report: Report, fmt: str = "json", out=None) -> str:
    """Serialize the report; JSON is lossless, text is a human summary."""
    if fmt == "json":
        text = json.dumps(report.to_jsonable(), sort_keys=True, indent=2,
                          default=str)
    elif fmt == "text":
        lines = [f"report {report.id} (tool {__version__})"]
        for k in sorted(report.verdicts):
            lines.append(f"  [{'ok' if report.verdicts[k] != 'failed' else 'FAIL'}] "
                         f"{k}: {report.verdicts[k]}")
        for k in sorted(report.timings):
            lines.append(f"  time {k}: {report.timings[k]}s")
        if report.cache_hits:
            lines.append(f"  cache hits: {', '.join(report.cache_hits)}")
        text = "\n".join(lines)
    else:
        raise ValueError(f"unknown format {fmt!r}")
    if out is None:
        sys.stdout.write(text + "\n")
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")
    return text
