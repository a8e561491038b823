"""Structured reports for the command-line surface."""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_UNDECIDED = 3


@dataclass
class Check:
    name: str
    verdict: str            # pass | fail | undecided
    location: str = ""
    detail: str = ""


@dataclass
class Report:
    verb: str
    checks: List[Check] = field(default_factory=list)
    bounds: Dict[str, int] = field(default_factory=dict)
    data: Dict[str, object] = field(default_factory=dict)
    started: float = field(default_factory=time.monotonic)

    def add(self, name: str, verdict: str, location: str = "", detail: str = "") -> None:
        self.checks.append(Check(name, verdict, location, detail))

    def ok(self, name: str, location: str = "", detail: str = "") -> None:
        self.add(name, "pass", location, detail)

    def fail(self, name: str, location: str = "", detail: str = "") -> None:
        self.add(name, "fail", location, detail)

    def undecided(self, name: str, location: str = "", detail: str = "") -> None:
        self.add(name, "undecided", location, detail)

    @property
    def exit_code(self) -> int:
        if any(c.verdict == "fail" for c in self.checks):
            return EXIT_FAIL
        if any(c.verdict == "undecided" for c in self.checks):
            return EXIT_UNDECIDED
        return EXIT_OK

    def to_json(self) -> str:
        from . import __version__

        payload = {
            "schema": SCHEMA_VERSION,
            "tool": {"name": "crx", "version": __version__},
            "verb": self.verb,
            "bounds": self.bounds,
            "elapsed_ms": round(1000 * (time.monotonic() - self.started), 3),
            "checks": [
                {"name": c.name, "verdict": c.verdict,
                 "location": c.location, "detail": c.detail}
                for c in self.checks
            ],
            "data": self.data,
        }
        return json.dumps(payload, indent=2, sort_keys=True, default=str)

    def to_text(self) -> str:
        lines = [f"[crx {self.verb}]"]
        if self.bounds:
            lines.append("bounds: " + ", ".join(f"{k}={v}" for k, v in self.bounds.items()))
        for c in self.checks:
            loc = f" @ {c.location}" if c.location else ""
            det = f": {c.detail}" if c.detail else ""
            lines.append(f"  {c.verdict.upper():9s} {c.name}{loc}{det}")
        for k, v in self.data.items():
            lines.append(f"  {k}: {v}")
        status = {0: "ok", 1: "FAIL", 3: "undecided"}[self.exit_code]
        lines.append(f"status: {status}")
        return "\n".join(lines)
