"""Check reports: the shared result type for all verification suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

PASS = "pass"
FAIL = "fail"
DESCRIPTIVE = "descriptive"


@dataclass(frozen=True, slots=True)
class CheckResult:
    id: str
    status: str
    detail: str = ""
    lhs: str = ""
    rhs: str = ""


@dataclass
class CheckReport:
    suite: str
    seed: int = 0
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, id: str, ok: bool, detail: str = "", lhs: str = "", rhs: str = "") -> None:
        self.checks.append(CheckResult(id, PASS if ok else FAIL, detail, lhs, rhs))

    def describe(self, id: str, detail: str, lhs: str = "", rhs: str = "") -> None:
        self.checks.append(CheckResult(id, DESCRIPTIVE, detail, lhs, rhs))

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        if not prefix:
            self.checks.extend(other.checks)
            return
        for c in other.checks:
            self.checks.append(
                CheckResult(prefix + c.id, c.status, c.detail, c.lhs, c.rhs)
            )

    @property
    def ok(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == FAIL]

    def sorted_checks(self) -> list[CheckResult]:
        return sorted(self.checks, key=lambda c: c.id)

    def to_json(self) -> str:
        payload = {
            "suite": self.suite,
            "seed": self.seed,
            "checks": [
                {
                    "id": c.id,
                    "status": c.status,
                    "detail": c.detail,
                    "lhs": c.lhs,
                    "rhs": c.rhs,
                }
                for c in self.sorted_checks()
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"

    def to_text(self) -> str:
        lines = [f"suite {self.suite} (seed {self.seed})"]
        for c in self.sorted_checks():
            line = f"  [{c.status.upper():>11}] {c.id}"
            if c.detail:
                line += f" -- {c.detail}"
            lines.append(line)
            if c.status == FAIL and (c.lhs or c.rhs):
                lines.append(f"      lhs: {c.lhs}")
                lines.append(f"      rhs: {c.rhs}")
        n_fail = len(self.failures)
        lines.append(f"  {len(self.checks)} checks, {n_fail} failures")
        return "\n".join(lines)
