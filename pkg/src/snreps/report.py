"""Pass/fail reports shared by the verification suites."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


class CostGuardError(RuntimeError):
    """A computation would exceed the configured factorial-size budget."""


@dataclass
class Check:
    name: str
    passed: bool
    detail: str = ""
    # "verification" failures are build failures; "claim" failures are findings
    kind: str = "verification"


@dataclass
class Report:
    title: str
    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "", kind: str = "verification") -> Check:
        check = Check(name, bool(passed), detail, kind)
        self.checks.append(check)
        return check

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks if c.kind == "verification")

    @property
    def claims_hold(self) -> bool:
        return all(c.passed for c in self.checks if c.kind == "claim")

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "title": self.title,
            "passed": self.passed,
            "claimsHold": self.claims_hold,
            "checks": [asdict(c) for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def summary(self) -> str:
        lines = [self.title]
        for c in self.checks:
            tag = "PASS" if c.passed else ("FINDING" if c.kind == "claim" else "FAIL")
            line = f"  [{tag}] {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        lines.append("result: " + ("PASS" if self.passed else "FAIL"))
        return "\n".join(lines)


def describe_failures(failures: list, limit: int = 3) -> str:
    if not failures:
        return ""
    shown = "; ".join(str(f) for f in failures[:limit])
    more = f" (+{len(failures) - limit} more)" if len(failures) > limit else ""
    return f"{len(failures)} failures: {shown}{more}"
