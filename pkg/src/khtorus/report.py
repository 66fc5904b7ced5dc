"""Pass/fail reports returned by the verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    name: str
    lines: list[tuple[bool, str]] = field(default_factory=list)

    def check(self, ok: bool, message: str) -> bool:
        self.lines.append((bool(ok), message))
        return bool(ok)

    def extend(self, other: "Report", prefix: str = ""):
        for ok, msg in other.lines:
            self.lines.append((ok, f"{prefix}{msg}"))

    @property
    def passed(self) -> bool:
        return all(ok for ok, _ in self.lines)

    @property
    def failures(self) -> list[str]:
        return [m for ok, m in self.lines if not ok]

    def __bool__(self):
        return self.passed

    def to_json(self) -> dict:
        return {"check": self.name, "passed": self.passed,
                "lines": [{"ok": ok, "message": m} for ok, m in self.lines]}

    def render(self) -> str:
        head = f"{'PASS' if self.passed else 'FAIL'} {self.name}"
        body = [f"  [{'ok' if ok else 'FAIL'}] {m}" for ok, m in self.lines]
        return "\n".join([head] + body)
