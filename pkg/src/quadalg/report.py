from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class Check:
    """One verified assertion: what was expected, what came out, and whether they agree."""

    name: str
    expected: str
    actual: str
    passed: bool

    def to_dict(self) -> dict:
        return {
            "assertion": self.name,
            "expected": self.expected,
            "actual": self.actual,
            "pass": self.passed,
        }

    def line(self) -> str:
        if self.passed:
            return f"PASS  {self.name}" + (f": {self.actual}" if len(self.actual) <= 60 else "")
        return f"FAIL  {self.name}: expected {self.expected}, got {self.actual}"


def all_passed(checks: Iterable[Check]) -> bool:
    return all(c.passed for c in checks)
