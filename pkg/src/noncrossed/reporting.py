"""Named pass/fail check results shared by all certificate reports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def to_json(self) -> dict:
        return {"name": self.name, "pass": self.passed, "detail": self.detail}


def all_pass(checks: Iterable[CheckResult]) -> bool:
    return all(c.passed for c in checks)


def checks_to_json(checks: Iterable[CheckResult]) -> list[dict]:
    return [c.to_json() for c in checks]
