"""Result records shared by all verification routines."""
from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)
    # informational findings that do not make the check fail
    notes: list = field(default_factory=list)

    def __bool__(self):
        return bool(self.passed)


def all_passed(results) -> bool:
    return all(bool(r) for r in results)


def combine(name: str, results: list) -> CheckResult:
    """Fold a list of sub-results into one record, keeping the failures."""
    failed = [r for r in results if not r]
    notes = [n for r in results for n in r.notes]
    detail = {"checked": len(results)}
    if failed:
        detail["failures"] = [{"name": r.name, "detail": r.detail} for r in failed]
    return CheckResult(name, not failed, detail, notes)
