"""Itemized pass/fail results shared by the checkers."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class CheckReport:
    items: list[Check] = field(default_factory=list)

    def add(self, name: str, passed: bool, detail: str = "") -> bool:
        self.items.append(Check(name, bool(passed), detail))
        return bool(passed)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.items)

    def __bool__(self) -> bool:
        return self.passed

    def failures(self) -> list[Check]:
        return [c for c in self.items if not c.passed]

    def first_failure(self) -> Check | None:
        return next((c for c in self.items if not c.passed), None)

    def __getitem__(self, name: str) -> Check:
        for c in self.items:
            if c.name == name:
                return c
        raise KeyError(name)

    def __iter__(self):
        return iter(self.items)
