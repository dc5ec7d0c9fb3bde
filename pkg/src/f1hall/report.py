"""Uniform pass/fail bookkeeping for the verification suites."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckRecord:
    label: str
    ok: bool
    lhs: str = ""
    rhs: str = ""
    cases: int = 1
    pair: tuple[str, str] | None = None

    def as_json(self) -> dict:
        data: dict = {}
        if self.pair is not None:
            data["pair"] = list(self.pair)
        else:
            data["check"] = self.label
        data["lhs"] = self.lhs
        data["rhs"] = self.rhs
        data["ok"] = self.ok
        if self.cases != 1:
            data["cases"] = self.cases
        return data


@dataclass
class Report:
    name: str
    records: list[CheckRecord] = field(default_factory=list)

    def add(
        self,
        label: str,
        ok: bool,
        lhs: str = "",
        rhs: str = "",
        cases: int = 1,
        pair: tuple[str, str] | None = None,
    ) -> None:
        self.records.append(CheckRecord(label, ok, lhs, rhs, cases, pair))

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.records)

    @property
    def failures(self) -> list[CheckRecord]:
        return [r for r in self.records if not r.ok]

    @property
    def total_cases(self) -> int:
        return sum(r.cases for r in self.records)

    def summary(self) -> str:
        status = "ok  " if self.passed else "FAIL"
        line = f"{status} {self.name}: {len(self.records)} checks, {self.total_cases} cases"
        if not self.passed:
            first = self.failures[0]
            line += f"; first counterexample {first.label}: {first.lhs} != {first.rhs}"
        return line
