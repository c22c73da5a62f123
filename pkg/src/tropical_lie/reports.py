"""Per-instance verdict reports shared by all checkers."""
from __future__ import annotations

from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "inconclusive")


@dataclass(frozen=True)
class CheckEntry:
    axiom: str
    index: tuple
    status: str
    witness: str | None = None

    def line(self, names=None) -> str:
        if names is not None:
            idx = "(" + ",".join(names[i] if isinstance(i, int) and 0 <= i < len(names) else str(i)
                                 for i in self.index) + ")"
        else:
            idx = "(" + ",".join(str(i) for i in self.index) + ")"
        out = f"{self.axiom} {idx} {self.status}"
        if self.witness:
            out += f" {self.witness}"
        return out


@dataclass
class CheckReport:
    entries: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    mode: str | None = None
    seed: int | None = None

    def add(self, axiom, index, status, witness=None):
        assert status in STATUSES, status
        self.entries.append(CheckEntry(axiom, tuple(index), status, witness))

    def extend(self, other: "CheckReport"):
        self.entries.extend(other.entries)
        self.notes.extend(other.notes)
        return self

    def note(self, msg):
        self.notes.append(msg)

    @property
    def failures(self):
        return [e for e in self.entries if e.status == "fail"]

    @property
    def inconclusives(self):
        return [e for e in self.entries if e.status == "inconclusive"]

    @property
    def ok(self) -> bool:
        return not self.failures and not self.inconclusives

    @property
    def status(self) -> str:
        if self.failures:
            return "fail"
        if self.inconclusives:
            return "inconclusive"
        return "pass"

    def by_axiom(self, axiom):
        return [e for e in self.entries if e.axiom == axiom]

    def lines(self, names=None):
        return [e.line(names) for e in self.entries]

    def summary(self) -> str:
        n = len(self.entries)
        return f"{n} checks: {n - len(self.failures) - len(self.inconclusives)} pass, " \
               f"{len(self.failures)} fail, {len(self.inconclusives)} inconclusive"


LawReport = CheckReport
