"""Structured pass/fail reports shared by the verification entry points."""
from __future__ import annotations

from dataclasses import dataclass, field

from .codec import dump_graph


@dataclass
class Check:
    name: str
    status: str  # pass, fail or partial
    details: str = ""


@dataclass
class Report:
    name: str
    checks: list = field(default_factory=list)

    def add(self, name, ok, witness=None, details="", partial=False):
        status = "pass" if ok else ("partial" if partial else "fail")
        if witness is not None and not ok:
            details = (details + " " if details else "") + \
                f"witness={dump_graph(witness)}"
        self.checks.append(Check(name, status, details))

    @property
    def passed(self):
        return all(c.status == "pass" for c in self.checks)

    def lines(self):
        out = [f"report: {self.name}"]
        for c in self.checks:
            tail = f"  ({c.details})" if c.details else ""
            out.append(f"  [{c.status:>4}] {c.name}{tail}")
        out.append(f"result: {'pass' if self.passed else 'fail'}")
        return out

    def __str__(self):
        return "\n".join(self.lines())

    def to_dict(self):
        return {
            "name": self.name,
            "passed": self.passed,
            "checks": [
                {"name": c.name, "status": c.status, "details": c.details}
                for c in self.checks
            ],
        }
