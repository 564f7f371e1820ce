"""Verification reports shared by all checkers.

Every sweep in the package produces a VerificationReport: the check name,
how many cases were run, whether all of them passed, and — on failure —
the first counterexample together with the difference that should have
been zero.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    name: str
    cases: int = 0
    failures: int = 0
    first_counterexample: tuple | None = None
    difference: str | None = None
    seconds: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, where: tuple, ok: bool, diff=None) -> None:
        self.cases += 1
        if not ok:
            self.failures += 1
            if self.first_counterexample is None:
                self.first_counterexample = where
                self.difference = None if diff is None else str(diff)

    def merge(self, other: "VerificationReport") -> None:
        self.cases += other.cases
        self.failures += other.failures
        if self.first_counterexample is None and other.first_counterexample:
            self.first_counterexample = other.first_counterexample
            self.difference = other.difference
        self.seconds += other.seconds

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "cases": self.cases,
            "failures": self.failures,
            "passed": self.passed,
            "first_counterexample": (
                list(self.first_counterexample)
                if self.first_counterexample is not None
                else None
            ),
            "difference": self.difference,
            "seconds": round(self.seconds, 3),
            "params": self.params,
        }

    def summary_line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        line = f"{status} {self.name}: {self.cases} cases"
        if not self.passed:
            line += (
                f", {self.failures} failures,"
                f" first at {self.first_counterexample}"
            )
        return line


class Stopwatch:
    def __enter__(self):
        self._t0 = time.perf_counter()
        self._stopped = None
        return self

    def __exit__(self, *exc):
        self._stopped = time.perf_counter() - self._t0
        return False

    @property
    def elapsed(self):
        """Seconds since entry; frozen once the block exits."""
        if self._stopped is not None:
            return self._stopped
        return time.perf_counter() - self._t0
