"""Structured pass/fail reports emitted by the verification checks."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class Report:
    claim: str
    subject: str
    passed: bool
    witness: str | None = None

    def to_dict(self) -> dict:
        return {
            "claim": self.claim,
            "subject": self.subject,
            "pass": self.passed,
            "witness": self.witness,
        }

    def line(self) -> str:
        status = "pass" if self.passed else "FAIL"
        extra = f" [{self.witness}]" if self.witness and not self.passed else ""
        return f"{status} {self.claim} {self.subject}{extra}"
