from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from axial.linalg import format_rational


@dataclass(frozen=True)
class ReportEntry:
    """One checked identity.

    ``residual`` is a rational vector; ``passed`` holds exactly when it is
    zero. Structural checks without a natural residual vector (dimension
    bounds, axis status) use a short obstruction vector: a codimension, an
    excess dimension, or ``(1,)`` for "not an axis".
    """

    identity_id: str
    passed: bool
    residual: tuple
    vacuous: bool = False
    note: str = ""

    def to_json(self) -> dict:
        out = {
            "identity_id": self.identity_id,
            "passed": self.passed,
            "residual": [format_rational(r) for r in self.residual],
        }
        if self.vacuous:
            out["vacuous"] = True
        if self.note:
            out["note"] = self.note
        return out


def entry(identity_id: str, residual: Sequence, note: str = "") -> ReportEntry:
    res = tuple(Fraction(r) for r in residual)
    return ReportEntry(identity_id, not any(res), res, note=note)


def vacuous(identity_id: str, note: str) -> ReportEntry:
    return ReportEntry(identity_id, True, (Fraction(0),), vacuous=True, note=note)


@dataclass
class VerificationReport:
    entries: list = field(default_factory=list)

    def add(self, e: ReportEntry) -> None:
        self.entries.append(e)

    def extend(self, other: "VerificationReport | Iterable[ReportEntry]", prefix: str = "") -> None:
        items = other.entries if isinstance(other, VerificationReport) else other
        for e in items:
            if prefix:
                e = ReportEntry(prefix + e.identity_id, e.passed, e.residual, e.vacuous, e.note)
            self.entries.append(e)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    @property
    def failures(self) -> list:
        return [e for e in self.entries if not e.passed]

    def __len__(self) -> int:
        return len(self.entries)

    def __getitem__(self, identity_id: str) -> ReportEntry:
        for e in self.entries:
            if e.identity_id == identity_id:
                return e
        raise KeyError(identity_id)

    def ids(self) -> list:
        return [e.identity_id for e in self.entries]

    def to_json(self) -> list:
        return [e.to_json() for e in self.entries]

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)
