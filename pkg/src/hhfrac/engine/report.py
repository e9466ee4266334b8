"""Report value objects and the verdict rule shared by every evaluator."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class Tolerance:
    atol: float = 1e-9
    rtol: float = 1e-7

    def budget(self, scale: float) -> float:
        return self.atol + self.rtol * scale


DEFAULT_TOL = Tolerance()


@dataclass(frozen=True)
class Side:
    label: str
    value: float
    error_estimate: float = 0.0


@dataclass
class InequalityReport:
    name: str
    sides: list[Side]
    slack: float
    verdict: str
    instance: dict[str, Any]
    error_budget: float = 0.0
    notes: dict[str, Any] = field(default_factory=dict)

    def side(self, label: str) -> float:
        for s in self.sides:
            if s.label == label:
                return s.value
        raise KeyError(label)

    @property
    def scale(self) -> float:
        return max((abs(s.value) for s in self.sides), default=0.0)

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "sides": [
                {"label": s.label, "value": s.value, "error_estimate": s.error_estimate}
                for s in self.sides
            ],
            "slack": self.slack,
            "verdict": self.verdict,
            "error_budget": self.error_budget,
            "instance": dict(self.instance),
            "notes": dict(self.notes),
        }


def verdict(slack: float, scale: float, error_budget: float, tol: Tolerance) -> str:
    """Classify a slack value.

    ``pass`` when the slack clears ``-(atol + rtol*scale)``; ``inconclusive``
    when the shortfall is within the accumulated quadrature error; ``fail``
    otherwise.  A NaN slack is inconclusive.
    """
    if math.isnan(slack):
        return INCONCLUSIVE
    allowed = tol.budget(scale)
    if slack >= -allowed:
        return PASS
    if -slack <= allowed + error_budget:
        return INCONCLUSIVE
    return FAIL


def worst(*verdicts: str) -> str:
    if FAIL in verdicts:
        return FAIL
    if INCONCLUSIVE in verdicts:
        return INCONCLUSIVE
    return PASS
