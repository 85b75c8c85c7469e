"""Verification outcomes and their machine-readable form."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

SCHEMA = "digiplane.report/1"


@dataclass(frozen=True)
class Counterexample:
    key: tuple
    inputs: dict[str, Any]
    expected: str
    actual: str

    def to_json(self) -> dict[str, Any]:
        return {
            "inputs": {name: _jsonable(v) for name, v in self.inputs.items()},
            "expected": self.expected,
            "actual": self.actual,
        }


def _jsonable(value: Any) -> Any:
    if isinstance(value, (set, frozenset)):
        return [list(p) for p in sorted(value)]
    if isinstance(value, tuple) and len(value) == 2 and all(isinstance(c, int) for c in value):
        return list(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (int, float, str, bool)) or value is None:
        return value
    return str(value)


@dataclass
class VerificationReport:
    """Outcome of one theorem check.

    ``passed`` holds exactly when there is no counterexample. Cases whose
    hypothesis does not hold are counted in ``excluded``, never as failures.
    """

    suite_name: str
    cases_examined: int = 0
    passed: bool = True
    first_counterexample: Counterexample | None = None
    elapsed: float = 0.0
    excluded: int = 0
    informational: bool = False
    params: dict[str, Any] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        if not self.passed:
            return "failed"
        if self.cases_examined == 0 and self.excluded:
            return "hypothesis not met"
        return "passed"

    def to_json(self) -> dict[str, Any]:
        return {
            "schema": SCHEMA,
            "suite": self.suite_name,
            "params": self.params,
            "cases": self.cases_examined,
            "excluded": self.excluded,
            "passed": self.passed,
            "status": self.status,
            "informational": self.informational,
            "counterexample": None if self.first_counterexample is None else self.first_counterexample.to_json(),
            "elapsed_s": round(self.elapsed, 6),
            "notes": list(self.notes),
        }

    def summary(self) -> str:
        noun = "case" if self.cases_examined == 1 else "cases"
        line = f"{self.suite_name}: {self.status} ({self.cases_examined} {noun}"
        if self.excluded:
            line += f", {self.excluded} hypothesis-excluded"
        line += f", {self.elapsed:.2f}s)"
        if self.informational:
            line += " [informational]"
        lines = [line]
        cx = self.first_counterexample
        if cx is not None:
            lines.append("  counterexample:")
            for name, value in cx.inputs.items():
                lines.append(f"    {name} = {_jsonable(value)}")
            lines.append(f"    expected: {cx.expected}")
            lines.append(f"    actual:   {cx.actual}")
        lines.extend(f"  note: {n}" for n in self.notes)
        return "\n".join(lines)
