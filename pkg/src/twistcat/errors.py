"""Exception types and the machine-readable validation report."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Iterator


class TwistcatError(Exception):
    """Base class for every error raised by this package."""


class MalformedError(TwistcatError, ValueError):
    """Input tables are not well formed (ids out of range, missing entries, bad shapes)."""


class ShapeError(MalformedError):
    """Matrix or structure-constant array has the wrong dimensions."""


class SearchSpaceError(TwistcatError):
    """An enumeration would exceed the configured assignment bound."""

    def __init__(self, bound: int, limit: int):
        self.bound = bound
        self.limit = limit
        super().__init__(f"search space bound {bound} exceeds limit {limit}")


class AxiomError(TwistcatError, ValueError):
    """Input data violates a required law; ``report`` holds the witnesses."""

    def __init__(self, message: str, report: "ValidationReport"):
        self.report = report
        super().__init__(f"{message}: {report.summary()}")


class NotThinError(TwistcatError, ValueError):
    pass


class NotGroupoidError(TwistcatError, ValueError):
    pass


class FactorizationError(TwistcatError, ValueError):
    pass


@dataclass(frozen=True)
class Violation:
    tag: str
    witness: tuple
    message: str

    def to_json(self) -> dict[str, Any]:
        return {"tag": self.tag, "witness": list(self.witness), "message": self.message}


@dataclass(frozen=True)
class ValidationReport:
    """List of law violations. An empty report means the structure is valid."""

    violations: tuple[Violation, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __len__(self) -> int:
        return len(self.violations)

    def __iter__(self) -> Iterator[Violation]:
        return iter(self.violations)

    def tags(self) -> set[str]:
        return {v.tag for v in self.violations}

    def summary(self, limit: int = 3) -> str:
        if self.ok:
            return "valid"
        head = "; ".join(f"[{v.tag}] {v.message}" for v in self.violations[:limit])
        more = len(self.violations) - limit
        return head + (f" (+{more} more)" if more > 0 else "")

    def to_json(self) -> dict[str, Any]:
        return {"valid": self.ok, "violations": [v.to_json() for v in self.violations]}


class ReportBuilder:
    """Accumulates violations; ``build()`` freezes them into a report."""

    def __init__(self) -> None:
        self._items: list[Violation] = []

    def add(self, tag: str, witness: tuple, message: str) -> None:
        self._items.append(Violation(tag, tuple(witness), message))

    def __len__(self) -> int:
        return len(self._items)

    def build(self) -> ValidationReport:
        return ValidationReport(tuple(self._items))
