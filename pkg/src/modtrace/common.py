"""Shared numeric conventions, error types and validation reports."""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

#: Default absolute tolerance; comparisons scale it by max(1, magnitudes).
DEFAULT_TOL = 1e-9


class StructuralError(ValueError):
    """Malformed data: bad shapes, out-of-range indices, inconsistent references."""


class UnsupportedError(ValueError):
    """The input is well-formed but outside the supported fragment."""


class PreconditionError(ValueError):
    """An operation was called on data that violates its stated precondition."""


class NumericError(RuntimeError):
    """A numeric procedure failed to converge or became degenerate."""


class UsageError(ValueError):
    """Unknown builtin name or bad command-line usage."""


def close(x, y, tol: float = DEFAULT_TOL) -> bool:
    """Compare scalars (real or complex) up to ``tol * max(1, |x|, |y|)``."""
    return abs(x - y) <= tol * max(1.0, abs(x), abs(y))


class Violation(NamedTuple):
    """One failed axiom instance: which law, at which indices, and both sides."""

    axiom: str
    index: tuple
    lhs: object
    rhs: object


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exhaustive axiom check; lists every violation found."""

    violations: tuple[Violation, ...]

    @property
    def valid(self) -> bool:
        return not self.violations

    def __bool__(self) -> bool:
        return self.valid

    def to_dict(self) -> dict:
        return {
            "valid": self.valid,
            "violations": [
                [v.axiom, list(v.index), v.lhs, v.rhs] for v in self.violations
            ],
        }
