"""Exception types shared across the package.

The CLI maps these onto process exit codes: usage errors exit 2, domain and
range errors (and their relatives below) exit 3, reference-check failures
exit 1.
"""

from __future__ import annotations


class ParacylError(Exception):
    """Base class for all evaluation errors."""


class DomainError(ParacylError):
    """Input outside the mathematical domain of the operation."""


class RangeError(ParacylError):
    """Result not representable (overflow) or parameter outside support."""


class RegimeError(ParacylError):
    """Evaluation method invalid at this point (e.g. asymptotics at small x)."""


class ConvergenceError(ParacylError):
    """Series failed to converge within the term cap; partials attached."""

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial
