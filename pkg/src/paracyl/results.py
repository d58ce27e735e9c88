"""Shared result types for all evaluation routes."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Regime(Enum):
    """Which evaluation method produced a result."""

    MODERATE_SERIES = "moderate_series"
    LARGE_ARG_ASYMPTOTIC = "large_arg_asymptotic"
    CLOSED_FORM = "closed_form"


@dataclass(frozen=True)
class EvalResult:
    """Function value, x-derivative, absolute accuracy estimate, and regime."""

    value: float
    derivative: float
    accuracy_estimate: float
    regime: Regime
