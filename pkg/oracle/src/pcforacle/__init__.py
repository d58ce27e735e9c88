"""Offline arbitrary-precision oracle for the parabolic cylinder suite."""

from .generator import (
    OracleRequest,
    PrecisionError,
    default_requests,
    evaluate_stable,
    format_value,
    generate,
    load_requests,
)
from .validate import check_tables

__version__ = "1.0.0"

__all__ = [
    "OracleRequest",
    "PrecisionError",
    "check_tables",
    "default_requests",
    "evaluate_stable",
    "format_value",
    "generate",
    "load_requests",
]
