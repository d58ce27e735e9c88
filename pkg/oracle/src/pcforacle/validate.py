"""Digit-for-digit validation of the embedded reference grids.

Each recomputed cell is classified:

* ``exact``    -- the printed string is the correctly rounded value;
* ``tolerant`` -- off by a few final-digit units but inside the per-cell
  rule 5*10^(1-d) relative (d = printed significant digits), i.e. ordinary
  last-place noise of whatever produced the tables;
* ``misprint`` -- beyond its own tolerance; no correct implementation can
  reproduce those digits.  The set of misprints is pinned (KNOWN_MISPRINTS),
  so both a transcription regression and a generator regression trip it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Set, Tuple

import mpmath as mp

from .generator import OracleRequest, evaluate_stable
from .tables import KNOWN_MISPRINTS, REFERENCE_TABLES

_ZERO_STRINGS = ("0", "-0.000000000000000", "0.000000000000000")


def sig_digits(printed: str) -> int:
    digits = "".join(c for c in printed if c.isdigit()).lstrip("0")
    return len(digits)


def rounds_to_printed(value, printed: str) -> bool:
    """True if the printed string is `value` correctly rounded to its own
    decimal places."""
    if printed in _ZERO_STRINGS:
        return abs(value) <= mp.mpf("1e-13")
    dp = len(printed.split(".")[1]) if "." in printed else 0
    scale = mp.mpf(10) ** dp
    return mp.nint(value * scale) == mp.nint(mp.mpf(printed) * scale)


def within_tolerance(value, printed: str) -> bool:
    if printed in _ZERO_STRINGS:
        return abs(value) <= mp.mpf("1e-13")
    tol = mp.mpf(5) * mp.mpf(10) ** (1 - sig_digits(printed))
    pv = mp.mpf(printed)
    return abs(value - pv) <= tol * abs(pv)


@dataclass
class TableReport:
    total: int = 0
    exact: int = 0
    tolerant: int = 0
    mismatches: Set[Tuple[str, float, float]] = field(default_factory=set)
    lines: List[str] = field(default_factory=list)

    @property
    def all_documented(self) -> bool:
        return self.mismatches == KNOWN_MISPRINTS


def check_tables(digits: int = 30) -> TableReport:
    report = TableReport()
    for table, (function, rows) in sorted(REFERENCE_TABLES.items()):
        exact = tolerant = bad = 0
        for a, x, printed in rows:
            v = evaluate_stable(OracleRequest(function, a, x, digits))
            report.total += 1
            if rounds_to_printed(v, printed):
                exact += 1
            elif within_tolerance(v, printed):
                tolerant += 1
            else:
                bad += 1
                report.mismatches.add((function, a, x))
                report.lines.append(
                    f"table {table} {function}({a},{x}): printed {printed}, "
                    f"recomputed {mp.nstr(v, sig_digits(printed) + 3)}"
                )
        report.exact += exact
        report.tolerant += tolerant
        report.lines.append(
            f"table {table}: {exact}/24 exactly rounded, {tolerant} within last-place "
            f"noise, {bad} misprinted beyond tolerance"
        )
    return report
