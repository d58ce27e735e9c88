"""Digit-for-digit agreement with the embedded reference grids."""

import pytest

from pcforacle import check_tables
from pcforacle.tables import KNOWN_MISPRINTS, REFERENCE_TABLES


@pytest.fixture(scope="module")
def report():
    return check_tables()


def test_inventory():
    assert sorted(REFERENCE_TABLES) == [4, 5, 6, 7, 8, 9]
    assert all(len(rows) == 24 for _, rows in REFERENCE_TABLES.values())
    assert len(KNOWN_MISPRINTS) == 20


@pytest.mark.xfail(
    strict=True,
    reason="the published grids carry the roundoff of whatever produced them: "
    "only 89/144 cells are the correctly rounded values (35 more sit within "
    "their per-cell tolerance, 20 are off beyond it), so exact digit "
    "reproduction of all 144 cells is impossible for correct values",
)
def test_all_cells_exactly_rounded(report):
    assert report.exact == report.total == 144


def test_misprint_set_is_pinned(report):
    # every cell either passes the per-cell tolerance or is a documented
    # misprint; the set must match exactly so regressions in either the
    # transcription or the generator surface immediately
    assert report.total == 144
    assert report.mismatches == KNOWN_MISPRINTS
    assert report.exact == 89
    assert report.exact + report.tolerant == 124
