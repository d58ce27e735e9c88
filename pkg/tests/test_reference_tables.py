"""Fixture plumbing and the self-test engine."""

import pytest

from paracyl.reference_tables import (
    REFERENCE_TABLES,
    TABLE_ERRATA,
    ReferenceFixture,
    check_fixture,
    fixtures,
    printed_digits,
    selftest,
)


def test_fixture_inventory():
    fx = fixtures()
    assert len(fx) == 144
    assert {f.table for f in fx} == {4, 5, 6, 7, 8, 9}
    for t in REFERENCE_TABLES:
        assert len(fixtures(t)) == 24


def test_printed_digits():
    assert printed_digits("3.052183664350372") == 16
    assert printed_digits("0.000000155227075") == 9
    assert printed_digits("0.3280019487") == 10
    assert printed_digits("-35.754085404247576") == 17
    assert printed_digits("0.97838806074") == 11


def test_expected_parses_exactly():
    for f in fixtures():
        assert f.expected == float(f.expected_str)
        if f.expected_str not in ("0", "-0.000000000000000"):
            assert 6 <= f.printed_digits <= 17


def test_errata_are_marked():
    marked = {(f.function, f.a, f.x) for f in fixtures() if f.corrected is not None}
    assert marked == set(TABLE_ERRATA)
    assert len(marked) == 20


def test_perturbed_fixture_fails():
    # negative control: a 1e-6 perturbation must flip the verdict
    fix = next(f for f in fixtures(4) if f.expected_str == "0.842203244069839")
    ok, _, _ = check_fixture(fix, fix.expected * (1 + 1e-6))
    assert not ok
    ok, _, _ = check_fixture(fix, 0.8422032440698395745)
    assert ok


def test_zero_cells_absolute_rule():
    fix = next(f for f in fixtures(4) if f.expected_str == "-0.000000000000000")
    assert check_fixture(fix, 5e-14)[0]
    assert not check_fixture(fix, 5e-13)[0]


def test_selftest_green_and_fast():
    report = selftest()
    assert report.ok
    assert report.fixture_count == 144
    assert len(report.errata_notes) == 20
    assert report.elapsed_seconds < 1.0


def test_selftest_catches_regressions():
    # run the table checks against fixtures whose expectation was corrupted
    from paracyl.reference_tables import SelftestReport, run_table_checks

    fix = fixtures(8)
    bad = [
        ReferenceFixture(
            f.function, f.a, f.x, f.expected * (1 + 1e-6), f.printed_digits,
            f.expected_str, f.table, f.corrected,
        )
        for f in fix
    ]
    # corrupt expectations make the checks fail because the computed values
    # no longer match them
    report = SelftestReport()
    bad_plain = []
    for f in bad:
        bad_plain.append(
            ReferenceFixture(
                f.function, f.a, f.x, f.expected, f.printed_digits,
                f"{f.expected:.15f}", f.table, None,
            )
        )
    run_table_checks(report, bad_plain)
    assert not report.ok
