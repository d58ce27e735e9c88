"""Series engine: printed coefficients, parity, derivatives, ODE residuals."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from paracyl import _dd as dd
from paracyl.errors import ConvergenceError, DomainError
from paracyl.series_core import SeriesSign, _sum_y12_dd, sum_y12

from conftest import assert_close, central_diff, rel_err


def coeffs_exact(a: Fraction, sign: int, parity: int, n_max: int):
    """Coefficient list A_parity, A_{parity+2}, ... via the recurrence in exact arithmetic."""
    out = [Fraction(1), a]
    n = parity + 2
    while n + 2 <= n_max:
        out.append(a * out[-1] + Fraction(sign * n * (n - 1), 4) * out[-2])
        n += 2
    return out


def test_x_zero_quadruple():
    for a in (-3.0, 0.0, 17.5):
        for sign in SeriesSign:
            r = sum_y12(a, 0.0, sign)
            assert (r.y1, r.y2, r.dy1, r.dy2) == (1.0, 0.0, 0.0, 1.0)
            assert r.trunc_estimate == 0.0


@pytest.mark.parametrize("a", [Fraction(-2), Fraction(1, 2), Fraction(3)])
def test_even_coefficient_closed_forms(a):
    # the x^8/8! coefficient is a^4 + 11 a^2 + 15/4 for the plus recurrence
    c = coeffs_exact(a, +1, 0, 8)
    assert c[4] == a**4 + 11 * a**2 + Fraction(15, 4)
    # and a^4 - 11 a^2 + 15/4 for the minus recurrence
    c = coeffs_exact(a, -1, 0, 8)
    assert c[4] == a**4 - 11 * a**2 + Fraction(15, 4)


@pytest.mark.parametrize("a", [Fraction(-3, 2), Fraction(2), Fraction(7, 4)])
def test_printed_coefficients_through_x9(a):
    plus_even = coeffs_exact(a, +1, 0, 8)
    assert plus_even[1] == a
    assert plus_even[2] == a**2 + Fraction(1, 2)
    assert plus_even[3] == a**3 + Fraction(7, 2) * a
    plus_odd = coeffs_exact(a, +1, 1, 9)
    assert plus_odd[2] == a**2 + Fraction(3, 2)
    assert plus_odd[3] == a**3 + Fraction(13, 2) * a
    assert plus_odd[4] == a**4 + 17 * a**2 + Fraction(63, 4)
    minus_even = coeffs_exact(a, -1, 0, 8)
    assert minus_even[2] == a**2 - Fraction(1, 2)
    assert minus_even[3] == a**3 - Fraction(7, 2) * a
    minus_odd = coeffs_exact(a, -1, 1, 9)
    assert minus_odd[2] == a**2 - Fraction(3, 2)
    assert minus_odd[3] == a**3 - Fraction(13, 2) * a
    assert minus_odd[4] == a**4 - 17 * a**2 + Fraction(63, 4)


def test_frozen_y1_values():
    # 40-digit recurrence summation, frozen
    assert_close(sum_y12(0.0, 1.0, SeriesSign.PLUS).y1, 1.020926515616959262717, rel=1e-15)
    assert_close(sum_y12(0.0, 1.0, SeriesSign.MINUS).y1, 0.9792594966547769953161, rel=1e-15)


def test_series_vs_exact_fractions():
    # full quadruple against exact rational summation at a modest point
    a, x = Fraction(7, 8), Fraction(3, 2)
    fa, fx = float(a), float(x)
    for sign in (+1, -1):
        even = coeffs_exact(a, sign, 0, 60)
        odd = coeffs_exact(a, sign, 1, 61)
        fact = [Fraction(1)]
        for n in range(1, 64):
            fact.append(fact[-1] * n)
        y1 = sum(c * x**n / fact[n] for c, n in zip(even, range(0, 61, 2)))
        y2 = sum(c * x**n / fact[n] for c, n in zip(odd, range(1, 62, 2)))
        dy1 = sum(c * n * x ** (n - 1) / fact[n] for c, n in zip(even, range(0, 61, 2)))
        dy2 = sum(c * n * x ** (n - 1) / fact[n] for c, n in zip(odd, range(1, 62, 2)))
        r = sum_y12(fa, fx, SeriesSign.PLUS if sign > 0 else SeriesSign.MINUS)
        assert_close(r.y1, float(y1), rel=1e-15)
        assert_close(r.y2, float(y2), rel=1e-15)
        assert_close(r.dy1, float(dy1), rel=1e-15)
        assert_close(r.dy2, float(dy2), rel=1e-15)


@settings(max_examples=100, deadline=None)
@given(
    st.floats(min_value=-10, max_value=10),
    st.floats(min_value=1e-3, max_value=6.0),
    st.sampled_from(list(SeriesSign)),
)
def test_parity_bitwise(a, x, sign):
    r_pos = sum_y12(a, x, sign)
    r_neg = sum_y12(a, -x, sign)
    assert r_neg.y1 == r_pos.y1
    assert r_neg.y2 == -r_pos.y2
    assert r_neg.dy1 == -r_pos.dy1
    assert r_neg.dy2 == r_pos.dy2


def test_derivative_matches_finite_differences(rng):
    for _ in range(100):
        a = rng.uniform(-6, 6)
        x = rng.uniform(0.1, 5.5)
        sign = rng.choice(list(SeriesSign))
        h = 1e-5 * max(1.0, abs(x))
        r = sum_y12(a, x, sign)
        fd1 = central_diff(lambda t: sum_y12(a, t, sign).y1, x, h)
        fd2 = central_diff(lambda t: sum_y12(a, t, sign).y2, x, h)
        assert rel_err(r.dy1, fd1) < 1e-6 or abs(r.dy1 - fd1) < 1e-9
        assert rel_err(r.dy2, fd2) < 1e-6 or abs(r.dy2 - fd2) < 1e-9


def test_ode_residual_second_differences():
    # y'' -+ (x^2/4 +- a) y = 0; second difference through the dd interface so
    # the FD roundoff sits far below the 1e-8 absolute tolerance
    h = 3e-6
    for a in (-2.0, -0.5, 0.7, 2.5):
        for x in (0.3, 0.9, 1.7, 2.5):
            for sign in SeriesSign:
                up = _sum_y12_dd(a, x + h, sign).y1
                mid = _sum_y12_dd(a, x, sign).y1
                dn = _sum_y12_dd(a, x - h, sign).y1
                num = dd.add(dd.add(up, dn), dd.mul_d(mid, -2.0))
                ypp = dd.to_float(num) / (h * h)
                y = dd.to_float(mid)
                if sign is SeriesSign.PLUS:
                    resid = ypp - (x * x / 4.0 + a) * y
                else:
                    resid = ypp + (x * x / 4.0 - a) * y
                assert abs(resid) < 1e-8, f"ODE residual {resid} at a={a} x={x} {sign}"


def test_nonfinite_inputs_rejected():
    with pytest.raises(DomainError):
        sum_y12(float("nan"), 1.0, SeriesSign.PLUS)
    with pytest.raises(DomainError):
        sum_y12(1.0, float("inf"), SeriesSign.PLUS)


def test_term_cap_signals_convergence_error():
    with pytest.raises((ConvergenceError, DomainError)):
        sum_y12(0.0, 50.0, SeriesSign.PLUS)


def test_terms_used_bounded():
    r = sum_y12(5.0, 6.0, SeriesSign.MINUS)
    assert 2 <= r.terms_used <= 400
    assert r.trunc_estimate >= 0.0
