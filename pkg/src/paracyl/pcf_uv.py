"""U(a,x) and V(a,x) in the moderate regime, built from the series pair.

Both functions are assembled as anchor combinations of the even/odd series:

    U(a,x) = U(a,0)  y1 + U'(a,0) y2
    V(a,x) = V(a,0)  y1 + V'(a,0) y2

which is the pole-free reduction of the trigonometric form

    U = Y1 cos(beta) - Y2 sin(beta),  V = (Y1 sin(beta) + Y2 cos(beta))/Gamma(1/2-a)

with beta = pi(a/2 + 1/4): multiplying each gamma prefactor by its trig factor
through the reflection identity Gamma(t)Gamma(1-t) = pi/sin(pi t) turns every
product of a gamma pole and a trig zero into a reciprocal gamma that simply
vanishes there, so parameter lines like a = 3.5 or a = 0.5 + 2n need no
special casing.  The anchors are

    U(a,0)  =  sqrt(pi) 2^{-(a/2+1/4)} / Gamma(a/2+3/4)
    U'(a,0) = -sqrt(pi) 2^{-(a/2-1/4)} / Gamma(a/2+1/4)
    V(a,0)  =  2^{a/2+1/4} sin(pi(3/4-a/2)) / Gamma(3/4-a/2)
    V'(a,0) =  2^{a/2+3/4} sin(pi(1/4-a/2)) / Gamma(1/4-a/2)

evaluated entirely with reciprocal gammas (entire in a).  All internal
arithmetic is double-double: the anchor combination for decaying solutions
cancels up to ~1e11 at the corners of the supported domain.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

from . import _dd as dd
from .errors import RangeError
from .results import EvalResult, Regime
from .series_core import SeriesSign, _SeriesDD, _sum_y12_dd

A_MAX = 25.0  # gamma/power-of-two prefactors stay in double range below this

# final double rounding plus double-double noise floor per unit magnitude
_EPS_OUT = 2.3e-16
_EPS_DD = 1e-29


@dataclass(frozen=True)
class UVAnchors:
    """Values of U, U', V, V' at x = 0."""

    u0: float
    du0: float
    v0: float
    dv0: float


def _check_a(a: float) -> None:
    if not math.isfinite(a):
        raise RangeError(f"parameter a must be finite, got {a}")
    if abs(a) > A_MAX:
        raise RangeError(f"|a| = {abs(a)} outside supported range {A_MAX}")


@lru_cache(maxsize=512)
def _anchors_dd(a: float):
    """Double-double anchor quadruple; cached since grids reuse the same a."""
    half_a = 0.5 * a  # exact
    # U(a,0), U'(a,0)
    u0 = dd.mul(
        dd.mul(dd.SQRT_PI, dd.pow2(dd.from_float(-(half_a + 0.25)))),
        dd.recip_gamma(dd.add_d(dd.from_float(half_a), 0.75)),
    )
    du0 = dd.neg(
        dd.mul(
            dd.mul(dd.SQRT_PI, dd.pow2(dd.from_float(-(half_a - 0.25)))),
            dd.recip_gamma(dd.add_d(dd.from_float(half_a), 0.25)),
        )
    )
    # V(a,0), V'(a,0); arguments 3/4 - a/2 and 1/4 - a/2 as exact dd sums
    t3 = dd.two_sum(0.75, -half_a)
    t1 = dd.two_sum(0.25, -half_a)
    v0 = dd.mul(
        dd.mul(dd.pow2(dd.from_float(half_a + 0.25)), dd.sinpi(t3)),
        dd.recip_gamma(t3),
    )
    dv0 = dd.mul(
        dd.mul(dd.pow2(dd.from_float(half_a + 0.75)), dd.sinpi(t1)),
        dd.recip_gamma(t1),
    )
    return u0, du0, v0, dv0


def uv_at_zero(a: float) -> UVAnchors:
    """Zero-point values of U, V and their derivatives (total in a)."""
    _check_a(a)
    u0, du0, v0, dv0 = _anchors_dd(a)
    return UVAnchors(dd.to_float(u0), dd.to_float(du0), dd.to_float(v0), dd.to_float(dv0))


def _combine(c1, c2, series: _SeriesDD):
    """value/derivative of c1*y1 + c2*y2 with an honest error estimate."""
    val = dd.add(dd.mul(c1, series.y1), dd.mul(c2, series.y2))
    der = dd.add(dd.mul(c1, series.dy1), dd.mul(c2, series.dy2))
    a1, a2 = abs(dd.to_float(c1)), abs(dd.to_float(c2))
    gross_v = a1 * series.abs_y1 + a2 * series.abs_y2
    gross_d = a1 * series.abs_dy1 + a2 * series.abs_dy2
    trunc = (a1 + a2) * series.trunc_estimate
    v = dd.to_float(val)
    d = dd.to_float(der)
    est_v = _EPS_OUT * abs(v) + _EPS_DD * gross_v + trunc
    est_d = _EPS_OUT * abs(d) + _EPS_DD * gross_d + trunc
    return v, d, est_v, est_d


def _pu_parts(a: float, x: float):
    _check_a(a)
    series = _sum_y12_dd(a, x, SeriesSign.PLUS)
    u0, du0, _, _ = _anchors_dd(a)
    return _combine(u0, du0, series)


def _pv_parts(a: float, x: float):
    _check_a(a)
    series = _sum_y12_dd(a, x, SeriesSign.PLUS)
    _, _, v0, dv0 = _anchors_dd(a)
    return _combine(v0, dv0, series)


def pu(a: float, x: float) -> EvalResult:
    """Parabolic cylinder U(a,x) by the series route (moderate regime)."""
    v, d, est_v, _ = _pu_parts(a, x)
    return EvalResult(v, d, est_v, Regime.MODERATE_SERIES)


def dpu(a: float, x: float) -> float:
    """d/dx of U(a,x), series route."""
    return _pu_parts(a, x)[1]


def pv(a: float, x: float) -> EvalResult:
    """Parabolic cylinder V(a,x) by the series route (moderate regime)."""
    v, d, est_v, _ = _pv_parts(a, x)
    return EvalResult(v, d, est_v, Regime.MODERATE_SERIES)


def dpv(a: float, x: float) -> float:
    """d/dx of V(a,x), series route."""
    return _pv_parts(a, x)[1]
