"""Power-series engine for the even/odd solution pair of Weber's equations.

Both equations share the same series skeleton

    y1 = sum A_n x^n / n!   (even n, A_0 = 1, A_2 = a)
    y2 = sum A_n x^n / n!   (odd n,  A_1 = 1, A_3 = a)

with the three-term coefficient recurrence

    A_{n+2} = a A_n + s * n(n-1)/4 * A_{n-2},   s = +1 or -1,

where s = +1 generates the pair for y'' = (x^2/4 + a) y and s = -1 the pair
for y'' + (x^2/4 - a) y = 0.  Coefficients are generated on the fly from two
rolling values per parity; the closed polynomial forms of the low-order
coefficients exist only in the tests.

Sums, coefficients and the x^n/n! chain all run in double-double arithmetic
(see _dd): the callers combine y1 and y2 with gamma-anchor weights whose
cancellation reaches ~1e11 inside the supported domain, so the quadruple must
carry far more than double precision even though the public result is a
double.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from . import _dd as dd
from .errors import ConvergenceError, DomainError

TERM_CAP = 400          # max power index; the dispatcher never needs more
_STOP = 1e-33           # relative floor, double-double epsilon scale
_MODERATE_X_MAX = 25.0  # hard sanity bound; dispatch applies the real policy


class SeriesSign(Enum):
    """Sign of the n(n-1)/4 term in the coefficient recurrence."""

    PLUS = +1.0
    MINUS = -1.0


@dataclass(frozen=True)
class SeriesResult:
    """One summation of the series quadruple at (a, x)."""

    y1: float
    y2: float
    dy1: float
    dy2: float
    terms_used: int
    trunc_estimate: float


@dataclass(frozen=True)
class _SeriesDD:
    """Internal double-double quadruple plus magnitude bookkeeping."""

    y1: tuple
    y2: tuple
    dy1: tuple
    dy2: tuple
    terms_used: int
    trunc_estimate: float
    abs_y1: float   # sum of |term| per accumulator, for cancellation estimates
    abs_y2: float
    abs_dy1: float
    abs_dy2: float


def _sum_y12_dd(a: float, x: float, sign: SeriesSign) -> _SeriesDD:
    if not (math.isfinite(a) and math.isfinite(x)):
        raise DomainError(f"series arguments must be finite, got a={a}, x={x}")
    if abs(x) > _MODERATE_X_MAX:
        raise DomainError(f"|x| = {abs(x)} beyond the series engine bound {_MODERATE_X_MAX}")
    if x == 0.0:
        return _SeriesDD(dd.ONE, dd.ZERO, dd.ZERO, dd.ONE, 2, 0.0, 1.0, 0.0, 0.0, 1.0)

    s = sign.value
    x2 = dd.two_prod(x, x)

    # even chain: A_prev = A_0, A_cur = A_2; p = x^2/2! ; term index n = 2
    ea_prev, ea_cur = dd.ONE, dd.from_float(a)
    ep = dd.div_d(x2, 2.0)
    # odd chain: A_prev = A_1, A_cur = A_3; p = x^3/3! ; term index n = 3
    oa_prev, oa_cur = dd.ONE, dd.from_float(a)
    op = dd.div_d(dd.mul_d(x2, x), 6.0)

    y1 = dd.ONE
    y2 = dd.from_float(x)
    dy1 = dd.ZERO
    dy2 = dd.ONE
    abs_y1, abs_y2, abs_dy1, abs_dy2 = 1.0, abs(x), 0.0, 1.0

    small_streak = 0
    n = 0
    last_terms = (0.0, 0.0, 0.0, 0.0)
    while n < TERM_CAP:
        # even term at power n+2, odd term at power n+3
        te = dd.mul(ea_cur, ep)
        to = dd.mul(oa_cur, op)
        y1 = dd.add(y1, te)
        y2 = dd.add(y2, to)
        # x-derivative terms: A_n x^{n-1}/(n-1)! = term * n / x; the integer
        # factor is exact, so divide in dd rather than premultiplying 1/x
        de = dd.div_d(dd.mul_d(te, float(n + 2)), x)
        do = dd.div_d(dd.mul_d(to, float(n + 3)), x)
        dy1 = dd.add(dy1, de)
        dy2 = dd.add(dy2, do)

        last_terms = (abs(te[0]), abs(to[0]), abs(de[0]), abs(do[0]))
        abs_y1 += last_terms[0]
        abs_y2 += last_terms[1]
        abs_dy1 += last_terms[2]
        abs_dy2 += last_terms[3]

        ok = (
            last_terms[0] <= _STOP * (1.0 + abs(y1[0]))
            and last_terms[1] <= _STOP * (1.0 + abs(y2[0]))
            and last_terms[2] <= _STOP * (1.0 + abs(dy1[0]))
            and last_terms[3] <= _STOP * (1.0 + abs(dy2[0]))
        )
        small_streak = small_streak + 1 if ok else 0
        n += 2
        # advance coefficients: A_{n+2} = a A_n + s n(n-1)/4 A_{n-2}
        ea_prev, ea_cur = ea_cur, dd.add(dd.mul_d(ea_cur, a), dd.mul_d(ea_prev, s * n * (n - 1) / 4.0))
        m = n + 1
        oa_prev, oa_cur = oa_cur, dd.add(dd.mul_d(oa_cur, a), dd.mul_d(oa_prev, s * m * (m - 1) / 4.0))
        # advance powers by x^2/((n+1)(n+2)) resp. x^2/((n+2)(n+3))
        ep = dd.div_d(dd.mul(ep, x2), float((n + 1) * (n + 2)))
        op = dd.div_d(dd.mul(op, x2), float((n + 2) * (n + 3)))
        if small_streak >= 2:
            break
    else:
        partial = SeriesResult(
            dd.to_float(y1), dd.to_float(y2), dd.to_float(dy1), dd.to_float(dy2), n, math.inf
        )
        raise ConvergenceError(
            f"series did not converge within {TERM_CAP} terms at a={a}, x={x}", partial=partial
        )

    # first omitted term of each accumulator bounds the truncation error
    te = dd.mul(ea_cur, ep)
    to = dd.mul(oa_cur, op)
    ax = abs(x)
    trunc = max(abs(te[0]), abs(to[0]), abs(te[0]) * (n + 2) / ax, abs(to[0]) * (n + 3) / ax)
    return _SeriesDD(y1, y2, dy1, dy2, n, trunc, abs_y1, abs_y2, abs_dy1, abs_dy2)


def sum_y12(a: float, x: float, sign: SeriesSign) -> SeriesResult:
    """Sum the even/odd series pair and their term-wise x-derivatives.

    Returns the quadruple (y1, y2, y1', y2') rounded to doubles, the number of
    power indices consumed, and an absolute bound on the first omitted term.
    Raises DomainError on non-finite input and ConvergenceError (carrying the
    partial quadruple) if the term cap trips, which signals a dispatch bug or
    a far-out-of-regime call rather than a mathematical limit.
    """
    r = _sum_y12_dd(a, x, sign)
    return SeriesResult(
        dd.to_float(r.y1),
        dd.to_float(r.y2),
        dd.to_float(r.dy1),
        dd.to_float(r.dy2),
        r.terms_used,
        r.trunc_estimate,
    )
