"""Arbitrary-precision reference values for the parabolic cylinder suite.

This generator re-derives every quantity independently of the double-precision
package it tests: the even/odd series pairs are summed from their three-term
coefficient recurrences in mpmath arbitrary-precision arithmetic, the
zero-point anchors and gamma moduli go through mpmath's gamma, and erfc and
the Bessel values come from mpmath's own implementations.  No code is shared
with the consumer.

Every emitted value is computed twice, at the working precision and at ten
extra digits; the working precision is raised until the two runs agree to
(requested digits + 3), which automatically absorbs the cancellation of the
series representation at large x (about 2 digits per unit of x^2/4 for the
decaying solutions).  Emitted strings carry the requested number of
significant digits (30 by default).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence

import mpmath as mp

FUNCTIONS = ("U", "V", "W", "y1p", "y1m", "gamma_mod", "gamma_arg", "erfc", "besselJ", "besselI")

_SERIES_CAP = 2000


class PrecisionError(RuntimeError):
    """Raised when re-summation at higher precision fails to stabilise."""


@dataclass(frozen=True)
class OracleRequest:
    """One reference point: which quantity, at which (a, x), how many digits.

    For gamma_mod/gamma_arg the pair (a, x) is the complex argument a + i x;
    for besselJ/besselI it is (order, argument); for erfc only x is used.
    """

    function: str
    a: float = 0.0
    x: float = 0.0
    precision_digits: int = 30

    def __post_init__(self):
        if self.function not in FUNCTIONS:
            raise ValueError(f"unknown function {self.function!r}")
        if self.precision_digits < 30:
            raise ValueError("precision_digits must be >= 30")


def _series_pair(a, x, sign):
    """y1, y2 of the even/odd series with A_{n+2} = a A_n + sign*n(n-1)/4 A_{n-2}."""
    a = mp.mpf(a)
    x = mp.mpf(x)
    tol = mp.mpf(10) ** (-(mp.mp.dps + 5))
    x2 = x * x
    # even chain
    y1 = mp.mpf(1)
    prev_c, cur_c = mp.mpf(1), a
    p = x2 / 2
    n = 0
    while n < _SERIES_CAP:
        term = cur_c * p
        y1 += term
        n += 2
        prev_c, cur_c = cur_c, a * cur_c + sign * mp.mpf(n * (n - 1)) / 4 * prev_c
        p = p * x2 / ((n + 1) * (n + 2))
        if abs(term) <= tol * (1 + abs(y1)) and abs(cur_c * p) <= tol * (1 + abs(y1)):
            break
    else:
        raise PrecisionError(f"even series did not converge at a={a}, x={x}")
    # odd chain
    y2 = x
    prev_c, cur_c = mp.mpf(1), a
    p = x2 * x / 6
    n = 1
    while n < _SERIES_CAP:
        term = cur_c * p
        y2 += term
        n += 2
        prev_c, cur_c = cur_c, a * cur_c + sign * mp.mpf(n * (n - 1)) / 4 * prev_c
        p = p * x2 / ((n + 1) * (n + 2))
        if abs(term) <= tol * (1 + abs(y2)) and abs(cur_c * p) <= tol * (1 + abs(y2)):
            break
    else:
        raise PrecisionError(f"odd series did not converge at a={a}, x={x}")
    return y1, y2


def _value_u(a, x):
    a = mp.mpf(a)
    y1, y2 = _series_pair(a, x, +1)
    u0 = mp.sqrt(mp.pi) * mp.mpf(2) ** (-(a / 2 + mp.mpf(1) / 4)) * mp.rgamma(a / 2 + mp.mpf(3) / 4)
    du0 = -mp.sqrt(mp.pi) * mp.mpf(2) ** (-(a / 2 - mp.mpf(1) / 4)) * mp.rgamma(a / 2 + mp.mpf(1) / 4)
    return u0 * y1 + du0 * y2


def _value_v(a, x):
    a = mp.mpf(a)
    y1, y2 = _series_pair(a, x, +1)
    v0 = mp.mpf(2) ** (a / 2 + mp.mpf(1) / 4) * mp.sinpi(mp.mpf(3) / 4 - a / 2) * mp.rgamma(mp.mpf(3) / 4 - a / 2)
    dv0 = mp.mpf(2) ** (a / 2 + mp.mpf(3) / 4) * mp.sinpi(mp.mpf(1) / 4 - a / 2) * mp.rgamma(mp.mpf(1) / 4 - a / 2)
    return v0 * y1 + dv0 * y2


def _value_w(a, x):
    a = mp.mpf(a)
    y1, y2 = _series_pair(a, x, -1)
    g1 = abs(mp.gamma(mp.mpc(0.25, a / 2)))
    g3 = abs(mp.gamma(mp.mpc(0.75, a / 2)))
    r = mp.sqrt(g1 / g3)
    return mp.mpf(2) ** mp.mpf(-0.75) * (r * y1 - mp.sqrt(2) / r * y2)


def _evaluate(req: OracleRequest):
    f = req.function
    if f == "U":
        return _value_u(req.a, req.x)
    if f == "V":
        return _value_v(req.a, req.x)
    if f == "W":
        return _value_w(req.a, req.x)
    if f == "y1p":
        return _series_pair(req.a, req.x, +1)[0]
    if f == "y1m":
        return _series_pair(req.a, req.x, -1)[0]
    if f == "gamma_mod":
        return abs(mp.gamma(mp.mpc(req.a, req.x)))
    if f == "gamma_arg":
        return mp.arg(mp.gamma(mp.mpc(req.a, req.x)))
    if f == "erfc":
        return mp.erfc(mp.mpf(req.x))
    if f == "besselJ":
        return mp.besselj(mp.mpf(req.a), mp.mpf(req.x))
    return mp.besseli(mp.mpf(req.a), mp.mpf(req.x))


def evaluate_stable(req: OracleRequest):
    """Evaluate with automatic working-precision escalation.

    The value is accepted once runs at wp and wp+10 digits agree to
    precision_digits + 3 significant digits; otherwise the working precision
    grows.  Raises PrecisionError if 220 digits are not enough.
    """
    digits = req.precision_digits
    wp = digits + 15
    zero_floor = mp.mpf(10) ** (-(digits + 8))
    while wp <= digits + 190:
        with mp.workdps(wp):
            v1 = _evaluate(req)
        with mp.workdps(wp + 10):
            v2 = _evaluate(req)
            # exact zeros happen at the polynomial roots of the half-odd rows
            if abs(v1) <= zero_floor and abs(v2) <= zero_floor:
                return mp.mpf(0)
            if v1 == v2 or (v2 != 0 and abs(v1 - v2) <= abs(v2) * mp.mpf(10) ** (-(digits + 3))):
                return +v2
        wp += 25
    raise PrecisionError(f"no stable value for {req} up to wp={wp}")


def format_value(v, digits: int) -> str:
    return mp.nstr(v, digits, strip_zeros=False)


def generate(requests: Iterable[OracleRequest], out_path: Optional[str] = None,
             ) -> List[dict]:
    """Evaluate every request and (optionally) write the fixture JSON."""
    entries = []
    for req in requests:
        v = evaluate_stable(req)
        entries.append(
            {
                "function": req.function,
                "a": req.a,
                "x": req.x,
                "value_30_digits": format_value(v, req.precision_digits),
            }
        )
    if out_path is not None:
        with open(out_path, "w", encoding="utf-8") as f:
            json.dump(entries, f, indent=1)
            f.write("\n")
    return entries


def load_requests(path: str) -> List[OracleRequest]:
    with open(path, "r", encoding="utf-8") as f:
        raw = json.load(f)
    return [OracleRequest(**{k: e[k] for k in ("function", "a", "x", "precision_digits") if k in e}) for e in raw]


def default_requests(digits: int = 30) -> List[OracleRequest]:
    """The standard differential-test set: full (a, x) coverage plus scalars."""
    reqs: List[OracleRequest] = []
    a_grid = (-5.0, -2.5, -1.0, -0.5, 0.0, 0.5, 1.0, 3.5, 5.0)
    x_grid = (0.25, 1.25, 2.5, 4.0, 5.5, 7.0, 8.5, 10.0)  # 1.25 dodges U(-2.5, 1) = 0
    for f in ("U", "V", "W"):
        for a in a_grid:
            for x in x_grid:
                reqs.append(OracleRequest(f, a, x, digits))
    for a, x in ((0.0, 1.0), (2.0, 3.0), (-1.5, 4.5)):
        reqs.append(OracleRequest("y1p", a, x, digits))
        reqs.append(OracleRequest("y1m", a, x, digits))
    for a, x in ((0.25, 0.5), (0.75, 2.5), (0.5, 1.0)):
        reqs.append(OracleRequest("gamma_mod", a, x, digits))
        reqs.append(OracleRequest("gamma_arg", a, x, digits))
    for x in (0.5, 1.0, 3.5, 7.0):
        reqs.append(OracleRequest("erfc", 0.0, x, digits))
    for nu in (-0.25, 0.25, 0.75):
        reqs.append(OracleRequest("besselJ", nu, 2.0, digits))
        reqs.append(OracleRequest("besselI", nu, 2.0, digits))
    return reqs
