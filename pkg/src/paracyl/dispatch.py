"""Automatic regime dispatch for single-point evaluation.

Policy: the convergent series carries |x| <= 6 at full quality; the divergent
expansions take over at |x| >= max(8, 2|a| + 6); in between the series is
still used but its accuracy estimate, which tracks the ratio of accumulated
term magnitude to result, grows honestly with the cancellation.  Negative x
needs no special handling in the series regimes (the series are parity-exact
in x); in the asymptotic regime W has its own second expansion line while U
and V go through pole-free connection identities evaluated at |x|.
"""

from __future__ import annotations

import math
from typing import Optional

from . import asymptotic, closed_forms, pcf_uv, pcf_w
from .errors import DomainError, RangeError, RegimeError
from .results import EvalResult, Regime

A_MAX = 25.0
SERIES_X_MAX = 6.0


def asymptotic_x_min(a: float) -> float:
    """Left edge of the pure asymptotic regime at parameter a."""
    return max(8.0, 2.0 * abs(a) + 6.0)


def _auto_regime(a: float, x: float) -> Regime:
    if abs(x) >= asymptotic_x_min(a):
        return Regime.LARGE_ARG_ASYMPTOTIC
    return Regime.MODERATE_SERIES


def _eval_series(function: str, a: float, x: float) -> EvalResult:
    if function == "U":
        return pcf_uv.pu(a, x)
    if function == "V":
        return pcf_uv.pv(a, x)
    return pcf_w.pw(a, x)


def _eval_asymptotic(function: str, a: float, x: float) -> EvalResult:
    if x > 0.0:
        if function == "U":
            return asymptotic.pulx(a, x)
        if function == "V":
            return asymptotic.pvlx(a, x)
        return asymptotic.pwlx(a, x)
    if x < 0.0:
        if function == "W":
            return asymptotic.pwlx_neg(a, -x)
        if function == "U":
            v, d, e = asymptotic._u_neg_from_connections(a, -x)
        else:
            v, d, e = asymptotic._v_neg_from_connections(a, -x)
        return EvalResult(v, d, e, Regime.LARGE_ARG_ASYMPTOTIC)
    raise RegimeError("asymptotic regime undefined at x = 0")


def _eval_closed_form(function: str, a: float, x: float) -> EvalResult:
    if function == "U" and (a in closed_forms._U_POLYS or a in (0.5, 1.5, 2.5)):
        v, d = closed_forms.u_halfodd(a, x)
        return EvalResult(v, d, 1e-14 * abs(v), Regime.CLOSED_FORM)
    if function == "V" and a in closed_forms._V_POLYS:
        v, d = closed_forms.v_halfodd(a, x)
        return EvalResult(v, d, 1e-14 * abs(v), Regime.CLOSED_FORM)
    if function == "W" and a == 0.0 and x != 0.0:
        w_pos, w_neg, dw_pos, dw_neg = closed_forms.w_zero_a(abs(x))
        if x > 0.0:
            return EvalResult(w_pos, dw_pos, 1e-14 * abs(w_pos), Regime.CLOSED_FORM)
        return EvalResult(w_neg, dw_neg, 1e-14 * abs(w_neg), Regime.CLOSED_FORM)
    raise RegimeError(f"no closed form available for {function} at a={a}, x={x}")


def dispatch(
    function: str, a: float, x: float, forced_regime: Optional[Regime] = None
) -> EvalResult:
    """Evaluate U, V or W with automatic or forced regime selection.

    Raises RangeError for |a| > 25, DomainError for bad inputs, RegimeError
    when a forced regime is invalid at (a, x), and ConvergenceError if the
    series term cap trips (deep in the gap at large |a|; forcing the
    asymptotic regime is the workaround there).
    """
    if function not in ("U", "V", "W"):
        raise DomainError(f"function must be U, V or W, got {function!r}")
    if not (math.isfinite(a) and math.isfinite(x)):
        raise DomainError(f"arguments must be finite, got a={a}, x={x}")
    if abs(a) > A_MAX:
        raise RangeError(f"|a| = {abs(a)} outside supported range {A_MAX}")
    regime = forced_regime or _auto_regime(a, x)
    if regime is Regime.MODERATE_SERIES:
        return _eval_series(function, a, x)
    if regime is Regime.LARGE_ARG_ASYMPTOTIC:
        return _eval_asymptotic(function, a, x)
    return _eval_closed_form(function, a, x)
