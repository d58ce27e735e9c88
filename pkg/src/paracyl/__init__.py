"""Weber parabolic cylinder functions U(a,x), V(a,x), W(a,x) in double precision.

Moderate arguments go through the even/odd power series evaluated in internal
double-double arithmetic; large arguments through optimally truncated
asymptotic expansions.  See the README for accuracy notes, the closed-form
cross-check layer, and the CLI/HTTP surfaces.
"""

from .asymptotic import (
    AsymptoticTerms,
    WAsymptoticContext,
    dpulx,
    dpvlx,
    dpwlx,
    dpwlx_neg,
    pulx,
    pvlx,
    pwlx,
    pwlx_neg,
    um_vm,
    w_context,
)
from .cgamma import (
    BERNOULLI_TABLE,
    gamma,
    gamma_arg,
    gamma_modulus,
    log_gamma,
    recip_gamma_real,
)
from .closed_forms import (
    BesselKind,
    bessel_series,
    erfc_real,
    u_halfodd,
    uv_integer_a,
    v_halfodd,
    w_zero_a,
)
from .dispatch import dispatch
from .errors import ConvergenceError, DomainError, ParacylError, RangeError, RegimeError
from .pcf_uv import UVAnchors, dpu, dpv, pu, pv, uv_at_zero
from .pcf_w import WPrefactors, dpw, pw, w_at_zero
from .reference_tables import ReferenceFixture, fixtures, selftest
from .results import EvalResult, Regime
from .series_core import SeriesResult, SeriesSign, sum_y12

__version__ = "1.0.0"

__all__ = [
    "AsymptoticTerms",
    "BERNOULLI_TABLE",
    "BesselKind",
    "ConvergenceError",
    "DomainError",
    "EvalResult",
    "ParacylError",
    "RangeError",
    "ReferenceFixture",
    "Regime",
    "RegimeError",
    "SeriesResult",
    "SeriesSign",
    "UVAnchors",
    "WAsymptoticContext",
    "WPrefactors",
    "bessel_series",
    "dispatch",
    "dpu",
    "dpulx",
    "dpv",
    "dpvlx",
    "dpw",
    "dpwlx",
    "dpwlx_neg",
    "erfc_real",
    "fixtures",
    "gamma",
    "gamma_arg",
    "gamma_modulus",
    "log_gamma",
    "pu",
    "pulx",
    "pv",
    "pvlx",
    "pw",
    "pwlx",
    "pwlx_neg",
    "recip_gamma_real",
    "selftest",
    "sum_y12",
    "u_halfodd",
    "um_vm",
    "uv_at_zero",
    "uv_integer_a",
    "v_halfodd",
    "w_at_zero",
    "w_context",
    "w_zero_a",
]
