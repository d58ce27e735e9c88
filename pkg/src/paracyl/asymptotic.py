"""Large-argument evaluation of U, V, W and derivatives.

U and V use the alternating/all-plus bracket expansions in inverse powers of
2x^2 whose factors rise (a+1/2)(a+3/2)... resp. fall (a-1/2)(a-3/2)...; W uses
the amplitude/phase form

    W(a,x)  = sqrt(2k/x)  [ s1 cos(gamma) - s2 sin(gamma) ]
    W(a,-x) = sqrt(2/(kx))[ s1 sin(gamma) + s2 cos(gamma) ]

with k = sqrt(1+e^{2 pi a}) - e^{pi a}, gamma = x^2/4 - a ln x + pi/4 + phi/2
and phi = arg Gamma(1/2 + i a).  The s1/s2 tails are generated as one complex
series: s1 + i s2 = sum_j c_j (-i / (2x^2))^j / j! with c_j the rising complex
product Gamma(2j + ia + 1/2)/Gamma(ia + 1/2), which reproduces the printed
four-term sign pattern (+v2, -u4, -v6, +u8 / -u2, -v4, +u6, +v8) without
hand-unrolling it.

All series are truncated optimally: summation stops before the first term
whose magnitude does not decrease, at most MAX_TERMS terms, and the magnitude
of the first omitted term is the reported error bound.  The trig phase is
reduced modulo 2 pi in double-double, since x^2/4 alone reaches hundreds of
radians inside the supported range.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from . import _dd as dd
from .cgamma import gamma_arg, recip_gamma_real
from .errors import DomainError, RangeError, RegimeError
from .results import EvalResult, Regime

MAX_TERMS = 20
A_MAX = 25.0

_EXP_OVERFLOW = 709.782712893384


@dataclass(frozen=True)
class AsymptoticTerms:
    """Truncated s1/s2 sums, their x-derivatives, and truncation bookkeeping."""

    s1: float
    s2: float
    ds1: float
    ds2: float
    terms_used: int
    first_omitted: float


@dataclass(frozen=True)
class WAsymptoticContext:
    """Amplitude factor k (and 1/k), phase gamma, and gamma-argument phi."""

    k: float
    k_inv: float
    gamma_phase: float
    phi: float


def _check_x_positive(x: float) -> None:
    if not (x > 0.0):
        raise DomainError(f"asymptotic route needs x > 0, got {x}")


def _bracket(a: float, x: float, rising: bool):
    """Optimally truncated bracket sum S and its term-wise derivative dS.

    rising=True gives the alternating U series with factors (a+1/2+l);
    rising=False the all-plus V series with factors (a-1/2-l).
    """
    inv2x2 = 1.0 / (2.0 * x * x)
    s = 1.0
    ds = 0.0
    t = 1.0
    prev = abs(t)
    used = 1
    first_omitted = 0.0
    for j in range(1, MAX_TERMS):
        if rising:
            t *= -(a + 0.5 + 2 * (j - 1)) * (a + 1.5 + 2 * (j - 1)) * inv2x2 / j
        else:
            t *= (a - 0.5 - 2 * (j - 1)) * (a - 1.5 - 2 * (j - 1)) * inv2x2 / j
        if t == 0.0:
            first_omitted = 0.0  # terminating bracket: exact polynomial
            break
        if abs(t) >= prev:
            if j == 1:
                raise RegimeError(
                    f"asymptotic terms not decreasing at a={a}, x={x}: argument too small"
                )
            first_omitted = abs(t)
            break
        s += t
        ds += t * (-2.0 * j / x)
        prev = abs(t)
        used = j + 1
        first_omitted = abs(t)  # bound if the cap stops us
    return s, ds, used, first_omitted


def _uv_prefactor(a: float, x: float, sign: float):
    """x^{sign*a - 1/2} e^{sign*x^2/4} through logs; RangeError on overflow."""
    lp = (sign * a - 0.5) * math.log(x) + sign * x * x / 4.0
    if lp > _EXP_OVERFLOW:
        raise RangeError(f"prefactor overflows double range at a={a}, x={x}")
    return math.exp(lp)


def _pulx_parts(a: float, x: float):
    _check_x_positive(x)
    s, ds, used, omitted = _bracket(a, x, rising=True)
    pref = _uv_prefactor(a, x, -1.0)
    val = pref * s
    der = pref * ((-(a + 0.5) / x - 0.5 * x) * s + ds)
    est = pref * omitted + 5e-16 * abs(val)
    return val, der, est, used


def pulx(a: float, x: float) -> EvalResult:
    """U(a,x) for large x from the alternating bracket expansion."""
    val, der, est, _ = _pulx_parts(a, x)
    return EvalResult(val, der, est, Regime.LARGE_ARG_ASYMPTOTIC)


def dpulx(a: float, x: float) -> float:
    """d/dx of U(a,x), large-x route."""
    return _pulx_parts(a, x)[1]


def _pvlx_parts(a: float, x: float):
    _check_x_positive(x)
    s, ds, used, omitted = _bracket(a, x, rising=False)
    pref = math.sqrt(2.0 / math.pi) * _uv_prefactor(a, x, +1.0)
    val = pref * s
    der = pref * (((a - 0.5) / x + 0.5 * x) * s + ds)
    est = pref * omitted + 5e-16 * abs(val)
    return val, der, est, used


def pvlx(a: float, x: float) -> EvalResult:
    """V(a,x) for large x from the all-plus bracket expansion."""
    val, der, est, _ = _pvlx_parts(a, x)
    return EvalResult(val, der, est, Regime.LARGE_ARG_ASYMPTOTIC)


def dpvlx(a: float, x: float) -> float:
    """d/dx of V(a,x), large-x route."""
    return _pvlx_parts(a, x)[1]


def um_vm(a: float, m: int) -> complex:
    """(u_m, v_m): the ratio Gamma(m + ia + 1/2)/Gamma(ia + 1/2) for even m.

    Evaluated as the finite rising product (1/2 + ia)(3/2 + ia)...(m - 1/2 + ia);
    no gamma evaluations are involved.
    """
    if not isinstance(m, int) or m <= 0 or m % 2:
        raise DomainError(f"m must be a positive even integer, got {m!r}")
    p = complex(1.0, 0.0)
    for l in range(m):
        p *= complex(l + 0.5, a)
    return p


def _k_pair(a: float):
    # each from its own stable closed form; never 1/k, never e^{2 pi a}
    if a >= 0.0:
        t = math.exp(-math.pi * a)  # <= 1
        s = 1.0 + math.sqrt(1.0 + t * t)
        return t / s, s / t
    u = math.exp(math.pi * a)  # < 1
    r = math.sqrt(1.0 + u * u)
    return r - u, r + u


def _gamma_phase_dd(a: float, x: float, phi: float):
    """x^2/4 - a ln x + pi/4 + phi/2, reduced mod 2 pi in double-double."""
    g = dd.div_d(dd.two_prod(x, x), 4.0)
    g = dd.sub(g, dd.mul_d(dd.from_float(math.log(x)), a))
    g = dd.add(g, dd.div_d(dd.PI, 4.0))
    g = dd.add_d(g, 0.5 * phi)
    full = dd.to_float(g)
    m = round(full / dd.TWO_PI[0])
    red = dd.sub(g, dd.mul_d(dd.TWO_PI, float(m)))
    return full, dd.to_float(red)


def w_context(a: float, x: float) -> WAsymptoticContext:
    """Amplitude/phase context of the W expansion at (a, x)."""
    if abs(a) > A_MAX:
        raise RangeError(f"|a| = {abs(a)} outside supported range {A_MAX}")
    _check_x_positive(x)
    k, k_inv = _k_pair(a)
    phi = gamma_arg(complex(0.5, a)) if a != 0.0 else 0.0
    full, _ = _gamma_phase_dd(a, x, phi)
    return WAsymptoticContext(k=k, k_inv=k_inv, gamma_phase=full, phi=phi)


def _s_terms(a: float, x: float) -> AsymptoticTerms:
    # t_0 = 1; t_j = t_{j-1} * (2j-3/2+ia)(2j-1/2+ia) * (-i/(2x^2)) / j
    q = complex(0.0, -1.0) / (2.0 * x * x)
    term = complex(1.0, 0.0)
    s = complex(1.0, 0.0)
    ds = complex(0.0, 0.0)
    prev = 1.0
    used = 1
    first_omitted = 0.0
    for j in range(1, MAX_TERMS):
        term = term * complex(2 * (j - 1) + 0.5, a) * complex(2 * (j - 1) + 1.5, a) * q / j
        mag = abs(term)
        if mag >= prev:
            if j == 1:
                raise RegimeError(
                    f"W asymptotic terms not decreasing at a={a}, x={x}: argument too small"
                )
            first_omitted = mag
            break
        s += term
        ds += term * (-2.0 * j / x)
        prev = mag
        used = j + 1
        first_omitted = mag
    return AsymptoticTerms(s.real, s.imag, ds.real, ds.imag, used, first_omitted)


def _w_parts(a: float, x: float):
    ctx = w_context(a, x)
    t = _s_terms(a, x)
    phi = ctx.phi
    _, red = _gamma_phase_dd(a, x, phi)
    cg, sg = math.cos(red), math.sin(red)
    gp = 0.5 * x - a / x
    amp_pos = math.sqrt(2.0 * ctx.k / x)
    amp_neg = math.sqrt(2.0 * ctx.k_inv / x)
    # common product-rule brackets
    b1 = t.ds1 - t.s2 * gp - t.s1 / (2.0 * x)
    b2 = t.ds2 + t.s1 * gp - t.s2 / (2.0 * x)
    w_pos = amp_pos * (t.s1 * cg - t.s2 * sg)
    dw_pos = amp_pos * (b1 * cg - b2 * sg)
    w_neg = amp_neg * (t.s1 * sg + t.s2 * cg)
    dw_neg = -amp_neg * (b1 * sg + b2 * cg)  # derivative in the argument t = -x
    est_pos = amp_pos * (t.first_omitted * (1.0 + abs(gp)) + 5e-16 * (abs(t.s1) + abs(t.s2)))
    est_neg = amp_neg * (t.first_omitted * (1.0 + abs(gp)) + 5e-16 * (abs(t.s1) + abs(t.s2)))
    return w_pos, dw_pos, est_pos, w_neg, dw_neg, est_neg


def pwlx(a: float, x: float) -> EvalResult:
    """W(a,x) for large positive x from the amplitude/phase expansion."""
    w_pos, dw_pos, est, _, _, _ = _w_parts(a, x)
    return EvalResult(w_pos, dw_pos, est, Regime.LARGE_ARG_ASYMPTOTIC)


def pwlx_neg(a: float, x: float) -> EvalResult:
    """W(a,-x) for large positive x (the companion second line of the pair).

    value and derivative are reported with respect to the signed argument
    t = -x, i.e. derivative = dW/dt at t = -x.
    """
    _, _, _, w_neg, dw_neg, est = _w_parts(a, x)
    return EvalResult(w_neg, dw_neg, est, Regime.LARGE_ARG_ASYMPTOTIC)


def dpwlx(a: float, x: float) -> float:
    """d/dx of W(a,x), large-x route."""
    return _w_parts(a, x)[1]


def dpwlx_neg(a: float, x: float) -> float:
    """dW/dt at t = -x, large-x route."""
    return _w_parts(a, x)[4]


def _u_neg_from_connections(a: float, x: float):
    """U(a,-x) and d/dt U(a,t)|_{t=-x} for large x > 0 via the V connection.

    Pole-free rewrite of V(a,x) = Gamma(1/2+a)[sin(pi a)U(a,x) + U(a,-x)]/pi:
        U(a,-x) = pi V(a,x) rgamma(a+1/2) + cospi(a+1/2) U(a,x).
    """
    u, du, eu, _ = _pulx_parts(a, x)
    v, dv, ev, _ = _pvlx_parts(a, x)
    rg = recip_gamma_real(a + 0.5)
    c = _cospi(a + 0.5)
    val = math.pi * v * rg + c * u
    der = -(math.pi * dv * rg + c * du)
    est = math.pi * abs(rg) * ev + abs(c) * eu + 5e-16 * abs(val)
    return val, der, est


def _v_neg_from_connections(a: float, x: float):
    """V(a,-x) and derivative for large x > 0, pole-free form of Eq-12-type
    connection: V(a,-x) = U(a,x) sinpi(a+1/2) rgamma(1/2-a) - cospi(a+1/2) V(a,x)."""
    u, du, eu, _ = _pulx_parts(a, x)
    v, dv, ev, _ = _pvlx_parts(a, x)
    s = _sinpi(a + 0.5) * recip_gamma_real(0.5 - a)
    c = _cospi(a + 0.5)
    val = u * s - c * v
    der = -(du * s - c * dv)
    est = abs(s) * eu + abs(c) * ev + 5e-16 * abs(val)
    return val, der, est


def _sinpi(t: float) -> float:
    n = round(t)
    r = t - n
    s = math.sin(math.pi * r)
    return -s if (n % 2) else s


def _cospi(t: float) -> float:
    return _sinpi(t + 0.5)
