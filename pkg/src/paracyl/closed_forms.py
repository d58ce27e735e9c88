"""Closed-form layer: half-odd-a exponential forms, erfc, fractional-order
Bessel combinations at integer a, and the a = 0 forms of W.

These exist as independent cross-checks of the series engine and as fast
paths; the dispatcher never routes to them automatically.

The integer-a combinations come from a table whose printed exponents were
partly ambiguous; they were reconstructed by requiring numerical agreement
with the series route over several x (the fitted exponents came out exactly
(x/2)^{|a|+1/2} with the printed rational prefactors, and only the a = 0 row
of V had its 1/2 exponent dropped in print):

    U(0,x)  = pi^{-1/2} (x/2)^{1/2} K_{1/4}          V(0,x)  = (1/2)(x/2)^{1/2} GI_{1/4}
    U(1,x)  = 2 pi^{-1/2} (x/2)^{3/2} (K_{3/4}-K_{1/4})
                                                     V(1,x)  = (1/2)(x/2)^{3/2} (GI_{1/4}-GI_{3/4})
    U(2,x)  = (4/3) pi^{-1/2} (x/2)^{5/2} (2K_{1/4}-3K_{3/4}+K_{5/4})
                                                     V(2,x)  = (1/2)(x/2)^{5/2} (2GI_{1/4}-3GI_{3/4}+GI_{5/4})
    U(-1,x) = pi^{-1/2} (x/2)^{3/2} (K_{1/4}+K_{3/4})
                                                     V(-1,x) = (x/2)^{3/2} (GI_{1/4}+GI_{3/4})
    U(-2,x) = pi^{-1/2} (x/2)^{5/2} (2K_{1/4}+3K_{3/4}-K_{5/4})
                                                     V(-2,x) = (2/3)(x/2)^{5/2} (2GI_{1/4}+3GI_{3/4}-GI_{5/4})

with every Bessel function taken at argument x^2/4 and the gothic combination
GI_nu = (I_{-nu} + I_nu)/cos(pi nu) (K_nu = pi (I_{-nu} - I_nu)/(2 sin(pi nu));
both are even in nu).
"""

from __future__ import annotations

import math
from enum import Enum

from . import _dd as dd
from .errors import DomainError, RangeError

_SQRT_HALF_PI = math.sqrt(math.pi / 2.0)
_SQRT_TWO_OVER_PI = math.sqrt(2.0 / math.pi)

_ERFC_SWITCH = 3.0
_BESSEL_Z_MAX = 30.0
_BESSEL_ORDERS = (0.25, 0.75, 1.25)

# polynomial coefficient rows, highest power first
_U_POLYS = {
    -0.5: (1.0,),
    -1.5: (1.0, 0.0),
    -2.5: (1.0, 0.0, -1.0),
    -3.5: (1.0, 0.0, -3.0, 0.0),
    -4.5: (1.0, 0.0, -6.0, 0.0, 3.0),
}
_V_POLYS = {
    0.5: (1.0,),
    1.5: (1.0, 0.0),
    2.5: (1.0, 0.0, 1.0),
    3.5: (1.0, 0.0, 3.0, 0.0),
    4.5: (1.0, 0.0, 6.0, 0.0, 3.0),
}


class BesselKind(Enum):
    J = "J"
    I = "I"  # noqa: E741 - standard Bessel letter
    K = "K"
    GOTHIC_I = "GothicI"


def _exp_mhalf_sq(x: float) -> float:
    """e^{-x^2/2} with the squaring done in dd (error matters at x ~ 10)."""
    s = dd.two_prod(x, x)
    return math.exp(-0.5 * s[0]) * (1.0 - 0.5 * s[1])


def _erf_series(x: float) -> float:
    """1 - erf(x) for |x| <= 3 with dd accumulation of the alternating series."""
    x_dd = dd.from_float(x)
    x2 = dd.two_prod(x, x)
    t = x_dd  # x^{2k+1}/k!
    s = x_dd
    for k in range(1, 60):
        t = dd.div_d(dd.mul(t, x2), -float(k))
        s = dd.add(s, dd.div_d(t, float(2 * k + 1)))
        if abs(t[0]) < 1e-40 * abs(s[0]):
            break
    # s = sum (-1)^k x^{2k+1}/(k! (2k+1)); erfc = 1 - 2/sqrt(pi) * s
    erf = dd.div(dd.mul_d(s, 2.0), dd.SQRT_PI)
    return dd.to_float(dd.d_sub(1.0, erf))


def _erfc_cf(x: float) -> float:
    """Lentz continued fraction for x > 3: sqrt(pi) e^{x^2} erfc(x) = 1/(x + K(n/2 / x))."""
    tiny = 1e-300
    b = x
    f = b if b != 0.0 else tiny
    c = f
    d = 0.0
    for n in range(1, 200):
        an = 0.5 * n
        d = b + an * d
        if d == 0.0:
            d = tiny
        c = b + an / c
        if c == 0.0:
            c = tiny
        d = 1.0 / d
        delta = c * d
        f *= delta
        if abs(delta - 1.0) < 1e-17:
            break
    # erfc(x) = e^{-x^2} / (sqrt(pi) * f); square x in dd to keep e^{-x^2} honest
    s = dd.two_prod(x, x)
    return math.exp(-s[0]) * (1.0 - s[1]) / (math.sqrt(math.pi) * f)


def erfc_real(x: float) -> float:
    """Complementary error function, ~1e-14 relative for |x| <= 10."""
    if not math.isfinite(x):
        raise DomainError(f"erfc needs finite x, got {x}")
    if x < 0.0:
        return 2.0 - erfc_real(-x)
    if x <= _ERFC_SWITCH:
        return _erf_series(x)
    return _erfc_cf(x)


def _poly_eval(coeffs, x: float):
    v = 0.0
    d = 0.0
    for c in coeffs:
        d = d * x + v
        v = v * x + c
    return v, d


def u_halfodd(a: float, x: float):
    """(U(a,x), U'(a,x)) at half-odd a in {-4.5, ..., 2.5}; closed forms."""
    if a in _U_POLYS:
        p, dp = _poly_eval(_U_POLYS[a], x)
        e = math.exp(-x * x / 4.0)
        return p * e, (dp - 0.5 * x * p) * e
    e = math.exp(-x * x / 4.0)
    if a == 0.5:
        u = _SQRT_HALF_PI * math.exp(x * x / 4.0) * erfc_real(x / math.sqrt(2.0))
        return u, 0.5 * x * u - e
    if a == 1.5:
        u05 = u_halfodd(0.5, x)[0]
        return -x * u05 + e, -(0.5 * x * x + 1.0) * u05 + 0.5 * x * e
    if a == 2.5:
        u05 = u_halfodd(0.5, x)[0]
        return (
            0.5 * (x * x + 1.0) * u05 - 0.5 * x * e,
            0.25 * x * (x * x + 5.0) * u05 - (0.25 * x * x + 1.0) * e,
        )
    raise DomainError(f"no closed form for U at a = {a}")


def v_halfodd(a: float, x: float):
    """(V(a,x), V'(a,x)) at half-odd a in {0.5, ..., 4.5}; closed forms."""
    if a not in _V_POLYS:
        raise DomainError(f"no closed form for V at a = {a}")
    p, dp = _poly_eval(_V_POLYS[a], x)
    e = _SQRT_TWO_OVER_PI * math.exp(x * x / 4.0)
    return p * e, (dp + 0.5 * x * p) * e


def _bessel_ji_dd(kind_sign: float, nu: float, z: float):
    """Ascending series for J (kind_sign=-1) or I (+1) at fractional order.

    sum_k (+-1)^k (z/2)^{nu+2k} / (k! Gamma(nu+k+1)), accumulated in dd since
    J's alternating sum cancels ~e^{2z} near the top of the supported range.
    """
    half = 0.5 * z
    lead = dd.mul(
        dd.exp(dd.mul_d(dd.ln(dd.from_float(half)), nu)),
        dd.recip_gamma(dd.from_float(nu + 1.0)),
    )
    q = dd.two_prod(half, half)
    t = lead
    s = lead
    for k in range(1, 400):
        t = dd.div_d(dd.mul(t, q), kind_sign * k * (nu + k))
        s = dd.add(s, t)
        if abs(t[0]) <= 1e-34 * abs(s[0]):
            return s
    raise RangeError(f"Bessel series did not converge at nu={nu}, z={z}")


def bessel_series(kind: BesselKind, nu: float, z: float) -> float:
    """J, I, K or GothicI of fractional order at z in (0, 30].

    Supported orders: +-1/4, +-3/4, +-5/4 (K and GothicI only non-integer,
    and both even in nu).
    """
    if not (z > 0.0):
        raise DomainError(f"Bessel argument must be positive, got {z}")
    if z > _BESSEL_Z_MAX:
        raise RangeError(f"Bessel series limited to z <= {_BESSEL_Z_MAX}, got {z}")
    if abs(nu) not in _BESSEL_ORDERS:
        raise DomainError(f"unsupported order nu = {nu}")
    if kind is BesselKind.J:
        return dd.to_float(_bessel_ji_dd(-1.0, nu, z))
    if kind is BesselKind.I:
        return dd.to_float(_bessel_ji_dd(+1.0, nu, z))
    nu = abs(nu)  # K and GothicI are even in the order
    i_neg = _bessel_ji_dd(+1.0, -nu, z)
    i_pos = _bessel_ji_dd(+1.0, nu, z)
    if kind is BesselKind.K:
        num = dd.mul(dd.PI, dd.sub(i_neg, i_pos))
        return dd.to_float(dd.div(num, dd.mul_d(dd.sinpi(dd.from_float(nu)), 2.0)))
    return dd.to_float(dd.div(dd.add(i_neg, i_pos), dd.cospi(dd.from_float(nu))))


def _k4(j: int, z: float):
    return _bessel_ji_dd(+1.0, -j / 4.0, z), _bessel_ji_dd(+1.0, j / 4.0, z)


def _kv(j: int, z: float):
    i_neg, i_pos = _k4(j, z)
    num = dd.mul(dd.PI, dd.sub(i_neg, i_pos))
    return dd.div(num, dd.mul_d(dd.sinpi(dd.from_float(j / 4.0)), 2.0))


def _gi(j: int, z: float):
    i_neg, i_pos = _k4(j, z)
    return dd.div(dd.add(i_neg, i_pos), dd.cospi(dd.from_float(j / 4.0)))


def uv_integer_a(a: int, x: float):
    """(U(a,x), V(a,x)) from the reconstructed Bessel forms, a in [-2, 2]."""
    if a not in (-2, -1, 0, 1, 2):
        raise DomainError(f"integer-a closed forms cover a in [-2,2], got {a}")
    if not (x > 0.0):
        raise DomainError(f"integer-a closed forms need x > 0, got {x}")
    z = x * x / 4.0
    half = dd.div_d(dd.from_float(x), 2.0)
    pw = dd.exp(dd.mul_d(dd.ln(half), abs(a) + 0.5))
    k1, k3, k5 = _kv(1, z), _kv(3, z), _kv(5, z)
    g1, g3, g5 = _gi(1, z), _gi(3, z), _gi(5, z)
    rt_pi = dd.SQRT_PI
    if a == 0:
        u = dd.div(dd.mul(pw, k1), rt_pi)
        v = dd.mul_d(dd.mul(pw, g1), 0.5)
    elif a == 1:
        u = dd.mul_d(dd.div(dd.mul(pw, dd.sub(k3, k1)), rt_pi), 2.0)
        v = dd.mul_d(dd.mul(pw, dd.sub(g1, g3)), 0.5)
    elif a == 2:
        br = dd.add(dd.sub(dd.mul_d(k1, 2.0), dd.mul_d(k3, 3.0)), k5)
        u = dd.mul_d(dd.div(dd.mul(pw, br), rt_pi), 4.0 / 3.0)
        brg = dd.add(dd.sub(dd.mul_d(g1, 2.0), dd.mul_d(g3, 3.0)), g5)
        v = dd.mul_d(dd.mul(pw, brg), 0.5)
    elif a == -1:
        u = dd.div(dd.mul(pw, dd.add(k1, k3)), rt_pi)
        v = dd.mul(pw, dd.add(g1, g3))
    else:  # a == -2
        br = dd.sub(dd.add(dd.mul_d(k1, 2.0), dd.mul_d(k3, 3.0)), k5)
        u = dd.div(dd.mul(pw, br), rt_pi)
        brg = dd.sub(dd.add(dd.mul_d(g1, 2.0), dd.mul_d(g3, 3.0)), g5)
        v = dd.mul_d(dd.mul(pw, brg), 2.0 / 3.0)
    return dd.to_float(u), dd.to_float(v)


def w_zero_a(x: float):
    """(W(0,x), W(0,-x), W'(0,x), W'(0,-x)) via J_{+-1/4}, J_{+-3/4}.

        W(0,+-x) = 2^{-5/4} sqrt(pi x) [J_{-1/4} -+ J_{1/4}](x^2/4)
        dW(0,+-x)/dx = -2^{-9/4} x sqrt(pi x) [J_{3/4} +- J_{-3/4}](x^2/4)

    Derivatives are reported with respect to the signed argument, i.e.
    dw_neg = W'(0,t) at t = -x, which negates the second line's minus branch.
    """
    if not (x > 0.0):
        raise DomainError(f"w_zero_a needs x > 0, got {x}")
    z = x * x / 4.0
    jm1 = dd.to_float(_bessel_ji_dd(-1.0, -0.25, z))
    jp1 = dd.to_float(_bessel_ji_dd(-1.0, 0.25, z))
    jm3 = dd.to_float(_bessel_ji_dd(-1.0, -0.75, z))
    jp3 = dd.to_float(_bessel_ji_dd(-1.0, 0.75, z))
    amp = math.sqrt(math.pi * x)
    w_pos = 2.0 ** -1.25 * amp * (jm1 - jp1)
    w_neg = 2.0 ** -1.25 * amp * (jm1 + jp1)
    dw_pos = -(2.0 ** -2.25) * x * amp * (jp3 + jm3)
    dw_neg = (2.0 ** -2.25) * x * amp * (jp3 - jm3)
    return w_pos, w_neg, dw_pos, dw_neg
