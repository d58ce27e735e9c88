"""Double-double (106-bit) arithmetic kernels used by the moderate-regime engine.

A double-double value is an ordinary tuple ``(hi, lo)`` with ``hi + lo`` the
represented number and ``|lo| <= ulp(hi)/2``.  The error-free transformations
(two_sum, two_prod with Dekker splitting) follow the classic QD library of
Hida, Li and Bailey.  Everything here is internal: the public modules take and
return ordinary floats and only route through these kernels so that the big
cancellations of the series representation (up to ~1e11 at the corners of the
supported domain) do not eat the double-precision result.
"""

from __future__ import annotations

import math

DD = tuple  # alias for readability in signatures

_SPLITTER = 134217729.0  # 2**27 + 1

# Frozen two-float expansions of the constants the kernels need.
PI = (3.141592653589793, 1.2246467991473532e-16)
TWO_PI = (6.283185307179586, 2.4492935982947064e-16)
LN2 = (0.6931471805599453, 2.3190468138462996e-17)
HALF_LN_2PI = (0.9189385332046728, -3.8782941580672414e-17)
LN_PI = (1.1447298858494002, 1.0265951162707826e-17)
SQRT_PI = (1.772453850905516, -7.666586499825799e-17)
ZERO = (0.0, 0.0)
ONE = (1.0, 0.0)

# B_{2n} / (2n (2n-1)) for n = 1..10, the Stirling-series weights built from
# the exact Bernoulli rationals B_2 = 1/6 ... B_20 = -174611/330.
STIRLING_COEFFS = (
    (0.08333333333333333, 4.625929269271485e-18),
    (-0.002777777777777778, 1.0601087908747154e-19),
    (0.0007936507936507937, 6.883823317368282e-22),
    (-0.0005952380952380953, 5.36938218754726e-20),
    (0.0008417508417508417, 3.6870174889237694e-20),
    (-0.0019175269175269176, 1.0675702776872475e-19),
    (0.00641025641025641, 2.2240044563805217e-19),
    (-0.029550653594771242, 4.861760957508855e-19),
    (0.17964437236883057, -6.401600482710946e-19),
    (-1.3924322169059011, 1.5837056989230303e-17),
)

# The asymptotic tail after the B_20 term behaves like 13.4/|z|^21, so pushing
# the argument to Re z >= 40 keeps the truncation below ~3e-34.
_STIRLING_SHIFT = 40.0


def two_sum(a: float, b: float):
    s = a + b
    bb = s - a
    return s, (a - (s - bb)) + (b - bb)


def quick_two_sum(a: float, b: float):
    # requires |a| >= |b|
    s = a + b
    return s, b - (s - a)


def _split(a: float):
    t = _SPLITTER * a
    hi = t - (t - a)
    return hi, a - hi


def two_prod(a: float, b: float):
    p = a * b
    ah, al = _split(a)
    bh, bl = _split(b)
    return p, ((ah * bh - p) + ah * bl + al * bh) + al * bl


def from_float(x: float) -> DD:
    return (x, 0.0)


def to_float(a: DD) -> float:
    return a[0] + a[1]


def neg(a: DD) -> DD:
    return (-a[0], -a[1])


def add(a: DD, b: DD) -> DD:
    s1, s2 = two_sum(a[0], b[0])
    t1, t2 = two_sum(a[1], b[1])
    s2 += t1
    s1, s2 = quick_two_sum(s1, s2)
    s2 += t2
    return quick_two_sum(s1, s2)


def add_d(a: DD, b: float) -> DD:
    s1, s2 = two_sum(a[0], b)
    s2 += a[1]
    return quick_two_sum(s1, s2)


def sub(a: DD, b: DD) -> DD:
    return add(a, (-b[0], -b[1]))


def sub_d(a: DD, b: float) -> DD:
    return add_d(a, -b)


def d_sub(a: float, b: DD) -> DD:
    return add_d((-b[0], -b[1]), a)


def mul(a: DD, b: DD) -> DD:
    p1, p2 = two_prod(a[0], b[0])
    p2 += a[0] * b[1] + a[1] * b[0]
    return quick_two_sum(p1, p2)


def mul_d(a: DD, b: float) -> DD:
    p1, p2 = two_prod(a[0], b)
    p2 += a[1] * b
    return quick_two_sum(p1, p2)


def div(a: DD, b: DD) -> DD:
    q1 = a[0] / b[0]
    r = sub(a, mul_d(b, q1))
    q2 = r[0] / b[0]
    r = sub(r, mul_d(b, q2))
    q3 = r[0] / b[0]
    s, e = quick_two_sum(q1, q2)
    return quick_two_sum(s, e + q3)


def div_d(a: DD, b: float) -> DD:
    q1 = a[0] / b
    p1, p2 = two_prod(q1, b)
    r = ((a[0] - p1) - p2 + a[1]) / b
    return quick_two_sum(q1, r)


def recip(b: DD) -> DD:
    return div(ONE, b)


def sqr(a: DD) -> DD:
    return mul(a, a)


def sqrt(a: DD) -> DD:
    # one Newton step on a double seed doubles the precision
    if a[0] == 0.0 and a[1] == 0.0:
        return ZERO
    x = math.sqrt(a[0])
    d = sub(a, sqr((x, 0.0)))
    return add_d(div_d(d, 2.0 * x), x)


def ldexp_dd(a: DD, n: int) -> DD:
    return (math.ldexp(a[0], n), math.ldexp(a[1], n))


def exp(a: DD) -> DD:
    """exp of a double-double; raises OverflowError past the double range."""
    if a[0] > 709.782712893384:
        raise OverflowError("dd exp overflow")
    if a[0] < -745.2:
        return ZERO
    m = round(a[0] / LN2[0])
    r = sub(a, mul_d(LN2, float(m)))
    # |r| <= ln2/2; Taylor to below dd epsilon
    s = add_d(r, 1.0)
    t = r
    for k in range(2, 27):
        t = div_d(mul(t, r), float(k))
        s = add(s, t)
    return ldexp_dd(s, m)


def ln(a: DD) -> DD:
    """Natural log; argument must be positive."""
    if a[0] <= 0.0:
        raise ValueError("dd ln domain")
    y = math.log(a[0])
    # Newton: y <- y + a*exp(-y) - 1
    e = exp((-y, 0.0))
    return add_d(sub_d(mul(a, e), 1.0), y)


def pow2(t: DD) -> DD:
    """2**t via exp(t ln 2)."""
    return exp(mul(t, LN2))


def _sin_taylor(u: DD) -> DD:
    # |u| <= pi/4
    u2 = sqr(u)
    s = u
    t = u
    k = 1
    for _ in range(14):
        t = mul(t, u2)
        t = div_d(t, -float((k + 1) * (k + 2)))
        s = add(s, t)
        k += 2
    return s


def _cos_taylor(u: DD) -> DD:
    u2 = sqr(u)
    s = ONE
    t = ONE
    k = 0
    for _ in range(14):
        t = mul(t, u2)
        t = div_d(t, -float((k + 1) * (k + 2)))
        s = add(s, t)
        k += 2
    return s


def sincospi(t: DD):
    """(sin(pi t), cos(pi t)) with exact half-integer reduction.

    Reduction subtracts the nearest half-integer, which is exact in binary
    floating point, so results stay fully accurate near the zeros of either
    function -- the property the reflection formulas and the V anchors need.
    """
    m = round(2.0 * t[0])
    r = add_d(t, -0.5 * m)  # exact: m/2 is representable
    u = mul(PI, r)
    s, c = _sin_taylor(u), _cos_taylor(u)
    q = m % 4
    if q == 0:
        return s, c
    if q == 1:
        return c, neg(s)
    if q == 2:
        return neg(s), neg(c)
    return neg(c), s


def sinpi(t: DD) -> DD:
    return sincospi(t)[0]


def cospi(t: DD) -> DD:
    return sincospi(t)[1]


def atan_small(t: DD) -> DD:
    """arctan for |t| <= 0.5 via two argument halvings plus the odd series."""
    for _ in range(2):
        w = sqrt(add_d(sqr(t), 1.0))
        t = div(t, add_d(w, 1.0))
    t2 = sqr(t)
    s = t
    p = t
    for k in range(1, 22):
        p = mul(p, t2)
        s = add(s, div_d(mul_d(p, (-1.0) ** k), float(2 * k + 1)))
    return mul_d(s, 4.0)


def _stirling_tail_re(zr: DD, zi: DD) -> DD:
    """Re of the Bernoulli correction sum at z (Re z >= shift threshold)."""
    d2 = add(sqr(zr), sqr(zi))
    wr = div(zr, d2)
    wi = neg(div(zi, d2))
    # w2 = w*w
    w2r = sub(sqr(wr), sqr(wi))
    w2i = mul_d(mul(wr, wi), 2.0)
    pr, pi_ = wr, wi
    acc = ZERO
    for j, c in enumerate(STIRLING_COEFFS):
        acc = add(acc, mul(c, pr))
        if j + 1 < len(STIRLING_COEFFS):
            pr, pi_ = sub(mul(pr, w2r), mul(pi_, w2i)), add(mul(pr, w2i), mul(pi_, w2r))
    return acc


def lgamma_real(t: DD) -> DD:
    """ln Gamma(t) for real t >= 0.5 by upward shifting plus Stirling."""
    if t[0] < 0.5:
        raise ValueError("lgamma_real needs t >= 0.5")
    n = max(0, math.ceil(_STIRLING_SHIFT - t[0]))
    prod = ONE
    for k in range(n):
        prod = mul(prod, add_d(t, float(k)))
    big = add_d(t, float(n))
    lnz = ln(big)
    s = sub(mul(sub_d(big, 0.5), lnz), big)
    s = add(s, HALF_LN_2PI)
    s = add(s, _stirling_tail_re(big, ZERO))
    if n:
        s = sub(s, ln(prod))
    return s


def gamma_real(t: DD) -> DD:
    return exp(lgamma_real(t))


def recip_gamma(t: DD) -> DD:
    """1/Gamma(t) for any real t; exactly zero within 1e-12 of the poles."""
    t0 = to_float(t)
    r = round(t0)
    if r <= 0 and abs(t0 - r) <= 1e-12:
        return ZERO
    if t0 >= 0.5:
        return exp(neg(lgamma_real(t)))
    # reflection: 1/Gamma(t) = sin(pi t) Gamma(1-t) / pi
    one_minus = d_sub(1.0, t)
    return div(mul(sinpi(t), gamma_real(one_minus)), PI)


def re_lngamma_complex(x: float, y: float) -> DD:
    """Re ln Gamma(x + i y) for x >= 0.25, |y| <= ~60 (needs only real DD ops).

    Shifts along the real axis keeping the squared moduli as one product, then
    applies Re of the Stirling series; arg(z) enters only through one small
    arctangent since the shifted argument dominates the imaginary part.
    """
    if x < 0.25:
        raise ValueError("re_lngamma_complex needs x >= 0.25")
    y = abs(y)  # |Gamma(conj z)| = |Gamma(z)|
    n = max(0, math.ceil(_STIRLING_SHIFT - x))
    y2 = two_prod(y, y)
    prod = ONE
    for k in range(n):
        xk = x + k  # exact for x in {1/4, 3/4} and integer k
        prod = mul(prod, add(two_prod(xk, xk), y2))
    bx = x + n
    bx2 = add(two_prod(bx, bx), y2)  # |Z|^2
    ln_mod = mul_d(ln(bx2), 0.5)
    theta = atan_small(div_d((y, 0.0), bx))
    s = sub(mul(add_d((bx, 0.0), -0.5), ln_mod), mul_d(theta, y))
    s = add_d(s, -bx)
    s = add(s, HALF_LN_2PI)
    s = add(s, _stirling_tail_re((bx, 0.0), (y, 0.0)))
    if n:
        s = sub(s, mul_d(ln(prod), 0.5))
    return s
