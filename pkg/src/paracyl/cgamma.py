"""Complex gamma and log-gamma kernel (double precision, principal branch).

ln Gamma is computed from the Stirling series with the ten exact Bernoulli
numbers B_2 .. B_20; arguments of small modulus are first shifted upward with
Gamma(z+n) = z(z+1)...(z+n-1) Gamma(z), subtracting the per-factor principal
logs (a single log of the accumulated product could drop multiples of
2 pi i when the product winds around the origin).  For Re z < 1/2 the
reflection Gamma(z)Gamma(-z) = -pi/(z sin(pi z)) is applied in the branch-safe
form  ln Gamma(z) = ln pi - ln sin(pi z) - ln Gamma(1-z)  where ln sin(pi z)
on the upper half-plane is log(i/2) - i pi z + log1p(-e^{2 pi i z}), each term
continuous there; the lower half-plane goes through conjugation, which also
makes log_gamma(conj z) == conj(log_gamma(z)) hold exactly.

The branch convention: real on the positive real axis, imaginary part
continuous along any path avoiding the negative real axis, and +i pi on the
intervals of the negative axis where Gamma < 0 (limit from above).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction

from . import _dd as dd
from .errors import DomainError, RangeError

# B_2 .. B_20, exact (numerator, denominator) pairs
BERNOULLI_TABLE = (
    Fraction(1, 6),
    Fraction(-1, 30),
    Fraction(1, 42),
    Fraction(-1, 30),
    Fraction(5, 66),
    Fraction(-691, 2730),
    Fraction(7, 6),
    Fraction(-3617, 510),
    Fraction(43867, 798),
    Fraction(-174611, 330),
)

# B_{2n} / (2n(2n-1)) as doubles, the weights of the Stirling correction sum
_STIRLING = tuple(float(b) / ((2 * n) * (2 * n - 1)) for n, b in enumerate(BERNOULLI_TABLE, start=1))

_SHIFT_RADIUS = 10.0     # apply the Stirling series only for |z| >= this
_POLE_TOL = 1e-12
_LOG_PI = 1.1447298858494002
_HALF_LOG_2PI = 0.9189385332046728
_EXP_OVERFLOW = 709.782712893384


def _pole_check(z: complex) -> None:
    n = round(z.real)
    if n <= 0 and abs(complex(z.real - n, z.imag)) <= _POLE_TOL:
        raise DomainError(f"log-gamma pole at z = {n}; got {z}")


def _stirling(z: complex) -> complex:
    s = (z - 0.5) * cmath.log(z) - z + _HALF_LOG_2PI
    w = 1.0 / z
    w2 = w * w
    p = w
    for c in _STIRLING:
        s += c * p
        p *= w2
    return s


def _log_gamma_right(z: complex) -> complex:
    # Re z >= 0.5: shift until the Stirling series is safe
    acc = 0.0 + 0.0j
    while abs(z) < _SHIFT_RADIUS:
        acc += cmath.log(z)
        z += 1.0
    return _stirling(z) - acc


def log_gamma(z: complex) -> complex:
    """Principal-branch ln Gamma(z); DomainError within 1e-12 of a pole."""
    z = complex(z)
    _pole_check(z)
    if z.real >= 0.5:
        if z.imag == 0.0:
            # stay exactly real on the positive axis
            return complex(_log_gamma_right(complex(z.real, 0.0)).real, 0.0)
        return _log_gamma_right(z)
    if z.imag == 0.0:
        # real reflection; Gamma(1-z) > 0 so the sign is carried by sin(pi z)
        s = _sinpi_real(z.real)
        lg = _LOG_PI - math.log(abs(s)) - _log_gamma_right(complex(1.0 - z.real, 0.0)).real
        return complex(lg, 0.0 if s > 0.0 else math.pi)
    if z.imag < 0.0:
        return log_gamma(z.conjugate()).conjugate()
    # upper half-plane reflection, all terms continuous for Im z > 0
    log_sin = complex(-math.log(2.0), 0.5 * math.pi) - 1j * math.pi * z
    log_sin += cmath.log(1.0 - cmath.exp(2j * math.pi * z))
    return _LOG_PI - log_sin - _log_gamma_right(1.0 - z)


def gamma(z: complex) -> complex:
    """Gamma(z) = exp(log_gamma(z)); RangeError if exp overflows."""
    lg = log_gamma(z)
    if lg.real > _EXP_OVERFLOW:
        raise RangeError(f"gamma overflow: log_gamma({z}) = {lg}")
    return cmath.exp(lg)


def gamma_modulus(z: complex) -> float:
    """|Gamma(z)| via the real part of log_gamma; safe for large Im z."""
    return math.exp(log_gamma(z).real)


def gamma_arg(z: complex) -> float:
    """Principal-branch arg Gamma(z); exactly 0 on the positive real axis."""
    return log_gamma(z).imag


def _sinpi_real(t: float) -> float:
    n = round(t)
    r = t - n  # exact
    s = math.sin(math.pi * r)
    return -s if (n % 2) else s


def recip_gamma_real(x: float) -> float:
    """1/Gamma(x) on the real axis, total: exactly 0 within 1e-12 of a pole."""
    n = round(x)
    if n <= 0 and abs(x - n) <= _POLE_TOL:
        return 0.0
    try:
        return dd.to_float(dd.recip_gamma(dd.from_float(x)))
    except OverflowError:
        # Gamma(1-x) overflows for x < -170; 1/Gamma is genuinely huge there
        return math.copysign(math.inf, _sinpi_real(x))
