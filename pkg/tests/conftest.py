import math
import random

import pytest


def rel_err(got: float, want: float) -> float:
    if want == 0.0:
        return abs(got)
    return abs(got - want) / abs(want)


def central_diff(f, x: float, h: float) -> float:
    return (f(x + h) - f(x - h)) / (2.0 * h)


def second_diff_5pt(f, x: float, h: float) -> float:
    """Fourth-order central second derivative."""
    return (
        -f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)
    ) / (12.0 * h * h)


def deriv_5pt(f, x: float, h: float) -> float:
    """Fourth-order central first derivative."""
    return (f(x - 2 * h) - 8 * f(x - h) + 8 * f(x + h) - f(x + 2 * h)) / (12.0 * h)


@pytest.fixture
def rng():
    return random.Random(20240817)


def assert_close(got, want, rel=0.0, abs_=0.0, label=""):
    err = abs(got - want)
    bound = abs_ + rel * abs(want)
    assert err <= bound, f"{label}: got {got!r}, want {want!r}, err {err:.3e} > {bound:.3e}"


def sinpi(t: float) -> float:
    n = round(t)
    r = t - n
    s = math.sin(math.pi * r)
    return -s if (n % 2) else s


def cospi(t: float) -> float:
    return sinpi(t + 0.5)
