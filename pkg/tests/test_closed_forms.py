"""Closed-form layer: erfc, Bessel combinations, half-odd forms, W at a=0."""

import math

import pytest

from paracyl import closed_forms as cf
from paracyl.closed_forms import BesselKind, bessel_series, erfc_real
from paracyl.errors import DomainError, RangeError
from paracyl.pcf_uv import dpu, dpv, pu, pv
from paracyl.pcf_w import dpw, pw

from conftest import assert_close, central_diff, deriv_5pt, rel_err

GRID = tuple(k / 4.0 for k in range(1, 21))  # twenty points in (0, 5]


def agree(got, want, rel=1e-10, abs_=1e-13):
    if abs(want) < 1e-8:
        assert abs(got - want) <= abs_, f"{got} vs {want}"
    else:
        assert rel_err(got, want) <= rel, f"{got} vs {want}"


def test_erfc_values():
    assert erfc_real(0.0) == 1.0
    assert_close(erfc_real(1.0), 0.1572992070502851306588, rel=1e-14)
    # scipy is an independent implementation
    from scipy.special import erfc as scipy_erfc

    for x in (-9.5, -2.0, -0.3, 0.7, 2.999, 3.001, 6.0, 10.0):
        assert rel_err(erfc_real(x), float(scipy_erfc(x))) < 1e-14


def test_erfc_symmetry_and_derivative():
    for x in (0.2, 1.3, 4.0):
        assert_close(erfc_real(-x), 2.0 - erfc_real(x), rel=1e-15)
    for x in (0.5, 2.0):
        fd = central_diff(lambda t: erfc_real(t / math.sqrt(2.0)), x, 1e-6)
        want = -math.sqrt(2 / math.pi) * math.exp(-x * x / 2)
        assert rel_err(fd, want) < 1e-8


def test_bessel_recurrences():
    # I_{nu+1} = I_{nu-1} - (2 nu / z) I_nu  and  K_{nu+1} = K_{nu-1} + (2 nu / z) K_nu
    z = 2.0
    nu = 0.25
    i_up = bessel_series(BesselKind.I, nu + 1.0, z)
    i_dn = bessel_series(BesselKind.I, nu - 1.0, z)
    i_mid = bessel_series(BesselKind.I, nu, z)
    assert rel_err(i_up, i_dn - 2 * nu / z * i_mid) < 1e-12
    k_up = bessel_series(BesselKind.K, nu + 1.0, z)
    k_dn = bessel_series(BesselKind.K, nu - 1.0, z)
    k_mid = bessel_series(BesselKind.K, nu, z)
    assert rel_err(k_up, k_dn + 2 * nu / z * k_mid) < 1e-12


def test_bessel_derivative_recurrences():
    # z I'_nu = z I_{nu-1} - nu I_nu ; z K'_nu = -z K_{nu-1} - nu K_nu
    z, nu, h = 2.0, 0.25, 1e-3
    di = deriv_5pt(lambda t: bessel_series(BesselKind.I, nu, t), z, h)
    want = bessel_series(BesselKind.I, nu - 1.0, z) - nu / z * bessel_series(BesselKind.I, nu, z)
    assert rel_err(di, want) < 1e-11
    dk = deriv_5pt(lambda t: bessel_series(BesselKind.K, nu, t), z, h)
    want = -bessel_series(BesselKind.K, nu - 1.0, z) - nu / z * bessel_series(BesselKind.K, nu, z)
    assert rel_err(dk, want) < 1e-11


def test_bessel_frozen_and_scipy():
    assert_close(bessel_series(BesselKind.J, 0.25, 1.0), 0.7522313333407900569768, rel=1e-14)
    from scipy.special import iv, jv, kv

    for nu in (-0.75, -0.25, 0.25, 0.75, 1.25):
        for z in (0.5, 2.0, 6.25):
            assert rel_err(bessel_series(BesselKind.J, nu, z), float(jv(nu, z))) < 1e-12
            assert rel_err(bessel_series(BesselKind.I, nu, z), float(iv(nu, z))) < 1e-12
    for nu in (0.25, 0.75, 1.25):
        for z in (0.5, 2.0, 6.25):
            assert rel_err(bessel_series(BesselKind.K, nu, z), float(kv(nu, z))) < 1e-12
    # evenness of the derived kinds
    assert bessel_series(BesselKind.K, -0.25, 2.0) == bessel_series(BesselKind.K, 0.25, 2.0)
    assert bessel_series(BesselKind.GOTHIC_I, -0.75, 2.0) == bessel_series(
        BesselKind.GOTHIC_I, 0.75, 2.0
    )


def test_bessel_domain_errors():
    with pytest.raises(DomainError):
        bessel_series(BesselKind.J, 0.25, -1.0)
    with pytest.raises(DomainError):
        bessel_series(BesselKind.J, 0.5, 1.0)
    with pytest.raises(RangeError):
        bessel_series(BesselKind.J, 0.25, 31.0)


def test_u_halfodd_values():
    # polynomial row at a = -4.5: (x^4 - 6x^2 + 3) e^{-x^2/4} at x = 2
    u, du = cf.u_halfodd(-4.5, 2.0)
    assert_close(u, (16.0 - 24.0 + 3.0) * math.exp(-1.0), rel=1e-14)
    u, _ = cf.u_halfodd(0.5, 0.0)
    assert_close(u, math.sqrt(math.pi / 2.0), rel=1e-14)
    # structural identity for the a = 5/2 row
    u05 = cf.u_halfodd(0.5, 1.0)[0]
    u25 = cf.u_halfodd(2.5, 1.0)[0]
    assert_close(u25, 0.5 * 2.0 * u05 - 0.5 * math.exp(-0.25), rel=1e-13)
    with pytest.raises(DomainError):
        cf.u_halfodd(3.5, 1.0)


def test_v_halfodd_values():
    v, _ = cf.v_halfodd(2.5, 1.0)
    assert_close(v, math.sqrt(2 / math.pi) * 2.0 * math.exp(0.25), rel=1e-14)
    v, _ = cf.v_halfodd(3.5, 0.0)
    assert v == 0.0
    v, _ = cf.v_halfodd(4.5, 2.0)
    assert_close(v, math.sqrt(2 / math.pi) * 43.0 * math.e, rel=1e-14)
    with pytest.raises(DomainError):
        cf.v_halfodd(-0.5, 1.0)


def test_halfodd_against_series():
    for a in (-4.5, -3.5, -2.5, -1.5, -0.5, 0.5, 1.5, 2.5):
        for x in GRID:
            u, du = cf.u_halfodd(a, x)
            agree(pu(a, x).value, u)
            agree(dpu(a, x), du)
    for a in (0.5, 1.5, 2.5, 3.5, 4.5):
        for x in GRID:
            v, dv = cf.v_halfodd(a, x)
            agree(pv(a, x).value, v)
            agree(dpv(a, x), dv)


def test_erfc_family_identities():
    # U'(1/2,x) - (x/2) U(1/2,x) + e^{-x^2/4} = 0
    for x in [0.0, 0.5, 1.0, 2.0, 3.0, 4.0, 5.0]:
        u, du = cf.u_halfodd(0.5, x)
        assert abs(du - 0.5 * x * u + math.exp(-x * x / 4)) < 1e-12
    # derivative rows of the a = 3/2 and 5/2 forms
    for x in GRID:
        u05 = cf.u_halfodd(0.5, x)[0]
        e = math.exp(-x * x / 4)
        _, du15 = cf.u_halfodd(1.5, x)
        assert rel_err(du15, -(x * x / 2 + 1) * u05 + 0.5 * x * e) < 1e-11
        _, du25 = cf.u_halfodd(2.5, x)
        assert rel_err(du25, 0.25 * x * (x * x + 5) * u05 - (x * x / 4 + 1) * e) < 1e-11


def test_integer_a_forms_against_series():
    for a in (-2, -1, 0, 1, 2):
        for x in GRID:
            u, v = cf.uv_integer_a(a, x)
            agree(pu(float(a), x).value, u)
            agree(pv(float(a), x).value, v)
    with pytest.raises(DomainError):
        cf.uv_integer_a(3, 1.0)


def test_w_zero_a_against_series():
    for x in GRID:
        w_pos, w_neg, dw_pos, dw_neg = cf.w_zero_a(x)
        agree(pw(0.0, x).value, w_pos)
        agree(pw(0.0, -x).value, w_neg)
        agree(dpw(0.0, x), dw_pos)
        agree(dpw(0.0, -x), dw_neg)
    # the sum of the two sides drops the odd Bessel term
    for x in (1.0, 2.5):
        w_pos, w_neg, _, _ = cf.w_zero_a(x)
        want = 2 ** -0.25 * math.sqrt(math.pi * x) * bessel_series(
            BesselKind.J, -0.25, x * x / 4
        )
        assert rel_err(w_pos + w_neg, want) < 1e-13
    with pytest.raises(DomainError):
        cf.w_zero_a(-1.0)


def test_w_zero_a_derivative_self_consistency():
    for x in (1.0, 3.0):
        fd = deriv_5pt(lambda t: cf.w_zero_a(t)[0], x, 1e-3)
        assert rel_err(cf.w_zero_a(x)[2], fd) < 1e-9
