"""Fourier / Mellin / Parseval pair verifications."""

import cmath
import math
from fractions import Fraction

import pytest

from hahnlab.errors import DomainError
from hahnlab.numerics import beta as beta_fn
from hahnlab.quadrature import QuadratureConfig
from hahnlab.transforms import (fourier_pair_check, mellin_pair_check,
                                parseval_check, tanh_weight, tanh_weight_logs,
                                _weighted_jacobi_transform)

F = Fraction
HALF = F(1, 2)
CFG = QuadratureConfig()


def test_tanh_weight_logs_match_naive():
    for x in (-3.0, -0.5, 0.0, 0.7, 4.0):
        l1, l2 = tanh_weight_logs(x)
        assert abs(l1 - math.log(1 - math.tanh(x))) < 1e-13
        assert abs(l2 - math.log(1 + math.tanh(x))) < 1e-13


def test_tanh_weight_no_underflow_far_out():
    w = tanh_weight(300.0, 0.5, 0.5)
    assert w.real > 0.0 and math.isfinite(w.real)


def test_fourier_n0_z0_is_beta_value():
    # both sides reduce to 2^{alpha+beta-1} B(alpha, beta)
    for al, be in ((HALF, HALF), (F(3, 5), F(11, 10))):
        r = fourier_pair_check(0, al, be, 0, 0, 0.0, CFG)
        assert r.passed
        lhs = _weighted_jacobi_transform(0, al, be, 0, 0, 0.0, CFG).value
        expected = 2.0 ** (float(al + be) - 1) * beta_fn(float(al), float(be))
        assert abs(lhs - expected) <= 1e-10 * abs(expected)


def test_fourier_n0_sech_self_reciprocity():
    # alpha = beta = 1/2: int e^{-ixz} sech x dx = pi sech(pi z / 2)
    for z in (0.0, 0.8, 2.0):
        lhs = _weighted_jacobi_transform(0, HALF, HALF, 0, 0, z, CFG).value
        expected = math.pi / math.cosh(math.pi * z / 2.0)
        assert abs(lhs - expected) <= 1e-10 * expected
        assert fourier_pair_check(0, HALF, HALF, 0, 0, z, CFG).passed


def test_fourier_degree_one_grid():
    for z in (0.0, 1.0, 2.0):
        r = fourier_pair_check(1, HALF, HALF, 0, 0, z, CFG)
        # z = 0 makes both sides exactly zero (odd integrand), where only
        # the absolute fallback applies
        assert r.passed
        assert r.max_rel_err <= 1e-8 or r.max_abs_err <= 1e-12


def test_fourier_complex_conjugate_parameters():
    al = complex(0.5, 0.25)
    r = fourier_pair_check(2, al, al.conjugate(), F(1, 4), F(1, 4), 1.0, CFG)
    assert r.passed


def test_fourier_rejects_bad_weight():
    with pytest.raises(DomainError):
        fourier_pair_check(1, -0.5, 0.5, 0, 0, 1.0, CFG)


def test_fourier_linearity():
    """Transform of a sum of two weighted Jacobi terms is the sum of
    transforms."""
    al, be, z = F(3, 5), F(11, 10), 1.3
    t2 = _weighted_jacobi_transform(2, al, be, F(1, 4), F(4, 5), z, CFG).value
    t5 = _weighted_jacobi_transform(5, al, be, F(1, 4), F(4, 5), z, CFG).value

    from hahnlab.polynomials import JacobiParams, horner, jacobi_coeffs_complex
    from hahnlab.quadrature import integrate_line
    c2 = jacobi_coeffs_complex(2, JacobiParams(F(1, 4), F(4, 5)))
    c5 = jacobi_coeffs_complex(5, JacobiParams(F(1, 4), F(4, 5)))
    alc, bec = float(al), float(be)
    bound = sum(abs(c) for c in c2) + sum(abs(c) for c in c5)

    def f(x):
        l1, l2 = tanh_weight_logs(x)
        t = math.tanh(x)
        return cmath.exp(-1j * z * x + alc * l1 + bec * l2) \
            * (horner(c2, t) + horner(c5, t))

    def env(x):
        l1, l2 = tanh_weight_logs(abs(x))
        return bound * max(math.exp(alc * l1 + bec * l2),
                           math.exp(alc * l2 + bec * l1))

    combined = integrate_line(f, env, CFG, max_panel_width=math.pi / z).value
    assert abs(combined - (t2 + t5)) <= 1e-10 * max(1.0, abs(t2 + t5))


def test_mellin_n0_lambda0_beta_value():
    r = mellin_pair_check(0, HALF, HALF, 0, 0, 0.0, CFG)
    assert r.passed
    lhs = 2.0 ** (1 - 1.0) * _weighted_jacobi_transform(0, HALF, HALF, 0, 0, 0.0, CFG).value
    assert abs(lhs - math.pi) <= 1e-9 * math.pi  # B(1/2, 1/2) = pi


def test_mellin_sign_convention_finding():
    r = mellin_pair_check(2, F(3, 5), F(11, 10), F(1, 4), F(4, 5), 0.7, CFG)
    assert r.passed
    assert "Gamma(beta + i*lambda) convention matches" in r.details


def test_mellin_lambda0_degenerate():
    r = mellin_pair_check(1, F(3, 5), F(11, 10), F(1, 4), F(4, 5), 0.0, CFG)
    assert r.passed
    assert "coincide" in r.details


def test_parseval_all_halves_frozen_value():
    # both sides equal 4 pi: left is 2 pi int sech^2 = 4 pi; right is
    # int (pi / cosh(pi z / 2))^2 dz = 4 pi
    r = parseval_check(0, 0, HALF, HALF, HALF, HALF, 0, 0, 0, 0, CFG)
    assert r.passed
    lhs = 2.0 * math.pi * 2.0
    assert abs(lhs - 4.0 * math.pi) == 0.0


def test_parseval_general_parameters():
    r = parseval_check(2, 1, F(3, 4), HALF, F(1, 4), 1, F(1, 3), F(2, 5),
                       F(1, 5), F(3, 5), CFG)
    assert r.passed and r.max_rel_err <= 1e-8


def test_parseval_orthogonality_specialization_zero():
    # gamma = c = alpha + a - 1, delta = d = beta + b - 1 and n != m:
    # the left side is a Jacobi orthogonality integral, hence zero
    r = parseval_check(2, 1, F(3, 4), HALF, F(3, 4), 1, HALF, HALF, HALF, HALF, CFG)
    assert r.passed
    assert r.max_abs_err <= 1e-10


def test_parseval_pasternack_specialization_zero():
    # alpha = beta = (1+m)/2, a = b = (1-m)/2, gamma = c = delta = d = 0
    m = F(1, 3)
    al = (1 + m) / 2
    av = (1 - m) / 2
    r = parseval_check(3, 1, al, al, av, av, 0, 0, 0, 0, CFG)
    assert r.passed
    assert r.max_abs_err <= 1e-10
