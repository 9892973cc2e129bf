"""Gamma-function foundations, cross-checked against mpmath."""

import cmath
import math
import random

import mpmath as mp
import pytest

from hahnlab.errors import DomainError, PoleError, RangeOverflowError
from hahnlab.numerics import (beta, gamma, hahn_weight, log_gamma,
                              log_gamma_complex, pochhammer)

mp.mp.dps = 30


def test_pochhammer_empty_product_is_one():
    assert pochhammer(2.7 + 0.3j, 0) == 1.0


def test_pochhammer_of_one_is_factorial():
    assert pochhammer(1, 4) == 24


def test_pochhammer_direct_product():
    # 3*4*5*6
    assert pochhammer(3, 4) == 360


def test_pochhammer_negative_order_rejected():
    with pytest.raises(DomainError):
        pochhammer(1.0, -1)


def test_gamma_at_small_integers():
    assert abs(gamma(1) - 1) < 1e-14
    assert abs(gamma(5) - 24) < 24 * 1e-13


def test_gamma_half_squared_is_pi():
    # reflection formula at z = 1/2
    assert abs(gamma(0.5) ** 2 - math.pi) < 1e-13 * math.pi


def test_gamma_pole_raises():
    for z in (0, -1, -2.0, -17):
        with pytest.raises(PoleError):
            gamma(z)


def test_log_gamma_accuracy_right_half_plane():
    """Relative accuracy of log Gamma against mpmath on Re(z) >= 1/2."""
    rng = random.Random(20240901)
    for _ in range(400):
        z = complex(rng.uniform(0.5, 25.0), rng.uniform(-25.0, 25.0))
        got = log_gamma(z)
        ref = mp.loggamma(mp.mpc(z.real, z.imag))
        scale = max(1.0, abs(complex(float(ref.real), float(ref.imag))))
        assert abs(got.log_modulus - float(ref.real)) <= 1e-13 * scale
        dphi = math.remainder(got.phase - float(ref.imag), 2.0 * math.pi)
        assert abs(dphi) <= 1e-13 * scale


def test_log_gamma_reflection_large_imaginary():
    """Left half-plane values with |Im z| past the asymptotic switch."""
    rng = random.Random(3)
    for _ in range(60):
        z = complex(rng.uniform(-8.0, 0.49),
                    rng.choice([1, -1]) * rng.uniform(20.5, 120.0))
        got = log_gamma(z)
        ref = mp.loggamma(mp.mpc(z.real, z.imag))
        scale = max(1.0, abs(complex(float(ref.real), float(ref.imag))))
        assert abs(got.log_modulus - float(ref.real)) <= 1e-13 * scale
        dphi = math.remainder(got.phase - float(ref.imag), 2.0 * math.pi)
        assert abs(dphi) <= 1e-13 * scale


def test_log_gamma_phase_is_principal():
    for z in (0.5 + 9j, 3 - 7j, 0.25 + 2j, -0.3 + 4j):
        lg = log_gamma(z)
        assert -math.pi < lg.phase <= math.pi


def test_recurrence_identity_grid():
    """Gamma(z+1) = z Gamma(z) to 1e-12 relative, 1000 points, |z| <= 20."""
    rng = random.Random(12345)
    count = 0
    while count < 1000:
        z = complex(rng.uniform(0.05, 20.0), rng.uniform(-20.0, 20.0))
        if abs(z) > 20.0:
            continue
        count += 1
        lhs = log_gamma_complex(z + 1)
        rhs = log_gamma_complex(z) + cmath.log(z)
        diff = lhs - rhs
        # same analytic content up to 2 pi i
        assert abs(diff.real) <= 1e-12 * max(1.0, abs(lhs.real))
        assert abs(math.remainder(diff.imag, 2.0 * math.pi)) <= 1e-12 * max(1.0, abs(lhs))


def test_reflection_identity():
    """Gamma(z) Gamma(1-z) sin(pi z) / pi = 1 away from integers."""
    rng = random.Random(99)
    for _ in range(200):
        z = complex(rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0))
        if abs(z.imag) < 0.05 and abs(z.real - round(z.real)) < 0.05:
            continue
        w = log_gamma_complex(z) + log_gamma_complex(1 - z)
        value = cmath.exp(w) * cmath.sin(math.pi * z) / math.pi
        assert abs(value - 1.0) <= 1e-12


def test_pochhammer_matches_gamma_ratio():
    rng = random.Random(4242)
    for _ in range(200):
        a = complex(rng.uniform(0.1, 6.0), rng.uniform(-4.0, 4.0))
        k = rng.randrange(0, 12)
        direct = pochhammer(a, k)
        via_gamma = cmath.exp(log_gamma_complex(a + k) - log_gamma_complex(a))
        assert abs(direct - via_gamma) <= 1e-12 * max(1.0, abs(direct))


def test_beta_trivial_and_derived_values():
    assert abs(beta(1, 1) - 1.0) < 1e-14
    # Gamma(2) Gamma(3) / Gamma(5) = 2/24
    assert abs(beta(2, 3) - 1.0 / 12.0) < 1e-13
    # reflection route: Gamma(1/2)^2 = pi
    assert abs(beta(0.5, 0.5) - math.pi) < 1e-13 * math.pi


def test_beta_domain_error():
    with pytest.raises(DomainError):
        beta(-1.0, 2.0)
    with pytest.raises(DomainError):
        beta(1.0, 0.0)


def test_hahn_weight_all_ones_at_origin():
    assert abs(hahn_weight(0.0, 1, 1, 1, 1) - 1.0) < 1e-13


def test_hahn_weight_all_halves_closed_form():
    # |Gamma(1/2 + iz)|^2 = pi / cosh(pi z) via reflection, squared
    for z in (0.0, 0.3, 1.1, 2.5, -1.7):
        expected = math.pi ** 2 / math.cosh(math.pi * z) ** 2
        got = hahn_weight(z, 0.5, 0.5, 0.5, 0.5)
        assert abs(got - expected) <= 1e-12 * expected


def test_hahn_weight_conjugate_pairs_real_positive():
    """a = conj(alpha), b = conj(beta) makes the weight real positive."""
    alpha = complex(0.5, 0.25)
    beta_ = complex(0.75, -0.4)
    rng = random.Random(7)
    for _ in range(120):
        z = rng.uniform(-20.0, 20.0)
        w = hahn_weight(z, alpha, beta_, alpha.conjugate(), beta_.conjugate())
        assert abs(w.imag) <= 1e-12 * abs(w.real)
        assert w.real > 0.0


def test_hahn_weight_domain_error():
    with pytest.raises(DomainError):
        hahn_weight(0.0, -0.5, 1, 1, 1)


def test_hahn_weight_overflow_is_structured():
    with pytest.raises(RangeOverflowError):
        hahn_weight(0.0, 200.0, 200.0, 200.0, 200.0)


def test_gamma_finite_values_only():
    lg = log_gamma(171.0)  # Gamma(171) still finite in double
    v = lg.exp()
    assert math.isfinite(abs(v))
    with pytest.raises(RangeOverflowError):
        log_gamma(200.0).exp()
