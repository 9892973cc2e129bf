"""Polynomial evaluation and exact coefficient construction."""

import math
from fractions import Fraction

import pytest

from hahnlab.errors import DomainError, ExactInputError, PoleError
from hahnlab.exact import GR_I, ExactPoly, GaussianRational, gr
from hahnlab.numerics import pochhammer
from hahnlab.polynomials import (EXACT_DEGREE_CAP, HahnParams, JacobiParams,
                                 chahn_coeffs_complex, chahn_coeffs_exact,
                                 chahn_eval, horner, jacobi_coeffs_complex,
                                 jacobi_coeffs_exact, jacobi_eval,
                                 pasternack_coeffs_complex,
                                 pasternack_coeffs_exact, pasternack_eval,
                                 pasternack_hahn_params,
                                 pasternack_reflection_check,
                                 _exact_pochhammer)

F = Fraction
HALF = F(1, 2)


# --- Jacobi ---------------------------------------------------------------

def test_jacobi_at_one_collapses():
    # (1-x)/2 = 0 kills every k >= 1 term, leaving (gamma+1)_n / n!
    for n in (0, 1, 3, 6):
        for g, d in ((0.0, 0.0), (0.3, 1.7), (1.5, -0.25)):
            expected = pochhammer(g + 1, n) / math.factorial(n)
            assert abs(jacobi_eval(n, JacobiParams(g, d), 1.0) - expected) < 1e-12 * abs(expected)


def test_jacobi_legendre_value_at_zero():
    # direct summation of the terminating series at n=2, x=0
    assert abs(jacobi_eval(2, JacobiParams(0, 0), 0.0) - (-0.5)) < 1e-14


def test_jacobi_degree_one_closed_form():
    for g, d in ((0.2, 0.9), (1.0, 0.0)):
        for x in (-0.7, 0.0, 2.5):
            expected = (g + 1) - (g + d + 2) * (1 - x) / 2
            assert abs(jacobi_eval(1, JacobiParams(g, d), x) - expected) < 1e-13


def test_jacobi_pole_error():
    with pytest.raises(PoleError):
        jacobi_eval(3, JacobiParams(-2, 0), 0.5)


def test_jacobi_coeffs_exact_basics():
    assert jacobi_coeffs_exact(0, JacobiParams(F(1, 3), F(2, 5))) == ExactPoly([1])
    assert jacobi_coeffs_exact(1, JacobiParams(0, 0)) == ExactPoly([0, 1])


def test_jacobi_coeffs_eval_at_one_exact():
    for n in (0, 2, 5):
        g, d = F(1, 3), F(3, 4)
        p = jacobi_coeffs_exact(n, JacobiParams(g, d))
        expected = _exact_pochhammer(gr(g + 1), n) / gr(math.factorial(n))
        assert p(gr(1)) == expected


def test_jacobi_exact_degree_is_n():
    for n in range(9):
        assert jacobi_coeffs_exact(n, JacobiParams(F(1, 4), F(4, 1))).degree == n


# --- continuous Hahn -------------------------------------------------------

def test_chahn_degree_zero_is_one():
    assert chahn_eval(0, HahnParams(0.3 + 0.1j, 0.4, 0.5, 0.6 - 0.1j), 1.7) == 1.0


def test_chahn_degree_one_symmetric_halves():
    # hand expansion: i(1 - 2(1/2 + ix)) = 2x
    hp = HahnParams(HALF, HALF, HALF, HALF)
    for x in (0.0, 1.0, -2.5, 0.3):
        assert abs(chahn_eval(1, hp, x) - 2 * x) < 1e-14
    assert chahn_coeffs_exact(1, hp) == ExactPoly([0, 2])


def test_chahn_leading_coefficient_formula():
    # k = n term gives lc = (n+a+b+c+d-1)_n / n!, real for real parameter sum
    hp = HahnParams(HALF, HALF, HALF, HALF)
    p2 = chahn_coeffs_exact(2, hp)
    assert p2.leading_coefficient == gr(6)
    for n in range(EXACT_DEGREE_CAP // 8):
        params = HahnParams(F(1, 3), F(2, 5), F(3, 4), F(5, 6))
        p = chahn_coeffs_exact(n, params)
        s = F(1, 3) + F(2, 5) + F(3, 4) + F(5, 6)
        expected = _exact_pochhammer(gr(n + s - 1), n) / gr(math.factorial(n))
        assert p.degree == n
        assert p.leading_coefficient == expected
        assert p.leading_coefficient.is_real()


def test_chahn_lc_real_for_conjugate_pairs():
    a = GaussianRational(F(1, 2), F(1, 3))
    b = GaussianRational(F(1, 4), F(1, 5))
    params = HahnParams(a, b, a.conjugate(), b.conjugate())
    for n in (1, 3, 5):
        assert chahn_coeffs_exact(n, params).leading_coefficient.is_real()


def test_chahn_imaginary_shift_realness():
    """i^{-n} p_n(iy) has all-real coefficients for real parameters.

    This is the realness that makes F_n real-valued at imaginary argument
    and lets the conjugate in the Gram integrand be dropped.
    """
    params = HahnParams(F(1, 2), F(2, 3), F(3, 4), F(4, 5))
    for n in range(7):
        p = chahn_coeffs_exact(n, params)
        q = (GR_I ** (-n % 4)) * p.scale_argument(GR_I)
        assert all(c.is_real() for c in q.coeffs)


def test_chahn_pole_error():
    with pytest.raises(PoleError):
        chahn_eval(3, HahnParams(1, 1, -2, 1), 0.0)


def test_exact_mode_rejects_floats():
    with pytest.raises(ExactInputError):
        chahn_coeffs_exact(2, HahnParams(0.5, HALF, HALF, HALF))
    with pytest.raises(ExactInputError):
        jacobi_coeffs_exact(2, JacobiParams(0.5, 0))
    with pytest.raises(ExactInputError):
        pasternack_coeffs_exact(2, 0.5)


def test_exact_degree_cap():
    with pytest.raises(DomainError):
        jacobi_coeffs_exact(EXACT_DEGREE_CAP + 1, JacobiParams(0, 0))


def test_float_exact_agreement():
    """Floating evaluation against exact coefficients, 1e-11 relative,
    n <= 20, rational parameters in [1/4, 4], |x| <= 10."""
    cases = [
        (HahnParams(HALF, HALF, HALF, HALF), chahn_eval, chahn_coeffs_exact),
        (HahnParams(F(1, 4), F(1, 2), F(3, 4), F(4, 1)), chahn_eval, chahn_coeffs_exact),
        (HahnParams(F(1, 3), F(3, 2), F(1, 2), F(2, 1)), chahn_eval, chahn_coeffs_exact),
        (JacobiParams(F(1, 4), F(4, 1)), jacobi_eval, jacobi_coeffs_exact),
        (JacobiParams(F(3, 4), F(1, 3)), jacobi_eval, jacobi_coeffs_exact),
    ]
    xs = [F(0), F(1, 4), F(-3, 2), F(10), F(-10), F(17, 5)]
    for params, feval, fexact in cases:
        for n in (1, 5, 12, 20):
            poly = fexact(n, params)
            for x in xs:
                exact_value = poly(gr(x)).to_complex()
                float_value = feval(n, params, float(x))
                scale = max(abs(exact_value), 1e-30)
                assert abs(float_value - exact_value) <= 1e-11 * scale, \
                    f"n={n} x={x} params={params}"


def test_complex_coeff_builders_exact_dispatch():
    """Exact parameters give the exactly-rounded coefficient vector."""
    hp = HahnParams(F(1, 2), F(2, 3), F(3, 4), F(4, 5))
    for n in (0, 1, 4, 9, 20):
        assert chahn_coeffs_complex(n, hp) == chahn_coeffs_exact(n, hp).complex_coeffs()
    jp = JacobiParams(F(1, 3), F(3, 4))
    for n in (0, 2, 7):
        assert jacobi_coeffs_complex(n, jp) == jacobi_coeffs_exact(n, jp).complex_coeffs()


def test_complex_coeff_builders_float_path():
    """Term-accumulated coefficients for float parameters are accurate at
    the moderate degrees the quadrature checks use."""
    hp_float = HahnParams(0.5, 2.0 / 3.0, 0.75, 0.8)
    hp_exact = HahnParams(F(1, 2), F(2, 3), F(3, 4), F(4, 5))
    for n in (0, 1, 4, 8):
        exact = chahn_coeffs_exact(n, hp_exact).complex_coeffs()
        floats = chahn_coeffs_complex(n, hp_float)
        sup = max(abs(c) for c in exact)
        for a, b in zip(exact, floats):
            assert abs(a - b) <= 5e-12 * sup


# --- Bateman / Pasternack ---------------------------------------------------

def test_pasternack_degree_zero():
    assert pasternack_eval(0, 0.37, 9.9) == 1.0


def test_pasternack_degree_one_bateman():
    for x in (0.0, 1.0, -3.5):
        assert abs(pasternack_eval(1, 0, x) - (-x)) < 1e-14


def test_pasternack_degree_one_general():
    for m in (0.5, -0.25, 2.0):
        for x in (0.3, -1.7):
            assert abs(pasternack_eval(1, m, x) - (-x / (1 + m))) < 1e-14


def test_pasternack_pole():
    with pytest.raises(PoleError):
        pasternack_eval(3, -2, 0.0)


def test_pasternack_exact_coeffs_real_rational():
    for n in (0, 1, 4, 8):
        p = pasternack_coeffs_exact(n, F(1, 3))
        assert p.degree == n
        assert all(c.is_real() for c in p.coeffs)


def test_pasternack_exact_matches_chahn_route():
    """F_n(x) = p_n(-ix/2; pasternack params) / (i^n (1+m)_n), exactly."""
    for m in (F(0), F(1, 3), F(-1, 2)):
        hp = pasternack_hahn_params(m)
        for n in (0, 1, 3, 6):
            direct = pasternack_coeffs_exact(n, m)
            p = chahn_coeffs_exact(n, hp)
            via = p.scale_argument(-GR_I * GaussianRational(F(1, 2)))
            scale = (GR_I ** n) * _exact_pochhammer(gr(1 + m), n)
            assert via == scale * direct


def test_pasternack_complex_coeffs_match_exact():
    for n in (0, 2, 5):
        exact = pasternack_coeffs_exact(n, F(1, 3)).complex_coeffs()
        floats = pasternack_coeffs_complex(n, F(1, 3))
        for a, b in zip(exact, floats):
            assert abs(a - b) <= 1e-13 * max(1.0, abs(a))


def test_reflection_trivial_at_m_zero():
    assert pasternack_reflection_check(5, 0).passed


def test_reflection_degree_one():
    # (1+m)(-x/(1+m)) = (1-m)(-x/(1-m)) = -x
    assert pasternack_reflection_check(1, F(1, 3)).passed


def test_reflection_full_grid():
    for m in (F(1, 4), F(1, 3), HALF, F(2, 3)):
        for n in range(1, 13):
            report = pasternack_reflection_check(n, m)
            assert report.passed, report.name


def test_horner_matches_eval():
    coeffs = [1.0, -2.0, 0.5j]
    assert horner(coeffs, 2.0) == 1.0 - 4.0 + 0.5j * 4.0
