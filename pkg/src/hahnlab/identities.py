"""Exact verification of generating functions, contiguous relations and
classical Jacobi identities.

Generating functions are compared as truncated formal power series at
fixed rational sample points of the second variable; with order at least
degree + 2 this pins the polynomial coefficient identities while keeping
the arithmetic inside Q(i).  Contiguous relations and Jacobi identities
are compared as exact polynomials.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .exact import GR_I, GR_ONE, ExactPoly, GaussianRational, gr
from .polynomials import (HahnParams, JacobiParams, _exact_pochhammer,
                          chahn_coeffs_exact, jacobi_coeffs_exact)
from .reports import VerificationReport, exact_report
from .series import FormalSeries, hypergeometric_series, one_minus_t_power

GENFUN_EXPONENT_NOTE = (
    "closed form uses (1-t)^(1-alpha-beta-gamma-delta); the exponent "
    "variant -(alpha+beta+gamma+delta)-1 fails already at order 1")

CONTIGUOUS_LHS_NOTE = (
    "left side carries the factor (alpha+iz); the variant with bare iz "
    "drops the alpha term and fails at n=1")


def _first_mismatch(a: FormalSeries, b: FormalSeries) -> str:
    for k in range(min(a.order, b.order) + 1):
        if a.coeff(k) != b.coeff(k):
            return f"t^{k}: {a.coeff(k)} != {b.coeff(k)}"
    return ""


def _series_report(name: str, lhs: FormalSeries, rhs: FormalSeries,
                   note: str = "") -> VerificationReport:
    diff = lhs - rhs
    residual = max((abs(c.to_complex()) for c in diff.coeffs), default=0.0)
    detail = note
    if residual:
        detail = (note + "; " if note else "") + _first_mismatch(lhs, rhs)
    return exact_report(name, residual, detail)


def genfun_jacobi_check(which: int, gamma, delta, x, order: int) -> VerificationReport:
    """Jacobi generating functions at a fixed rational sample point x.

    which=1: (1-t)^(-gamma-delta-1) 2F1(.; 2(x-1)t/(1-t)^2)
             = sum (gamma+delta+1)_n / (gamma+1)_n P_n(x) t^n
    which=2: 0F1(; gamma+1; (x-1)t/2) 0F1(; delta+1; (x+1)t/2)
             = sum P_n(x) t^n / ((gamma+1)_n (delta+1)_n)
    """
    if which not in (1, 2):
        raise DomainError("which must be 1 or 2")
    g, d, xv = Fraction(gamma), Fraction(delta), Fraction(x)
    name = f"genfun-jacobi-{which}[gamma={g}, delta={d}, x={xv}, order={order}]"
    values = [jacobi_coeffs_exact(n, JacobiParams(g, d))(xv) for n in range(order + 1)]
    t = FormalSeries.identity(order)

    if which == 1:
        inner = gr(2 * (xv - 1)) * t * one_minus_t_power(-2, order)
        hyper = hypergeometric_series(
            [Fraction(g + d + 1, 2), Fraction(g + d + 2, 2)], [g + 1], order)
        lhs = one_minus_t_power(-(g + d + 1), order) * hyper.compose(inner)
        rhs_coeffs = [
            _exact_pochhammer(gr(g + d + 1), n) / _exact_pochhammer(gr(g + 1), n)
            * values[n]
            for n in range(order + 1)]
    else:
        s1 = hypergeometric_series([], [g + 1], order).compose(
            gr(Fraction(xv - 1, 2)) * t)
        s2 = hypergeometric_series([], [d + 1], order).compose(
            gr(Fraction(xv + 1, 2)) * t)
        lhs = s1 * s2
        rhs_coeffs = [
            values[n] / (_exact_pochhammer(gr(g + 1), n) * _exact_pochhammer(gr(d + 1), n))
            for n in range(order + 1)]
    return _series_report(name, lhs, FormalSeries(rhs_coeffs, order))


def genfun_chahn_check(which: int, alpha, beta, gamma, delta, z,
                       order: int) -> VerificationReport:
    """Continuous Hahn generating functions at a fixed rational z.

    which=1: (1-t)^(1-S) 3F2(.; -4t/(1-t)^2)
             = sum (S-1)_n / ((alpha+beta)_n (alpha+gamma)_n) (t/i)^n p_n(z)
             with S = alpha+beta+gamma+delta and p_n(z; alpha, delta, gamma, beta)
    which=2: sum (t/i)^n p_n(z) / ((gamma+alpha)_n (delta+beta)_n (alpha+beta)_n)
             = double series in (alpha+iz)_p (beta-iz)_k, truncated at p+k <= order
    """
    if which not in (1, 2):
        raise DomainError("which must be 1 or 2")
    al, be, ga, de = gr(alpha), gr(beta), gr(gamma), gr(delta)
    zv = gr(z)
    name = f"genfun-chahn-{which}[alpha={al}, beta={be}, gamma={ga}, delta={de}, z={zv}, order={order}]"
    s_total = al + be + ga + de
    a_iz = al + GR_I * zv
    b_iz = be - GR_I * zv
    minus_i = -GR_I
    params = HahnParams(al, de, ga, be)
    p_values = [chahn_coeffs_exact(n, params)(zv) for n in range(order + 1)]
    half = GaussianRational(Fraction(1, 2))

    if which == 1:
        inner = gr(-4) * FormalSeries.identity(order) * one_minus_t_power(-2, order)
        hyper = hypergeometric_series(
            [(s_total - 1) * half, s_total * half, a_iz],
            [ga + al, al + be], order)
        lhs = one_minus_t_power(GR_ONE - s_total, order) * hyper.compose(inner)
        rhs_coeffs = [
            _exact_pochhammer(s_total - 1, n)
            / (_exact_pochhammer(al + be, n) * _exact_pochhammer(al + ga, n))
            * (minus_i ** n) * p_values[n]
            for n in range(order + 1)]
        return _series_report(name, lhs, FormalSeries(rhs_coeffs, order),
                              GENFUN_EXPONENT_NOTE)

    lhs_coeffs = [
        (minus_i ** n) * p_values[n]
        / (_exact_pochhammer(ga + al, n) * _exact_pochhammer(de + be, n)
           * _exact_pochhammer(al + be, n))
        for n in range(order + 1)]
    rhs_coeffs = [gr(0) for _ in range(order + 1)]
    for p in range(order + 1):
        for k in range(order + 1 - p):
            term = (gr(-1) ** p) * _exact_pochhammer(a_iz, p) * _exact_pochhammer(b_iz, k) \
                / (gr(_fact(p)) * _exact_pochhammer(ga + al, p)
                   * gr(_fact(k)) * _exact_pochhammer(de + be, k)
                   * _exact_pochhammer(al + be, p + k))
            rhs_coeffs[p + k] = rhs_coeffs[p + k] + term
    return _series_report(name, FormalSeries(lhs_coeffs, order),
                          FormalSeries(rhs_coeffs, order))


def _fact(k: int) -> int:
    out = 1
    for j in range(2, k + 1):
        out *= j
    return out


def contiguous_check(which: int, n: int, alpha, beta, gamma, delta) -> VerificationReport:
    """Relations between three continuous Hahn polynomials, exact in z.

    which=1 (n >= 1):
      (alpha+beta+n)(alpha+iz) p_n(z; alpha,delta,gamma,beta)
        = (alpha+beta)(alpha+iz) p_n(z; alpha+1,delta,gamma-1,beta)
        + i (n+S-1)(alpha+iz)(beta-iz) p_{n-1}(z; alpha+1,delta,gamma,beta+1)
    which=2:
      (2n+S)(alpha+iz) p_n(z; alpha+1,delta,gamma,beta)
        = (alpha+beta+n)(n+gamma+alpha) p_n(z; alpha,delta,gamma,beta)
        + i (n+1) p_{n+1}(z; alpha,delta,gamma,beta)
    """
    if which not in (1, 2):
        raise DomainError("which must be 1 or 2")
    al, be, ga, de = gr(alpha), gr(beta), gr(gamma), gr(delta)
    name = f"contiguous-{which}[n={n}, alpha={al}, beta={be}, gamma={ga}, delta={de}]"
    s_total = al + be + ga + de
    alpha_plus_iz = ExactPoly([al, GR_I])
    beta_minus_iz = ExactPoly([be, -GR_I])

    if which == 1:
        if n < 1:
            raise DomainError("which=1 needs n >= 1")
        p_n = chahn_coeffs_exact(n, HahnParams(al, de, ga, be))
        p_shift = chahn_coeffs_exact(n, HahnParams(al + 1, de, ga - 1, be))
        p_lower = chahn_coeffs_exact(n - 1, HahnParams(al + 1, de, ga, be + 1))
        lhs = (al + be + n) * (alpha_plus_iz * p_n)
        rhs = (al + be) * (alpha_plus_iz * p_shift) \
            + (GR_I * (s_total + (n - 1))) * (alpha_plus_iz * (beta_minus_iz * p_lower))
        note = CONTIGUOUS_LHS_NOTE
    else:
        p_n = chahn_coeffs_exact(n, HahnParams(al, de, ga, be))
        p_up = chahn_coeffs_exact(n + 1, HahnParams(al, de, ga, be))
        p_shift = chahn_coeffs_exact(n, HahnParams(al + 1, de, ga, be))
        lhs = (s_total + 2 * n) * (alpha_plus_iz * p_shift)
        rhs = ((al + be + n) * (ga + al + n)) * p_n + (GR_I * (n + 1)) * p_up
        note = ""
    residual = lhs - rhs
    detail = note if residual.is_zero() else \
        ((note + "; " if note else "") + f"residual {residual}")
    return exact_report(name, residual.max_abs_coefficient(), detail)


def jacobi_classical_check(which: str, n: int, gamma, delta) -> VerificationReport:
    """Classical Jacobi identities as exact polynomial statements.

    which="derivative": d/dx P_n = (n+gamma+delta+1)/2 * P_{n-1}^{(gamma+1,delta+1)}
    which="eq454":      (n+gamma+1) P_n - (n+1) P_{n+1}
                        = (2n+gamma+delta+2)/2 * (1-x) P_n^{(gamma+1,delta)}
    """
    g, d = Fraction(gamma), Fraction(delta)
    name = f"jacobi-classical-{which}[n={n}, gamma={g}, delta={d}]"
    if which == "derivative":
        lhs = jacobi_coeffs_exact(n, JacobiParams(g, d)).derivative()
        if n == 0:
            rhs = ExactPoly.zero()
        else:
            rhs = gr(Fraction(1, 2)) * gr(n + g + d + 1) \
                * jacobi_coeffs_exact(n - 1, JacobiParams(g + 1, d + 1))
    elif which == "eq454":
        pn = jacobi_coeffs_exact(n, JacobiParams(g, d))
        pn1 = jacobi_coeffs_exact(n + 1, JacobiParams(g, d))
        lhs = gr(n + g + 1) * pn - gr(n + 1) * pn1
        rhs = gr(Fraction(1, 2)) * gr(2 * n + g + d + 2) \
            * (ExactPoly([GR_ONE, -GR_ONE]) * jacobi_coeffs_exact(n, JacobiParams(g + 1, d)))
    else:
        raise DomainError("which must be 'derivative' or 'eq454'")
    residual = lhs - rhs
    detail = "" if residual.is_zero() else f"residual {residual}"
    return exact_report(name, residual.max_abs_coefficient(), detail)
