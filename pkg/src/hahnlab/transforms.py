"""Fourier, Mellin and Parseval transform-pair verifications.

Each check computes one side of a transform identity by adaptive
quadrature and the other side in closed form from gamma functions and a
continuous Hahn value, then reports the discrepancy.  The Fourier
convention is F(f)(z) = int e^{-ixz} f(x) dx with Parseval constant 2*pi.
"""

from __future__ import annotations

import cmath
import math

from .errors import DomainError
from .numerics import gamma_product, log_gamma_complex
from .polynomials import (HahnParams, JacobiParams, _to_complex, chahn_eval,
                          chahn_coeffs_complex, horner, jacobi_coeffs_complex)
from .quadrature import (DEFAULT_CONFIG, IntegralResult, QuadratureConfig,
                         integrate_line)
from .reports import QuadDiagnostics, VerificationReport, toleranced_report

_LOG_2 = math.log(2.0)

MELLIN_SIGN_NOTE = (
    "closed form often quoted with Gamma(beta - i*lambda); the substitution "
    "x = exp(-2u) reduces the integral to the Fourier pair at z = -2*lambda, "
    "which carries Gamma(beta + i*lambda)")


def tanh_weight_logs(x: float) -> tuple[float, float]:
    """(log(1 - tanh x), log(1 + tanh x)) without cancellation or overflow."""
    ax = abs(x)
    e = math.exp(-2.0 * ax)
    lo = _LOG_2 - 2.0 * ax - math.log1p(e)
    hi = _LOG_2 - math.log1p(e)
    return (lo, hi) if x >= 0.0 else (hi, lo)


def tanh_weight(x: float, alpha: complex, beta: complex) -> complex:
    """(1 - tanh x)^alpha (1 + tanh x)^beta, complex exponents allowed."""
    l1, l2 = tanh_weight_logs(x)
    return cmath.exp(alpha * l1 + beta * l2)


def _weighted_jacobi_envelope(coeff_bound: float, re_alpha: float, re_beta: float):
    def env(x: float) -> float:
        l1, l2 = tanh_weight_logs(abs(x))
        return coeff_bound * max(math.exp(re_alpha * l1 + re_beta * l2),
                                 math.exp(re_alpha * l2 + re_beta * l1))
    return env


def _require_positive_re(**named):
    for name, value in named.items():
        if _to_complex(value).real <= 0.0:
            raise DomainError(f"Re({name}) must be positive")


def _weighted_jacobi_transform(n, alpha, beta, gamma, delta, z,
                               config: QuadratureConfig) -> IntegralResult:
    """Quadrature side of the Fourier pair at frequency z."""
    al, be = _to_complex(alpha), _to_complex(beta)
    coeffs = jacobi_coeffs_complex(n, JacobiParams(gamma, delta))
    bound = sum(abs(c) for c in coeffs)

    def f(x: float) -> complex:
        l1, l2 = tanh_weight_logs(x)
        return cmath.exp(-1j * z * x + al * l1 + be * l2) \
            * horner(coeffs, math.tanh(x))

    env = _weighted_jacobi_envelope(bound, al.real, be.real)
    width = math.pi / abs(z) if z else None
    return integrate_line(f, env, config, max_panel_width=width)


def _fourier_closed_form(n, alpha, beta, gamma, delta, z) -> complex:
    al, be = _to_complex(alpha), _to_complex(beta)
    ga, de = _to_complex(gamma), _to_complex(delta)
    hp = HahnParams(al, de - be + 1, ga - al + 1, be)
    return cmath.exp((al + be - 1) * _LOG_2) \
        * gamma_product([al + 0.5j * z, be - 0.5j * z], [al + be + n]) \
        * (-1j) ** (n % 4) * chahn_eval(n, hp, 0.5 * z)


def fourier_pair_check(n: int, alpha, beta, gamma, delta, z: float,
                       config: QuadratureConfig = DEFAULT_CONFIG,
                       tol: float = 1e-8, tol_abs: float = 1e-12) -> VerificationReport:
    """Quadrature of e^{-ixz} (1-tanh x)^alpha (1+tanh x)^beta P_n(tanh x)
    against 2^{alpha+beta-1} Gamma(alpha+iz/2) Gamma(beta-iz/2) /
    Gamma(alpha+beta+n) * i^{-n} p_n(z/2)."""
    _require_positive_re(alpha=alpha, beta=beta)
    name = f"fourier-pair[n={n}, z={z}]"
    lhs = _weighted_jacobi_transform(n, alpha, beta, gamma, delta, z, config)
    rhs = _fourier_closed_form(n, alpha, beta, gamma, delta, z)
    abs_err = abs(lhs.value - rhs)
    rel_err = abs_err / max(abs(rhs), 1e-300)
    diag = QuadDiagnostics(lhs.evaluations, lhs.error_estimate)
    return toleranced_report(name, abs_err, rel_err, tol, tol_abs,
                             f"lhs={lhs.value!r} rhs={rhs!r}", diag)


def mellin_pair_check(n: int, alpha, beta, gamma, delta, lam: float,
                      config: QuadratureConfig = DEFAULT_CONFIG,
                      tol: float = 1e-8, tol_abs: float = 1e-12) -> VerificationReport:
    """Mellin transform of x^alpha (1+x)^{-alpha-beta} P_n((1-x)/(1+x)) at
    s = -i*lambda, computed through the x = exp(-2u) reduction to the
    Fourier pair; both quoted and substitution-consistent gamma-argument conventions of
    the closed form are measured and the matching one is reported."""
    _require_positive_re(alpha=alpha, beta=beta)
    name = f"mellin-pair[n={n}, lambda={lam}]"
    al, be = _to_complex(alpha), _to_complex(beta)
    ga, de = _to_complex(gamma), _to_complex(delta)
    scale = cmath.exp((1 - al - be) * _LOG_2)
    lhs = _weighted_jacobi_transform(n, alpha, beta, gamma, delta, -2.0 * lam, config)
    lhs_value = scale * lhs.value

    hp = HahnParams(al, de - be + 1, ga - al + 1, be)
    pol = (-1j) ** (n % 4) * chahn_eval(n, hp, -lam)
    rhs_quoted = gamma_product([al - 1j * lam, be - 1j * lam], [al + be + n]) * pol
    rhs_corrected = gamma_product([al - 1j * lam, be + 1j * lam], [al + be + n]) * pol

    err_quoted = abs(lhs_value - rhs_quoted)
    err_corrected = abs(lhs_value - rhs_corrected)
    scale_ref = max(abs(rhs_corrected), abs(rhs_quoted), 1e-300)
    rel_quoted = err_quoted / scale_ref
    rel_corrected = err_corrected / scale_ref
    if lam == 0.0:
        which = "conventions coincide at lambda = 0"
    elif rel_corrected <= rel_quoted:
        which = (f"Gamma(beta + i*lambda) convention matches "
                 f"(rel {rel_corrected:.3e}); quoted convention off by rel "
                 f"{rel_quoted:.3e}")
    else:
        which = (f"quoted Gamma(beta - i*lambda) convention matches "
                 f"(rel {rel_quoted:.3e}); corrected off by rel {rel_corrected:.3e}")
    best_abs = min(err_quoted, err_corrected)
    best_rel = min(rel_quoted, rel_corrected)
    diag = QuadDiagnostics(lhs.evaluations, lhs.error_estimate)
    return toleranced_report(name, best_abs, best_rel, tol, tol_abs,
                             which + "; " + MELLIN_SIGN_NOTE, diag)


def parseval_check(n: int, m: int, alpha, beta, a, b, gamma, delta, c, d,
                   config: QuadratureConfig = DEFAULT_CONFIG,
                   tol: float = 1e-8, tol_abs: float = 1e-10) -> VerificationReport:
    """Both sides of the Parseval identity for two weighted Jacobi factors,
    for general parameters (no orthogonality specialization imposed)."""
    _require_positive_re(alpha=alpha, beta=beta, a=a, b=b)
    name = f"parseval[n={n}, m={m}]"
    al, be = _to_complex(alpha), _to_complex(beta)
    av, bv = _to_complex(a), _to_complex(b)
    ga, de = _to_complex(gamma), _to_complex(delta)
    cv, dv = _to_complex(c), _to_complex(d)

    # left: 2 pi * integral of the tanh-substituted beta-type integrand
    pn = jacobi_coeffs_complex(n, JacobiParams(ga, de))
    pm = jacobi_coeffs_complex(m, JacobiParams(cv, dv))
    wa, wb = al + av, be + bv
    bound = sum(abs(u) for u in pn) * sum(abs(u) for u in pm)

    def f_left(x: float) -> complex:
        l1, l2 = tanh_weight_logs(x)
        t = math.tanh(x)
        return cmath.exp(wa * l1 + wb * l2) * horner(pn, t) * horner(pm, t)

    left = integrate_line(f_left, _weighted_jacobi_envelope(bound, wa.real, wb.real),
                          config)
    lhs_value = 2.0 * math.pi * left.value

    # right: gamma-weighted line integral over the transforms
    hp_n = HahnParams(al, de - be + 1, ga - al + 1, be)
    hp_m_conj = HahnParams(av.conjugate(),
                           dv.conjugate() - bv.conjugate() + 1,
                           cv.conjugate() - av.conjugate() + 1,
                           bv.conjugate())
    cn = chahn_coeffs_complex(n, hp_n)
    cm = chahn_coeffs_complex(m, hp_m_conj)
    log_norm = -(log_gamma_complex(al + be + n) + log_gamma_complex(av + bv + m))

    def gamma_sum_log(z: float) -> complex:
        hz = 0.5j * z
        return (log_gamma_complex(al + hz) + log_gamma_complex(be - hz)
                + log_gamma_complex(av - hz) + log_gamma_complex(bv + hz)
                + log_norm)

    def f_right(z: float) -> complex:
        w = cmath.exp(gamma_sum_log(z))
        return w * horner(cn, 0.5 * z) * horner(cm, 0.5 * z).conjugate()

    def env_right(z: float) -> float:
        g = gamma_sum_log(z).real
        r = 0.5 * abs(z)
        pb = sum(abs(u) * r ** k for k, u in enumerate(cn)) \
            * sum(abs(u) * r ** k for k, u in enumerate(cm))
        return math.exp(g) * pb

    right = integrate_line(f_right, env_right, config)
    rhs_value = (1j ** ((m - n) % 4)) \
        * cmath.exp((al + av + be + bv - 2) * _LOG_2) * right.value

    abs_err = abs(lhs_value - rhs_value)
    rel_err = abs_err / max(abs(lhs_value), abs(rhs_value), 1e-300)
    diag = QuadDiagnostics(left.evaluations + right.evaluations,
                           left.error_estimate + right.error_estimate)
    return toleranced_report(name, abs_err, rel_err, tol, tol_abs,
                             f"lhs={lhs_value!r} rhs={rhs_value!r}", diag)
