"""Jacobi, continuous Hahn, Bateman and Pasternack polynomials.

Floating evaluation accumulates the terminating hypergeometric sum through
its term ratio (never through gamma quotients, which would reintroduce the
very poles the termination avoids).  Exact construction builds coefficient
vectors over Q(i) with the same recurrences; exactness is honest in the
sense that float inputs are rejected rather than silently coerced.

Conventions, fixed once here and used everywhere downstream:

  jacobi:      P_n(x) with parameters (gamma, delta), argument x
  chahn:       p_n(x) with parameters (a, b, c, d), leading coefficient
               (n + a+b+c+d - 1)_n / n!
  pasternack:  F_n(x) with parameter m; m = 0 is the Bateman polynomial;
               related to chahn by
               F_n(x) = p_n(-ix/2; (1+m)/2, (1-m)/2, (1-m)/2, (1+m)/2)
                        / (i^n (1+m)_n)
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, ExactInputError, PoleError
from .exact import GR_I, GR_ONE, ExactPoly, GaussianRational, gr
from .reports import VerificationReport, exact_report

# coefficient growth is unbounded; cap keeps exact runs tractable
EXACT_DEGREE_CAP = 64

_EXACT_TYPES = (int, Fraction, GaussianRational)


def _is_exact(value) -> bool:
    return isinstance(value, _EXACT_TYPES)


def _check_exact_degree(n: int):
    if n < 0:
        raise DomainError("polynomial degree must be nonnegative")
    if n > EXACT_DEGREE_CAP:
        raise DomainError(f"exact mode is capped at degree {EXACT_DEGREE_CAP}")


def _poch_has_zero(value, n: int) -> bool:
    """True when (value)_k = 0 for some k <= n."""
    if _is_exact(value):
        g = gr(value)
        if g.im != 0:
            return False
        v = g.re
        return v.denominator == 1 and -(n - 1) <= v <= 0
    z = complex(value)
    if abs(z.imag) > 1e-12:
        return False
    r = round(z.real)
    return abs(z.real - r) < 1e-12 and -(n - 1) <= r <= 0


@dataclass(frozen=True)
class JacobiParams:
    gamma: object
    delta: object

    def validate_for_degree(self, n: int):
        # (gamma+1)_k appears in every series denominator
        if _poch_has_zero(_add1(self.gamma), n):
            raise PoleError(f"(gamma+1)_k vanishes for k <= {n}")

    def is_exact(self) -> bool:
        return _is_exact(self.gamma) and _is_exact(self.delta)


@dataclass(frozen=True)
class HahnParams:
    a: object
    b: object
    c: object
    d: object

    def validate_for_degree(self, n: int):
        if _poch_has_zero(_add(self.a, self.c), n):
            raise PoleError(f"(a+c)_k vanishes for k <= {n}")
        if _poch_has_zero(_add(self.a, self.d), n):
            raise PoleError(f"(a+d)_k vanishes for k <= {n}")

    def is_exact(self) -> bool:
        return all(_is_exact(v) for v in (self.a, self.b, self.c, self.d))


def _add(u, v):
    if _is_exact(u) and _is_exact(v):
        return gr(u) + gr(v)
    return complex(_to_complex(u)) + complex(_to_complex(v))


def _add1(u):
    return _add(u, 1)


def _to_complex(value) -> complex:
    if isinstance(value, GaussianRational):
        return value.to_complex()
    if isinstance(value, Fraction):
        return complex(float(value))
    return complex(value)


# ---------------------------------------------------------------------------
# floating evaluation (term-ratio accumulation)
# ---------------------------------------------------------------------------

def jacobi_eval(n: int, params: JacobiParams, x: complex) -> complex:
    """P_n at x: ((gamma+1)_n / n!) * 2F1(-n, n+gamma+delta+1; gamma+1; (1-x)/2).

    Exact parameters are routed through the exact coefficient vector and a
    single Horner pass; the unit-argument terminating series loses digits
    to term cancellation at large n, the exact route does not.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if params.is_exact() and n <= EXACT_DEGREE_CAP:
        return horner(_jacobi_exact_cached(n, params).complex_coeffs(),
                      _to_complex(x))
    params.validate_for_degree(n)
    g = _to_complex(params.gamma)
    d = _to_complex(params.delta)
    xc = _to_complex(x)
    prefactor = complex(1.0)
    for j in range(n):
        prefactor *= (g + 1 + j) / (j + 1)
    u = 0.5 * (1.0 - xc)
    term = complex(1.0)
    total = complex(1.0)
    for k in range(n):
        term *= (k - n) * (n + g + d + 1 + k) / ((g + 1 + k) * (k + 1)) * u
        total += term
    return prefactor * total


def chahn_eval(n: int, params: HahnParams, x: complex) -> complex:
    """p_n at x: i^n ((a+c)_n (a+d)_n / n!) * terminating 3F2 at unit argument.

    Exact parameters go through the exact coefficients, as in jacobi_eval.
    """
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if params.is_exact() and n <= EXACT_DEGREE_CAP:
        return horner(_chahn_exact_cached(n, params).complex_coeffs(),
                      _to_complex(x))
    params.validate_for_degree(n)
    a = _to_complex(params.a)
    b = _to_complex(params.b)
    c = _to_complex(params.c)
    d = _to_complex(params.d)
    s = a + b + c + d
    xc = _to_complex(x)
    prefactor = 1j ** (n % 4)
    for j in range(n):
        prefactor *= (a + c + j) * (a + d + j) / (j + 1)
    term = complex(1.0)
    total = complex(1.0)
    for k in range(n):
        term *= (k - n) * (n + s - 1 + k) * (a + 1j * xc + k) \
            / ((a + c + k) * (a + d + k) * (k + 1))
        total += term
    return prefactor * total


def pasternack_eval(n: int, m: complex, x: complex) -> complex:
    """F_n at x: 3F2(-n, n+1, (1+m+x)/2; 1, m+1; 1); m = 0 is Bateman's F_n."""
    if n < 0:
        raise DomainError("degree must be nonnegative")
    if _is_exact(m) and n <= EXACT_DEGREE_CAP:
        return horner(pasternack_coeffs_exact(n, m).complex_coeffs(),
                      _to_complex(x))
    if _poch_has_zero(_add1(m), n):
        raise PoleError(f"(m+1)_k vanishes for k <= {n}")
    mc = _to_complex(m)
    xc = _to_complex(x)
    term = complex(1.0)
    total = complex(1.0)
    for k in range(n):
        term *= (k - n) * (n + 1 + k) * (0.5 * (1 + mc + xc) + k) \
            / ((1 + k) * (mc + 1 + k) * (k + 1))
        total += term
    return total


# ---------------------------------------------------------------------------
# exact coefficient construction
# ---------------------------------------------------------------------------

def _exact_pochhammer(a: GaussianRational, k: int) -> GaussianRational:
    result = GR_ONE
    for j in range(k):
        result = result * (a + j)
    return result


def jacobi_coeffs_exact(n: int, params: JacobiParams) -> ExactPoly:
    """Exact coefficient vector of P_n for rational (or Q(i)) parameters."""
    _check_exact_degree(n)
    if not params.is_exact():
        raise ExactInputError("exact mode requires exact gamma, delta")
    params.validate_for_degree(n)
    g, d = gr(params.gamma), gr(params.delta)
    prefactor = _exact_pochhammer(g + 1, n) / gr(math.factorial(n))
    half = GaussianRational(Fraction(1, 2))
    # accumulate sum_k r_k ((1-x)/2)^k with the term ratio in Q(i)
    one_minus_x_over_2 = ExactPoly([half, -half])
    power = ExactPoly.one()
    ratio = GR_ONE
    acc = ExactPoly.one()
    for k in range(n):
        ratio = ratio * gr(k - n) * (g + d + gr(n + 1 + k)) \
            / ((g + gr(1 + k)) * gr(k + 1))
        power = power * one_minus_x_over_2
        acc = acc + ratio * power
    poly = prefactor * acc
    if poly.degree != n:
        raise PoleError(f"degenerate parameters: degree {poly.degree} != {n}")
    return poly


def chahn_coeffs_exact(n: int, params: HahnParams) -> ExactPoly:
    """Exact coefficients of p_n; leading coefficient (n+a+b+c+d-1)_n / n!."""
    _check_exact_degree(n)
    if not params.is_exact():
        raise ExactInputError("exact mode requires exact a, b, c, d")
    params.validate_for_degree(n)
    a, b = gr(params.a), gr(params.b)
    c, d = gr(params.c), gr(params.d)
    s = a + b + c + d
    prefactor = (GR_I ** n) * _exact_pochhammer(a + c, n) \
        * _exact_pochhammer(a + d, n) / gr(math.factorial(n))
    # (a + ix)_k built up one linear factor at a time
    power = ExactPoly.one()
    ratio = GR_ONE
    acc = ExactPoly.one()
    for k in range(n):
        ratio = ratio * gr(k - n) * (s + gr(n - 1 + k)) \
            / ((a + c + gr(k)) * (a + d + gr(k)) * gr(k + 1))
        power = power * ExactPoly([a + k, GR_I])
        acc = acc + ratio * power
    poly = prefactor * acc
    if poly.degree != n:
        raise PoleError(f"degenerate parameters: degree {poly.degree} != {n}")
    return poly


def pasternack_coeffs_exact(n: int, m) -> ExactPoly:
    """Exact coefficients of F_n for rational m (real coefficients)."""
    _check_exact_degree(n)
    if not _is_exact(m):
        raise ExactInputError("exact mode requires rational m")
    if _poch_has_zero(_add1(m), n):
        raise PoleError(f"(m+1)_k vanishes for k <= {n}")
    mg = gr(m)
    half = GaussianRational(Fraction(1, 2))
    ratio = GR_ONE
    acc = ExactPoly.one()
    power = ExactPoly.one()
    for k in range(n):
        ratio = ratio * gr(k - n) * gr(n + 1 + k) \
            / (gr(1 + k) * (mg + gr(1 + k)) * gr(k + 1))
        power = power * ExactPoly([(GR_ONE + mg) * half + k, half])
        acc = acc + ratio * power
    return acc


_jacobi_exact_cached = lru_cache(maxsize=512)(jacobi_coeffs_exact)
_chahn_exact_cached = lru_cache(maxsize=512)(chahn_coeffs_exact)


# ---------------------------------------------------------------------------
# floating coefficient vectors (for Horner evaluation inside integrands)
# ---------------------------------------------------------------------------

def horner(coeffs, x: complex) -> complex:
    acc = 0j
    for c in reversed(coeffs):
        acc = acc * x + c
    return acc


def _poly_add(p, q):
    n = max(len(p), len(q))
    return [(p[k] if k < len(p) else 0j) + (q[k] if k < len(q) else 0j)
            for k in range(n)]


def _poly_mul_linear(p, c0, c1):
    out = [c0 * p[0]]
    for k in range(1, len(p)):
        out.append(c0 * p[k] + c1 * p[k - 1])
    out.append(c1 * p[-1])
    return out


def jacobi_coeffs_complex(n: int, params: JacobiParams) -> list:
    # exact parameters route through the exact builder: coefficient assembly
    # by float term accumulation loses digits to cancellation at large n
    if params.is_exact() and n <= EXACT_DEGREE_CAP:
        return jacobi_coeffs_exact(n, params).complex_coeffs()
    params.validate_for_degree(n)
    g = _to_complex(params.gamma)
    d = _to_complex(params.delta)
    prefactor = complex(1.0)
    for j in range(n):
        prefactor *= (g + 1 + j) / (j + 1)
    acc = [complex(1.0)]
    power = [complex(1.0)]
    ratio = complex(1.0)
    for k in range(n):
        ratio *= (k - n) * (n + g + d + 1 + k) / ((g + 1 + k) * (k + 1))
        power = _poly_mul_linear(power, 0.5, -0.5)
        acc = _poly_add(acc, [ratio * c for c in power])
    return [prefactor * c for c in acc]


def chahn_coeffs_complex(n: int, params: HahnParams) -> list:
    if params.is_exact() and n <= EXACT_DEGREE_CAP:
        return chahn_coeffs_exact(n, params).complex_coeffs()
    params.validate_for_degree(n)
    a = _to_complex(params.a)
    b = _to_complex(params.b)
    c = _to_complex(params.c)
    d = _to_complex(params.d)
    s = a + b + c + d
    prefactor = 1j ** (n % 4)
    for j in range(n):
        prefactor *= (a + c + j) * (a + d + j) / (j + 1)
    acc = [complex(1.0)]
    power = [complex(1.0)]
    ratio = complex(1.0)
    for k in range(n):
        ratio *= (k - n) * (n + s - 1 + k) / ((a + c + k) * (a + d + k) * (k + 1))
        power = _poly_mul_linear(power, a + k, 1j)
        acc = _poly_add(acc, [ratio * c_ for c_ in power])
    return [prefactor * c_ for c_ in acc]


def pasternack_coeffs_complex(n: int, m) -> list:
    if _is_exact(m) and n <= EXACT_DEGREE_CAP:
        return pasternack_coeffs_exact(n, m).complex_coeffs()
    if _poch_has_zero(_add1(m), n):
        raise PoleError(f"(m+1)_k vanishes for k <= {n}")
    mc = _to_complex(m)
    acc = [complex(1.0)]
    power = [complex(1.0)]
    ratio = complex(1.0)
    for k in range(n):
        ratio *= (k - n) * (n + 1 + k) / ((1 + k) * (mc + 1 + k) * (k + 1))
        power = _poly_mul_linear(power, 0.5 * (1 + mc) + k, 0.5)
        acc = _poly_add(acc, [ratio * c for c in power])
    return acc


def pasternack_hahn_params(m) -> HahnParams:
    """The continuous Hahn parameter tuple behind F_n^m."""
    half = Fraction(1, 2) if _is_exact(m) else 0.5
    if _is_exact(m):
        mg = gr(m)
        p = (GR_ONE + mg) * GaussianRational(half)
        q = (GR_ONE - mg) * GaussianRational(half)
    else:
        mc = _to_complex(m)
        p = (1 + mc) * half
        q = (1 - mc) * half
    return HahnParams(p, q, q, p)


def pasternack_reflection_check(n: int, m) -> VerificationReport:
    """Exact identity (1+m)_n F_n^m(x) = (1-m)_n F_n^{-m}(x)."""
    name = f"pasternack-reflection[n={n}, m={m}]"
    mg = gr(m)
    lhs = _exact_pochhammer(GR_ONE + mg, n) * pasternack_coeffs_exact(n, mg)
    rhs = _exact_pochhammer(GR_ONE - mg, n) * pasternack_coeffs_exact(n, -mg)
    residual = lhs - rhs
    detail = "" if residual.is_zero() else f"residual {residual}"
    return exact_report(name, residual.max_abs_coefficient(), detail)
