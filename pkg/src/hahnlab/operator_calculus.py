"""Symbolic calculus on the algebra w(x) * q(tanh x).

Here w(x) = (1 - tanh x)^alpha (1 + tanh x)^beta and q is an exact
polynomial in t = tanh x.  Differentiation stays inside the algebra:

    d/dx [w q(t)] = w [ ((beta - alpha) - (alpha + beta) t) q(t)
                        + (1 - t^2) q'(t) ].

Note the logarithmic-derivative factor.  A commonly quoted variant reads
(alpha + beta + (alpha - beta) t); direct differentiation gives
((beta - alpha) - (alpha + beta) t), and only the latter is consistent
with d/dx sech x = -sech x tanh x (the alpha = beta = 1/2 case) and with
the shifted-factorial identity checked below.  The derivation-consistent
form is used throughout and the discrepancy is flagged in report details.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, StructureError
from .exact import GR_I, GR_ONE, ExactPoly, GaussianRational, gr
from .polynomials import (HahnParams, JacobiParams, chahn_coeffs_exact,
                          jacobi_coeffs_exact, _exact_pochhammer)
from .reports import VerificationReport, exact_report

SIGN_NOTE = ("log-derivative factor used as (beta-alpha)-(alpha+beta)t; "
             "the variant (alpha+beta+(alpha-beta)t) is inconsistent with "
             "d/dx sech = -sech tanh")


@dataclass(frozen=True)
class WeightedTanhFunction:
    """x |-> (1 - tanh x)^alpha (1 + tanh x)^beta * poly(tanh x)."""

    alpha: Fraction
    beta: Fraction
    poly: ExactPoly

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "beta", Fraction(self.beta))

    def scaled(self, c) -> "WeightedTanhFunction":
        return WeightedTanhFunction(self.alpha, self.beta, gr(c) * self.poly)

    def plus(self, other: "WeightedTanhFunction") -> "WeightedTanhFunction":
        if (self.alpha, self.beta) != (other.alpha, other.beta):
            raise DomainError("cannot add functions with different weights")
        return WeightedTanhFunction(self.alpha, self.beta, self.poly + other.poly)


def weight_function(alpha, beta) -> WeightedTanhFunction:
    return WeightedTanhFunction(Fraction(alpha), Fraction(beta), ExactPoly.one())


def d_dx(f: WeightedTanhFunction) -> WeightedTanhFunction:
    a, b = gr(f.alpha), gr(f.beta)
    log_factor = ExactPoly([b - a, -(a + b)])
    one_minus_t2 = ExactPoly([GR_ONE, gr(0), -GR_ONE])
    new_poly = log_factor * f.poly + one_minus_t2 * f.poly.derivative()
    return WeightedTanhFunction(f.alpha, f.beta, new_poly)


def shifted_operator_identity_check(alpha, beta, r: int) -> VerificationReport:
    """(alpha + d/dx / 2)_r w = 2^-r (1-t)^r (alpha+beta)_r w, exactly."""
    if r < 0 or r > 32:
        raise DomainError("shift order r must be in 0..32")
    alpha, beta = Fraction(alpha), Fraction(beta)
    name = f"shifted-operator[alpha={alpha}, beta={beta}, r={r}]"
    f = weight_function(alpha, beta)
    for j in range(r):
        # factor (alpha + j + d/dx / 2), factors commute
        df = d_dx(f)
        f = WeightedTanhFunction(
            f.alpha, f.beta,
            gr(alpha + j) * f.poly + GaussianRational(Fraction(1, 2)) * df.poly)
    expected = _exact_pochhammer(gr(alpha + beta), r) \
        * GaussianRational(Fraction(1, 2 ** r)) \
        * _poly_power(ExactPoly([GR_ONE, -GR_ONE]), r)
    residual = f.poly - expected
    return exact_report(name, residual.max_abs_coefficient(), SIGN_NOTE)


def _poly_power(p: ExactPoly, k: int) -> ExactPoly:
    out = ExactPoly.one()
    for _ in range(k):
        out = out * p
    return out


def apply_operator_polynomial(op_poly: ExactPoly, scale: GaussianRational,
                              f: WeightedTanhFunction) -> WeightedTanhFunction:
    """Apply op_poly(scale * d/dx) to f as a sum of iterated derivatives.

    The operator is expanded as sum_j c_j (scale d/dx)^j; Horner-style
    application would be wrong because d/dx does not commute with
    multiplication by t.
    """
    derivatives = [f]
    for _ in range(op_poly.degree):
        derivatives.append(d_dx(derivatives[-1]))
    acc = ExactPoly.zero()
    power = GR_ONE
    for j, c in enumerate(op_poly.coeffs):
        acc = acc + (c * power) * derivatives[j].poly
        power = power * scale
    return WeightedTanhFunction(f.alpha, f.beta, acc)


def hahn_operator_identity_check(n: int, alpha, beta, gamma, delta) -> VerificationReport:
    """p_n(-i/2 d/dx; alpha, delta-beta+1, gamma-alpha+1, beta) w
    = i^n (alpha+beta)_n w P_n(tanh x), exactly."""
    alpha, beta = Fraction(alpha), Fraction(beta)
    gamma, delta = Fraction(gamma), Fraction(delta)
    if alpha <= 0 or beta <= 0:
        raise DomainError("weight exponents must be positive")
    name = f"hahn-operator[n={n}, alpha={alpha}, beta={beta}, gamma={gamma}, delta={delta}]"
    hp = HahnParams(alpha, delta - beta + 1, gamma - alpha + 1, beta)
    op_poly = chahn_coeffs_exact(n, hp)
    lhs = apply_operator_polynomial(
        op_poly, -GR_I * GaussianRational(Fraction(1, 2)),
        weight_function(alpha, beta))
    rhs_poly = (GR_I ** n) * _exact_pochhammer(gr(alpha + beta), n) \
        * jacobi_coeffs_exact(n, JacobiParams(gamma, delta))
    residual = lhs.poly - rhs_poly
    detail = SIGN_NOTE
    if gamma == 0 and delta == 0 and alpha == beta:
        m = 2 * alpha - 1
        detail += f"; sech-power specialization m={m}" + (" (Bateman)" if m == 0 else "")
    return exact_report(name, residual.max_abs_coefficient(), detail)


def derive_recurrence(n: int, params: HahnParams):
    """Exact (A_n, B_n, C_n) with x p_n = A_n p_{n+1} + B_n p_n + C_n p_{n-1}.

    The expansion of x p_n in the p-basis is computed exactly; any nonzero
    basis coefficient below index n-1 falsifies the three-term structure
    and raises StructureError.
    """
    if n < 1:
        raise DomainError("recurrence derivation needs n >= 1")
    basis = [chahn_coeffs_exact(k, params) for k in range(n + 2)]
    residual = basis[n].shift_up(1)
    coeffs = [gr(0)] * (n + 2)
    for k in range(n + 1, -1, -1):
        c = residual.coeff(k) / basis[k].leading_coefficient
        coeffs[k] = c
        if c:
            residual = residual - c * basis[k]
    if not residual.is_zero():
        raise StructureError("basis expansion left a nonzero remainder")
    bad = [(k, str(c)) for k, c in enumerate(coeffs[:max(0, n - 1)]) if c]
    if bad:
        raise StructureError(
            f"x p_{n} expansion has nonzero coefficients below n-1: {bad}")
    return coeffs[n + 1], coeffs[n], coeffs[n - 1]
