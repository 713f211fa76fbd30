"""
Appell families v(t) * e^(x t): Bernoulli, Glaisher, Apostol-Bernoulli,
Imschenetsky, Euler, Genocchi, Carlitz, and the Bernoulli numbers.

All of them satisfy (c0 + c1*u) * yhat = sum of t^m e^(rate t) terms with
u = e^t, so their OGFs solve tau(F) = R*F + S for the unit shift.
"""

import logging
from math import factorial

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.catalog.base import (
    SYMBOLIC,
    CatalogEntry,
    EquationTemplate,
    Params,
    ReferenceTerms,
    TemplateTerm,
    X,
    t_poly,
)
from core.series.engine import Series, compose, reciprocal
from core.services.egf_compiler import U_VAR, EgfEquation, ExpMonomial
from core.tau.equation import ResidualReport

logger = logging.getLogger(__name__)

ONE_PLUS_T = t_poly(ONE, ONE)
X_DEFAULTS = ({"x": 1}, {"x": 2}, {"x": "-1/2"})
GAMMA_DEFAULTS = ({"x": 1, "gamma": 2}, {"x": 2, "gamma": "1/2"}, {"x": -1, "gamma": 2})


def _u(*coeffs) -> Poly:
    return Poly(coeffs, U_VAR)


def _xt_minus_t_minus_one(x) -> Poly:
    return t_poly(-ONE, x - 1)


def _one_plus_t_minus_xt(x) -> Poly:
    return t_poly(ONE, ONE - x)


def bernoulli_kernel(order: int) -> Series:
    """t/(e^t - 1) as the reciprocal of sum t^n/(n+1)!."""
    return reciprocal(Series((GaussRat(1) / factorial(n + 1) for n in range(order)), order))


def _exp_plus_one_inverse(order: int) -> Series:
    return reciprocal(Series.exp_linear(ONE, order) + 1)


class BernoulliEntry(CatalogEntry):
    title = "Bernoulli polynomials B_n(x)"
    provenance = "first-order table, Bernoulli row: EGF t e^(xt)/(e^t - 1), R = 1+t"
    default_params = X_DEFAULTS
    references = (
        ReferenceTerms({"x": 0}, ("1", "-1/2", "1/6", "0", "-1/30"), "Bernoulli numbers B_n(0)"),
    )

    @property
    def name(self) -> str:
        return "bernoulli"

    def egf(self, p: Params, order: int) -> Series:
        return Series.exp_linear(p.x, order) * bernoulli_kernel(order)

    def template(self, p: Params) -> EquationTemplate:
        S = TemplateTerm(-(ONE_PLUS_T * t_poly(ZERO, ONE)), _xt_minus_t_minus_one(p.x) ** 2)
        return EquationTemplate.first_order(TemplateTerm(ONE_PLUS_T), S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(-1, 1),), (ExpMonomial(1, p.x, ONE),))


class GlaisherEntry(CatalogEntry):
    title = "Glaisher polynomials U_n(x)"
    provenance = (
        "first-order table, Glaisher row: EGF t e^(xt)/(e^t + 1); "
        "R stored as -(1+t), the printed 1+t carries a sign slip"
    )
    default_params = X_DEFAULTS
    references = (
        ReferenceTerms({"x": 0}, ("0", "1/2", "-1/2", "0", "1/2", "0", "-3/2"), "t/(e^t + 1)"),
    )

    @property
    def name(self) -> str:
        return "glaisher"

    def egf(self, p: Params, order: int) -> Series:
        return (Series.exp_linear(p.x, order) * _exp_plus_one_inverse(order)).shift(1)

    def template(self, p: Params) -> EquationTemplate:
        R = TemplateTerm(-ONE_PLUS_T)
        S = TemplateTerm(ONE_PLUS_T * t_poly(ZERO, ONE), _xt_minus_t_minus_one(p.x) ** 2)
        return EquationTemplate.first_order(R, S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(1, 1),), (ExpMonomial(1, p.x, ONE),))


class ApostolBernoulliEntry(CatalogEntry):
    title = "Apostol-Bernoulli polynomials A_n^(gamma)(x)"
    provenance = "first-order table, Apostol-Bernoulli row: EGF t e^(xt)/(gamma e^t - 1), R = gamma(1+t)"
    needs_gamma = True
    gamma_loci = (ZERO,)
    default_params = GAMMA_DEFAULTS
    references = (
        ReferenceTerms({"x": 0, "gamma": 2}, ("0", "1", "-4", "18", "-104"), "t/(2e^t - 1)"),
        ReferenceTerms({"x": 0, "gamma": 1}, ("1", "-1/2", "1/6", "0", "-1/30"), "gamma = 1 is Bernoulli"),
    )

    @property
    def name(self) -> str:
        return "apostol-bernoulli"

    def egf(self, p: Params, order: int) -> Series:
        if p.gamma == 1:
            return BernoulliEntry().egf(p, order)
        denominator = Series.exp_linear(ONE, order) * p.gamma - 1
        return (Series.exp_linear(p.x, order) * reciprocal(denominator)).shift(1)

    def template(self, p: Params) -> EquationTemplate:
        R = TemplateTerm(ONE_PLUS_T * p.gamma)
        S = TemplateTerm(-(ONE_PLUS_T * t_poly(ZERO, ONE)), _xt_minus_t_minus_one(p.x) ** 2)
        return EquationTemplate.first_order(R, S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(-1, p.gamma),), (ExpMonomial(1, p.x, ONE),))


class ImschenetskyEntry(CatalogEntry):
    title = "Imschenetsky polynomials S_n(x)"
    provenance = "first-order table, Imschenetsky row: EGF t (e^(xt) - 1)/(e^t - 1), R = 1+t"
    default_params = X_DEFAULTS
    references = (ReferenceTerms({"x": 2}, ("0", "2", "2", "3", "4", "5"), "t (e^t + 1)"),)

    @property
    def name(self) -> str:
        return "imschenetsky"

    def egf(self, p: Params, order: int) -> Series:
        return (Series.exp_linear(p.x, order) - 1) * bernoulli_kernel(order)

    def template(self, p: Params) -> EquationTemplate:
        num = t_poly(ZERO, ZERO, ONE) * t_poly(-2, p.x - 2) * p.x
        den = ONE_PLUS_T * _xt_minus_t_minus_one(p.x) ** 2
        return EquationTemplate.first_order(TemplateTerm(ONE_PLUS_T), TemplateTerm(num, den))

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(-1, 1),), (ExpMonomial(1, p.x, ONE), ExpMonomial(1, ZERO, -ONE)))


class EulerEntry(CatalogEntry):
    title = "Euler polynomials E_n(x)"
    provenance = "first-order table, Euler row: EGF 2 e^(xt)/(e^t + 1), R = -(1+t)"
    default_params = X_DEFAULTS
    references = (ReferenceTerms({"x": 0}, ("1", "-1/2", "0", "1/4", "0", "-1/2"), "2/(e^t + 1)"),)

    @property
    def name(self) -> str:
        return "euler"

    def egf(self, p: Params, order: int) -> Series:
        return Series.exp_linear(p.x, order) * _exp_plus_one_inverse(order) * 2

    def template(self, p: Params) -> EquationTemplate:
        S = TemplateTerm(ONE_PLUS_T * 2, _one_plus_t_minus_xt(p.x))
        return EquationTemplate.first_order(TemplateTerm(-ONE_PLUS_T), S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(1, 1),), (ExpMonomial(0, p.x, GaussRat(2)),))


class GenocchiEntry(CatalogEntry):
    title = "Genocchi polynomials G_n(x)"
    provenance = "first-order table, Genocchi row: EGF 2t e^(xt)/(e^t + 1), R = -(1+t)"
    default_params = X_DEFAULTS
    references = (
        ReferenceTerms(
            {"x": 1},
            ("0", "1", "1", "0", "-1", "0", "3", "0", "-17", "0", "155"),
            "Genocchi numbers t + t^2 - t^4 + 3t^6 - 17t^8 + 155t^10",
        ),
    )

    @property
    def name(self) -> str:
        return "genocchi"

    def egf(self, p: Params, order: int) -> Series:
        return (Series.exp_linear(p.x, order) * _exp_plus_one_inverse(order) * 2).shift(1)

    def template(self, p: Params) -> EquationTemplate:
        S = TemplateTerm(ONE_PLUS_T * t_poly(ZERO, 2), _one_plus_t_minus_xt(p.x) ** 2)
        return EquationTemplate.first_order(TemplateTerm(-ONE_PLUS_T), S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(1, 1),), (ExpMonomial(1, p.x, GaussRat(2)),))


class CarlitzEntry(CatalogEntry):
    title = "Carlitz polynomials C_n^(gamma)(x)"
    provenance = "first-order table, Carlitz row: EGF (1-gamma) e^(xt)/(1 - gamma e^t), R = gamma(1+t)"
    needs_gamma = True
    gamma_loci = (ZERO, ONE)
    default_params = GAMMA_DEFAULTS
    references = (ReferenceTerms({"x": 0, "gamma": 2}, ("1", "-2", "6", "-26"), "1/(2e^t - 1)"),)

    @property
    def name(self) -> str:
        return "carlitz"

    def egf(self, p: Params, order: int) -> Series:
        denominator = 1 - Series.exp_linear(ONE, order) * p.gamma
        return Series.exp_linear(p.x, order) * reciprocal(denominator) * (1 - p.gamma)

    def template(self, p: Params) -> EquationTemplate:
        R = TemplateTerm(ONE_PLUS_T * p.gamma)
        S = TemplateTerm(ONE_PLUS_T * (1 - p.gamma), _one_plus_t_minus_xt(p.x))
        return EquationTemplate.first_order(R, S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(1, -p.gamma),), (ExpMonomial(0, p.x, 1 - p.gamma),))


class BernoulliNumbersEntry(CatalogEntry):
    title = "Bernoulli numbers B_n"
    provenance = "Bernoulli numbers as the OGF of t/(e^t - 1); equation tau(B) = (1+t) B - t/(1+t)"
    needs_x = False
    references = (ReferenceTerms({}, ("1", "-1/2", "1/6", "0", "-1/30"), "B_0..B_4"),)

    @property
    def name(self) -> str:
        return "bernoulli-numbers"

    def egf(self, p: Params, order: int) -> Series:
        return bernoulli_kernel(order)

    def template(self, p: Params) -> EquationTemplate:
        S = TemplateTerm(t_poly(ZERO, -ONE), ONE_PLUS_T)
        return EquationTemplate.first_order(TemplateTerm(ONE_PLUS_T), S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(-1, 1),), (ExpMonomial(1, ZERO, ONE),))


def check_bernoulli_substitution(order: int) -> ResidualReport:
    """
    B(x, t) = (1/t) * S(t/(1 + t - t x)) with S(t) = t*B0(t) + t^2, where B0
    is the Bernoulli-number OGF; checked coefficientwise in Q[x][[t]].
    """
    n = order + 1
    b0 = BernoulliNumbersEntry().build_ogf({}, n)
    s = b0.shift(1) + Series((ZERO, ZERO, ONE), n)
    inner = reciprocal(Series((ONE, ONE - X), n)).shift(1)
    lhs = BernoulliEntry().build_ogf({"x": SYMBOLIC}, order)
    rhs = Series(compose(s, inner).coeffs[1:], order)
    failing = next((k for k, (a, b) in enumerate(zip(lhs.coeffs, rhs.coeffs)) if a - b), None)
    logger.info("Bernoulli substitution identity to order %d: %s", order, "exact" if failing is None else failing)
    return ResidualReport.from_residual(failing, order)
