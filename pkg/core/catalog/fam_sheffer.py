"""
Sheffer families with exponential-of-exponential or geometric EGFs:
Fubini, Bell-Touchard, Mahler and Toscano's actuarial polynomials.
"""

from core.arith.gauss import ONE, ZERO
from core.arith.poly import Poly
from core.catalog.base import (
    CatalogEntry,
    EquationTemplate,
    Params,
    ReferenceTerms,
    TemplateTerm,
    t_poly,
)
from core.series.engine import Series, exp_series, reciprocal
from core.services.egf_compiler import U_VAR, EgfEquation, ExpMonomial

ONE_PLUS_T = t_poly(ONE, ONE)
T = t_poly(ZERO, ONE)
X_DEFAULTS = ({"x": 1}, {"x": 2}, {"x": "-1/2"})


def _u(*coeffs) -> Poly:
    return Poly(coeffs, U_VAR)


def _exp_minus_one(order: int) -> Series:
    return Series.exp_linear(ONE, order) - 1


class FubiniEntry(CatalogEntry):
    title = "Fubini polynomials F_n(x)"
    provenance = "first-order table, Fubini row: EGF 1/(1 - x(e^t - 1)), R = x(1+t)/(x+1), S = 1/(x+1)"
    default_params = X_DEFAULTS
    references = (ReferenceTerms({"x": 1}, ("1", "1", "3", "13", "75", "541"), "ordered Bell numbers"),)

    @property
    def name(self) -> str:
        return "fubini"

    def egf(self, p: Params, order: int) -> Series:
        return reciprocal(1 - _exp_minus_one(order) * p.x)

    def template(self, p: Params) -> EquationTemplate:
        den = t_poly(p.x + 1)
        return EquationTemplate.first_order(TemplateTerm(ONE_PLUS_T * p.x, den), TemplateTerm(t_poly(ONE), den))

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(p.x + 1, -p.x),), (ExpMonomial(0, ZERO, ONE),))


class BellTouchardEntry(CatalogEntry):
    title = "Bell-Touchard polynomials phi_n(x)"
    provenance = "first-order table, Bell-Touchard row: EGF exp(x(e^t - 1)), R = x t, S = 1"
    default_params = X_DEFAULTS
    references = (
        ReferenceTerms({"x": 1}, ("1", "1", "2", "5", "15", "52", "203"), "Bell numbers"),
        ReferenceTerms({"x": -1}, ("1", "-1", "0", "1", "1", "-2", "-9", "-9", "50"), "Uppuluri-Carpenter numbers"),
        ReferenceTerms({"x": 2}, ("1", "2", "6", "22", "94", "454"), "bicolored set partitions"),
    )

    @property
    def name(self) -> str:
        return "bell-touchard"

    def egf(self, p: Params, order: int) -> Series:
        return exp_series(_exp_minus_one(order) * p.x)

    def template(self, p: Params) -> EquationTemplate:
        return EquationTemplate.first_order(TemplateTerm(T * p.x), TemplateTerm(t_poly(ONE)))

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(0, -p.x), _u(1)), init=(ONE,))


class MahlerEntry(CatalogEntry):
    title = "Mahler polynomials s_n(x)"
    provenance = (
        "first-order table, Mahler row: EGF exp(x(1 + t - e^t)), "
        "R = x(1+t)t/(xt - t - 1), S = (1+t)/(1+t-xt)"
    )
    default_params = X_DEFAULTS
    references = (
        ReferenceTerms(
            {"x": -1},
            ("1", "0", "1", "1", "4", "11", "41", "162", "715"),
            "set partitions without singletons",
        ),
    )

    @property
    def name(self) -> str:
        return "mahler"

    def egf(self, p: Params, order: int) -> Series:
        return exp_series((Series((ONE, ONE), order) - Series.exp_linear(ONE, order)) * p.x)

    def template(self, p: Params) -> EquationTemplate:
        R = TemplateTerm(ONE_PLUS_T * T * p.x, t_poly(-ONE, p.x - 1))
        S = TemplateTerm(ONE_PLUS_T, t_poly(ONE, ONE - p.x))
        return EquationTemplate.first_order(R, S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(-p.x, p.x), _u(1)), init=(ONE,))


class ToscanoEntry(CatalogEntry):
    title = "Toscano's actuarial polynomials a_n^(gamma)(x)"
    provenance = (
        "first-order table, Toscano row: EGF exp(-x e^t + gamma t + x), "
        "R = x(1+t)t/(gamma t - t - 1), S = (1+t)/(1+t-gamma t)"
    )
    needs_gamma = True
    default_params = (
        {"x": 1, "gamma": 2},
        {"x": 2, "gamma": "1/2"},
        {"x": -1, "gamma": 2},
    )
    references = (
        ReferenceTerms({"x": -1, "gamma": 0}, ("1", "1", "2", "5", "15", "52", "203"), "gamma = 0, x = -1 is Bell"),
    )

    @property
    def name(self) -> str:
        return "toscano"

    def egf(self, p: Params, order: int) -> Series:
        exponent = Series((ZERO, p.gamma), order) + (1 - Series.exp_linear(ONE, order)) * p.x
        return exp_series(exponent)

    def template(self, p: Params) -> EquationTemplate:
        R = TemplateTerm(ONE_PLUS_T * T * p.x, t_poly(-ONE, p.gamma - 1))
        S = TemplateTerm(ONE_PLUS_T, t_poly(ONE, ONE - p.gamma))
        return EquationTemplate.first_order(R, S)

    def egf_equation(self, p: Params) -> EgfEquation:
        return EgfEquation(ONE, (_u(-p.gamma, p.x), _u(1)), init=(ONE,))
