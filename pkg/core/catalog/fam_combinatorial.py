"""
Parameter-free combinatorial sequences: tangent numbers, alternating
permutations, Springer numbers (shifts with imaginary beta) and the graph
sequence exp((e^t - 1)^2/2), whose OGF satisfies an order-2 equation.

Odd and even EGFs keep their interleaved zeros so the equations apply to the
full OGF.
"""

from core.arith.gauss import I, ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.catalog.base import (
    T_ONE,
    CatalogEntry,
    EquationTemplate,
    Params,
    ReferenceTerms,
    TemplateTerm,
    t_poly,
)
from core.series.engine import Series, exp_series, reciprocal
from core.services.egf_compiler import U_VAR, EgfEquation, ExpMonomial

HALF = GaussRat(1) / 2


def _u(*coeffs) -> Poly:
    return Poly(coeffs, U_VAR)


def cos_series(order: int) -> Series:
    return (Series.exp_linear(I, order) + Series.exp_linear(-I, order)) * HALF


def sin_series(order: int) -> Series:
    return (Series.exp_linear(I, order) - Series.exp_linear(-I, order)) * (-I * HALF)


class TangentEntry(CatalogEntry):
    title = "Tangent numbers"
    provenance = "tan(t) = sin/cos; equation F(t/(1+2it)) + (1+2it) F(t) = 2t"
    beta = GaussRat(0, 2)
    needs_x = False
    references = (
        ReferenceTerms(
            {},
            ("0", "1", "0", "2", "0", "16", "0", "272", "0", "7936", "0", "353792"),
            "tangent numbers at odd positions",
        ),
    )

    @property
    def name(self) -> str:
        return "tangent"

    def egf(self, p: Params, order: int) -> Series:
        return sin_series(order) * reciprocal(cos_series(order))

    def template(self, p: Params) -> EquationTemplate:
        coeffs = (TemplateTerm(t_poly(ONE, 2 * I)), TemplateTerm(T_ONE))
        return EquationTemplate(coeffs, TemplateTerm(t_poly(ZERO, 2)))

    def egf_equation(self, p: Params) -> EgfEquation:
        # (1 + e^(2it)) tan t = -i e^(2it) + i
        return EgfEquation(self.beta, (_u(1, 1),), (ExpMonomial(0, self.beta, -I), ExpMonomial(0, ZERO, I)))


class AlternatingEntry(CatalogEntry):
    title = "Alternating permutations (Euler zigzag numbers)"
    provenance = "sec(t) + tan(t); equation A(t/(1+it)) = (t - i) A + 1 + i + it"
    beta = I
    needs_x = False
    references = (ReferenceTerms({}, ("1", "1", "1", "2", "5", "16", "61", "272"), "zigzag numbers"),)

    @property
    def name(self) -> str:
        return "alternating"

    def egf(self, p: Params, order: int) -> Series:
        return (sin_series(order) + 1) * reciprocal(cos_series(order))

    def template(self, p: Params) -> EquationTemplate:
        return EquationTemplate.first_order(TemplateTerm(t_poly(-I, ONE)), TemplateTerm(t_poly(ONE + I, I)))

    def egf_equation(self, p: Params) -> EgfEquation:
        # (1 + i e^(it)) A = e^(it) + i
        return EgfEquation(I, (_u(1, I),), (ExpMonomial(0, I, ONE), ExpMonomial(0, ZERO, I)))


class SpringerEntry(CatalogEntry):
    title = "Springer numbers"
    provenance = "1/(cos t - sin t); equation S(t/(1+2it)) = (2t - i) S + (1+i)(2t - i)/(t - i)"
    beta = GaussRat(0, 2)
    needs_x = False
    references = (ReferenceTerms({}, ("1", "1", "3", "11", "57", "361", "2763"), "Springer numbers"),)

    @property
    def name(self) -> str:
        return "springer"

    def egf(self, p: Params, order: int) -> Series:
        return reciprocal(cos_series(order) - sin_series(order))

    def template(self, p: Params) -> EquationTemplate:
        slope = t_poly(-I, 2)
        S = TemplateTerm(slope * (ONE + I), t_poly(-I, ONE))
        return EquationTemplate.first_order(TemplateTerm(slope), S)

    def egf_equation(self, p: Params) -> EgfEquation:
        # ((1+i) + (i-1) e^(2it)) S = 2i e^(it)
        return EgfEquation(self.beta, (_u(ONE + I, I - 1),), (ExpMonomial(0, I, 2 * I),))


class GraphEntry(CatalogEntry):
    title = "Graphs counted by exp((e^t - 1)^2 / 2)"
    provenance = "order-2 example: tau^2 f + (t/(t+1)) tau f - t f = 1, prefix 1 + t^2 + 3t^3 + 10t^4 + 45t^5"
    needs_x = False
    references = (ReferenceTerms({}, ("1", "0", "1", "3", "10", "45"), "A060311"),)

    @property
    def name(self) -> str:
        return "graph-a060311"

    def egf(self, p: Params, order: int) -> Series:
        em1 = Series.exp_linear(ONE, order) - 1
        return exp_series(em1 * em1 * HALF)

    def template(self, p: Params) -> EquationTemplate:
        coeffs = (
            TemplateTerm(t_poly(ZERO, -ONE)),
            TemplateTerm(t_poly(ZERO, ONE), t_poly(ONE, ONE)),
            TemplateTerm(T_ONE),
        )
        return EquationTemplate(coeffs, TemplateTerm(T_ONE))

    def egf_equation(self, p: Params) -> EgfEquation:
        # yhat' = (e^(2t) - e^t) yhat
        return EgfEquation(ONE, (_u(0, 1, -1), _u(1)), init=(ONE,))
