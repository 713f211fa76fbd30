import pytest

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.catalog.registry import CatalogRegistry
from core.errors import MissingInitialTermsError, PreconditionError, TaucertError
from core.schemas.enums import ErrorCode, ResidualStatus
from core.series.engine import inverse_borel
from core.services.egf_compiler import (
    U_VAR,
    EgfEquation,
    ExpMonomial,
    compile_equation,
    solve_egf_series,
    verify_compiled,
)
from core.tau.calculus import MoebiusShift
from core.tau.equation import TauEquation

UNIT = MoebiusShift(ONE)


def _u(*coeffs):
    return Poly.from_values(coeffs, U_VAR)


def _bell_egf(init=(ONE,)):
    # yhat' = e^t yhat
    return EgfEquation(ONE, (_u(0, -1), _u(1)), init=init)


def test_bell_compiles_to_tau_b_equals_t_b_plus_one():
    t = RatFun.gen()
    eq = compile_equation(_bell_egf())
    assert eq == TauEquation.first_order_form(UNIT, t, RatFun.const(ONE)).canonical()
    assert eq.coeffs == (-t, RatFun.const(ONE))
    assert eq.rhs == RatFun.const(ONE)


def test_graph_compiles_to_the_order_two_equation():
    t = RatFun.gen()
    graph = CatalogRegistry.get_entry("graph-a060311")
    eq = compile_equation(graph.compiler_input({}))
    assert eq.order == 2
    want = TauEquation(UNIT, (-t, t / (t + 1), RatFun.const(ONE)), RatFun.const(ONE)).canonical()
    assert eq == want


def test_bernoulli_compiles_to_the_stored_equation():
    bernoulli = CatalogRegistry.get_entry("bernoulli")
    for x in (2, "1/3", "i"):
        eq = compile_equation(bernoulli.compiler_input({"x": x}))
        assert eq == bernoulli.equation({"x": x}).canonical()


def test_missing_initial_terms():
    with pytest.raises(MissingInitialTermsError):
        compile_equation(_bell_egf(init=()))


def test_symbolic_parameter_must_be_specialized():
    bell = CatalogRegistry.get_entry("bell-touchard")
    symbolic = bell.compiler_input({"x": "symbolic"})
    assert symbolic.is_symbolic()
    with pytest.raises(TaucertError) as exc:
        compile_equation(symbolic)
    assert exc.value.code is ErrorCode.INVALID_INPUT
    assert compile_equation(symbolic.specialize(2)) == compile_equation(bell.compiler_input({"x": 2}))


def test_zero_equation_and_zero_rate_are_rejected():
    with pytest.raises(PreconditionError):
        EgfEquation(ONE, (_u(),))
    with pytest.raises(PreconditionError):
        EgfEquation(ZERO, (_u(1),))


def test_exp_monomial_ogf():
    mono = ExpMonomial(2, GaussRat(3), GaussRat(5))
    expected = RatFun(Poly.monomial(GaussRat(10), 2), Poly.from_values((1, -3)) ** 3)
    assert mono.ogf() == expected


def test_series_solution_matches_the_catalog():
    bell = CatalogRegistry.get_entry("bell-touchard")
    y = inverse_borel(solve_egf_series(_bell_egf(), 20))
    assert y == bell.build_ogf({"x": 1}, 20)


@pytest.mark.parametrize("name", [entry.name for entry in CatalogRegistry.list_entries()])
def test_every_entry_compiles_exactly(name):
    entry = CatalogRegistry.get_entry(name)
    params = dict(entry.default_params[0]) if entry.default_params else {}
    egf = entry.compiler_input(params)
    compiled = compile_equation(egf)
    assert compiled == entry.equation(params).canonical()
    report = verify_compiled(egf, compiled, 32)
    assert report.status is ResidualStatus.EXACT


def test_rate_rescaling_is_consistent():
    tangent = CatalogRegistry.get_entry("tangent")
    egf = tangent.compiler_input({})
    direct = compile_equation(egf).rescale_to_unit().canonical()
    assert compile_equation(egf.rescaled_to_unit_rate()) == direct


def test_verify_reports_a_wrong_equation():
    t = RatFun.gen()
    wrong = TauEquation.first_order_form(UNIT, t + 1, RatFun.const(ONE))
    report = verify_compiled(_bell_egf(), wrong, 16)
    assert report.status is ResidualStatus.MISMATCH
    assert report.first_failing_order is not None
