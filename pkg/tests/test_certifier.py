import hashlib
import json
import random

import pytest

from core.arith.gauss import I, ONE, ZERO, GaussRat
from core.arith.ratfun import RatFun
from core.catalog.registry import CatalogRegistry
from core.config import settings
from core.errors import ComparisonOrderError, PreconditionError
from core.schemas.enums import EvidenceKind, Verdict
from core.series.engine import Series
from core.services.certifier import (
    FirstOrderProblem,
    certify,
    certify_equation,
    homogeneous_criterion,
    recheck,
    series_prefix_hash,
    solve_series,
    unsupported_shift,
)
from core.services.instances import planted_first_order, planted_pole_chain
from core.tau.calculus import MoebiusShift, tau_apply
from core.tau.equation import TauEquation

UNIT = MoebiusShift(ONE)
ORDER = 64


def _entry_problem(name, params, order=ORDER):
    entry = CatalogRegistry.get_entry(name)
    return entry.equation(params), entry.build_ogf(params, order)


def test_bell_is_strongly_transcendental():
    eq, w = _entry_problem("bell-touchard", {"x": 1})
    cert = certify_equation(eq, w, ORDER)
    assert cert.verdict is Verdict.STRONGLY_D_TRANSCENDENTAL
    assert cert.evidence.kind is EvidenceKind.NO_RATIONAL_SOLUTION
    assert cert.series_prefix[:7] == tuple(GaussRat(v) for v in (1, 1, 2, 5, 15, 52, 203))
    assert cert.series_prefix_hash == series_prefix_hash(cert.series_prefix)


@pytest.mark.parametrize(
    "name,params",
    [
        ("bell-touchard", {"x": -1}),
        ("mahler", {"x": -1}),
        ("fubini", {"x": 1}),
        ("tangent", {}),
        ("springer", {}),
    ],
)
def test_catalog_members_are_strongly_transcendental(name, params):
    eq, w = _entry_problem(name, params)
    assert certify_equation(eq, w, ORDER).verdict is Verdict.STRONGLY_D_TRANSCENDENTAL


def test_planted_problems_are_rational_and_recheck():
    rng = random.Random(settings.PROPERTY_SEED + 40)
    for _ in range(4):
        a, f, g = planted_first_order(rng, UNIT, degree=2)
        problem = FirstOrderProblem(UNIT, a, f, Series.from_ratfun(g, ORDER), ORDER)
        cert = certify(problem)
        assert cert.verdict is Verdict.RATIONAL
        assert cert.evidence.kind is EvidenceKind.WITNESS_MATCH
        assert cert.witness == g
        assert recheck(cert, problem)


def test_rational_series_with_a_chained_homogeneous_part():
    t = RatFun.gen()
    a = 1 / (1 + 2 * t)
    g = t * t / (1 + t) + 1
    f = tau_apply(g, UNIT) - a * g
    problem = FirstOrderProblem(UNIT, a, f, Series.from_ratfun(g, ORDER), ORDER)
    cert = certify(problem)
    assert cert.verdict is Verdict.RATIONAL
    assert cert.evidence.kind is EvidenceKind.WITNESS_MATCH
    assert cert.evidence.homogeneous_dimension == 1
    assert cert.witness == g
    assert recheck(cert, problem)


def test_pole_chain_problems_are_rational():
    rng = random.Random(settings.PROPERTY_SEED + 42)
    for _ in range(3):
        a, f, g = planted_pole_chain(rng, UNIT)
        problem = FirstOrderProblem(UNIT, a, f, Series.from_ratfun(g, ORDER), ORDER)
        cert = certify(problem)
        assert cert.verdict is Verdict.RATIONAL
        assert cert.witness == g


def test_rational_solutions_that_miss_the_series_are_reported():
    # tau(y) = y has only constant rational solutions
    problem = FirstOrderProblem(UNIT, RatFun.const(ONE), RatFun.const(ZERO), Series((ONE, ONE), ORDER), ORDER)
    cert = certify(problem)
    assert cert.verdict is Verdict.STRONGLY_D_TRANSCENDENTAL
    assert cert.evidence.kind is EvidenceKind.SERIES_MISMATCH
    assert cert.evidence.homogeneous_dimension == 1


def test_zero_series_is_rational():
    problem = FirstOrderProblem(UNIT, RatFun.gen(), RatFun.const(ZERO), Series.zero(16), 16)
    cert = certify(problem)
    assert cert.verdict is Verdict.RATIONAL
    assert cert.witness == 0


def test_higher_order_equations_are_unsupported():
    eq, w = _entry_problem("graph-a060311", {}, 16)
    cert = certify_equation(eq, w, 16)
    assert cert.verdict is Verdict.UNSUPPORTED
    assert cert.evidence.kind is EvidenceKind.UNSUPPORTED_INPUT


def test_non_parabolic_shift_is_unsupported():
    eq, w = _entry_problem("bell-touchard", {"x": 1}, 16)
    cert = unsupported_shift(eq, w, GaussRat(2), 16)
    assert cert.verdict is Verdict.UNSUPPORTED


def test_comparison_order_longer_than_the_series():
    with pytest.raises(ComparisonOrderError):
        FirstOrderProblem(UNIT, RatFun.gen(), RatFun.const(ONE), Series.one(8), 16)


def test_guard_band_is_enforced():
    rng = random.Random(settings.PROPERTY_SEED + 41)
    a, f, g = planted_first_order(rng, UNIT, degree=3)
    short = settings.CERTIFY_GUARD_BAND
    with pytest.raises(ComparisonOrderError):
        certify(FirstOrderProblem(UNIT, a, f, Series.from_ratfun(g, short), short))


def test_zero_coefficient_is_rejected():
    with pytest.raises(PreconditionError):
        FirstOrderProblem(UNIT, RatFun.const(ZERO), RatFun.gen(), Series.one(4), 4)


def test_solve_series_reproduces_catalog_prefixes():
    for name, params in (("bell-touchard", {"x": 2}), ("alternating", {}), ("bernoulli", {"x": "1/2"})):
        entry = CatalogRegistry.get_entry(name)
        assert solve_series(entry.equation(params), 20) == entry.build_ogf(params, 20)


def test_solve_series_of_tau_y_equals_t_y_plus_one():
    eq = TauEquation.first_order_form(UNIT, RatFun.gen(), RatFun.const(ONE))
    assert solve_series(eq, 7).coeffs == tuple(GaussRat(v) for v in (1, 1, 2, 5, 15, 52, 203))


def test_prefix_hash_is_sha256_of_the_string_list():
    prefix = (ONE, GaussRat(1, -1), ZERO)
    payload = json.dumps(["1", "1-i", "0"], separators=(",", ":"))
    assert series_prefix_hash(prefix) == hashlib.sha256(payload.encode("utf-8")).hexdigest()


def test_homogeneous_criterion_for_a_linear_factor():
    t = RatFun.gen()
    witness = homogeneous_criterion(1 + t, UNIT)
    assert witness is not None and witness.n == 0
    assert tau_apply(witness.g, UNIT) - witness.g == (t * t) / (1 + t)


def test_homogeneous_criterion_without_witness():
    # d(t)/t = t is not summable and no combination of its derivatives is
    assert homogeneous_criterion(RatFun.gen(), MoebiusShift(I), 3) is None
