import random
from math import factorial

import pytest

from core.arith.gauss import I, ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.config import settings
from core.errors import PreconditionError, TruncationMismatchError
from core.series.engine import (
    Series,
    SeriesPair,
    borel,
    compose,
    divided_difference,
    exp_series,
    inverse_borel,
    log_series,
    phi_tau,
    reciprocal,
    tau_inverse_substitute,
    tau_power_substitute,
    tau_substitute,
)
from core.services.instances import random_nonzero_gauss, random_split_ratfun
from core.tau.calculus import MoebiusShift, tau_apply

N = 16


def test_exp_linear_and_reciprocal():
    assert Series.exp_linear(ONE, N) * Series.exp_linear(-ONE, N) == Series.one(N)
    geometric = Series([ONE] * N, N)
    assert reciprocal(geometric) == Series((ONE, -ONE), N)


def test_exp_and_log_are_inverse():
    f = Series((ZERO, ONE, GaussRat(2), I), N)
    assert log_series(exp_series(f)) == f
    assert exp_series(Series.exp_linear(ONE, N) - 1).coeffs[:7] == tuple(
        GaussRat(b) / factorial(n)
        for n, b in enumerate((1, 1, 2, 5, 15, 52, 203))
    )


def test_compose_requires_zero_constant_term():
    with pytest.raises(PreconditionError):
        compose(Series.one(N), Series.one(N))
    with pytest.raises(PreconditionError):
        exp_series(Series.one(N))


def test_truncation_orders_must_agree():
    with pytest.raises(TruncationMismatchError):
        Series.one(4) + Series.one(5)


def test_symbolic_coefficients_specialize():
    x = Poly.gen("x")
    s = Series.exp_linear(x, 6)
    assert s.is_symbolic()
    assert s.specialize(2) == Series.exp_linear(GaussRat(2), 6)


def test_borel_pair_is_consistent():
    egf = Series.exp_linear(GaussRat(3), N)
    pair = SeriesPair.from_egf(egf)
    assert pair.is_consistent()
    assert pair.ogf.coeffs[:4] == (ONE, GaussRat(3), GaussRat(9), GaussRat(27))
    assert borel(inverse_borel(egf)) == egf


def test_phi_tau_is_multiplication_by_exponential_on_the_borel_side():
    rng = random.Random(settings.PROPERTY_SEED)
    for rate in (ONE, I, GaussRat(-2)):
        f = Series([random_nonzero_gauss(rng) for _ in range(N)], N)
        assert borel(phi_tau(f, rate)) == borel(f) * Series.exp_linear(rate, N)


def test_tau_substitute_matches_rational_tau():
    rng = random.Random(settings.PROPERTY_SEED + 10)
    for beta in (ONE, I, GaussRat(2, -1)):
        shift = MoebiusShift(beta)
        for _ in range(5):
            f = random_split_ratfun(rng, 3, 2)
            lhs = tau_substitute(Series.from_ratfun(f, N), beta)
            assert lhs == Series.from_ratfun(tau_apply(f, shift), N)


def test_tau_powers_compose():
    f = Series.exp_linear(ONE, N)
    beta = GaussRat(1, 1)
    assert tau_inverse_substitute(tau_substitute(f, beta), beta) == f
    assert tau_power_substitute(f, beta, 2) == tau_substitute(tau_substitute(f, beta), beta)
    assert tau_power_substitute(f, beta, 0) == f
    with pytest.raises(PreconditionError):
        tau_substitute(f, 0)


def test_divided_difference_drops_leading_terms():
    f = Series((GaussRat(5), GaussRat(7), GaussRat(11)), 3)
    assert divided_difference(f, 1) == Series((GaussRat(7), GaussRat(11)), 2)
    with pytest.raises(PreconditionError):
        divided_difference(f, 3)


def test_from_ratfun_refuses_a_pole_at_zero():
    with pytest.raises(PreconditionError):
        Series.from_ratfun(RatFun.from_lists([1], [0, 1]), N)
