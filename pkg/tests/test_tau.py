import random
from fractions import Fraction

import pytest

from core.arith.gauss import I, ONE, ZERO, GaussRat
from core.arith.ratfun import RatFun
from core.catalog.registry import CatalogRegistry
from core.config import settings
from core.errors import PreconditionError
from core.series.engine import Series
from core.services.instances import random_nonzero_gauss, random_split_ratfun
from core.tau.calculus import (
    MoebiusShift,
    fixed_points,
    frame_derivation,
    from_shift_frame,
    orbit_representative,
    partial_d,
    pole_to_frame,
    same_orbit,
    sigma,
    tau_apply,
    tau_inverse,
    tau_power,
    to_shift_frame,
)
from core.tau.equation import TauEquation

UNIT = MoebiusShift(ONE)
SHIFTS = (UNIT, MoebiusShift(I), MoebiusShift(GaussRat(-2, 1)))


def test_tau_on_the_generator():
    t = RatFun.gen()
    assert tau_apply(t, UNIT) == RatFun.from_lists([0, 1], [1, 1])
    assert tau_inverse(tau_apply(t, UNIT), UNIT) == t
    assert tau_power(t, UNIT, 3) == RatFun.from_lists([0, 1], [1, 3])


def test_shift_needs_nonzero_beta():
    with pytest.raises(PreconditionError):
        MoebiusShift(ZERO)


def test_only_fixed_point_is_zero():
    for shift in SHIFTS:
        assert fixed_points(shift) == [ZERO]


def test_tau_is_a_ring_morphism_commuting_with_d():
    rng = random.Random(settings.PROPERTY_SEED + 20)
    for shift in SHIFTS:
        for _ in range(5):
            f, g = random_split_ratfun(rng, 3, 2), random_split_ratfun(rng, 3, 2)
            assert tau_apply(f * g, shift) == tau_apply(f, shift) * tau_apply(g, shift)
            assert tau_apply(f + g, shift) == tau_apply(f, shift) + tau_apply(g, shift)
            assert tau_apply(partial_d(f), shift) == partial_d(tau_apply(f, shift))


def test_partial_d_is_t_squared_derivative():
    t = RatFun.gen()
    assert partial_d(t) == t * t
    assert partial_d(t, 2) == t * t * t * 2
    assert partial_d(RatFun.const(GaussRat(5))).is_zero()


def test_shift_frame_conjugates_tau_and_d():
    rng = random.Random(settings.PROPERTY_SEED + 21)
    for shift in SHIFTS:
        f = random_split_ratfun(rng, 3, 2)
        F = to_shift_frame(f, shift)
        assert from_shift_frame(F, shift) == f
        assert to_shift_frame(tau_apply(f, shift), shift) == sigma(F)
        assert to_shift_frame(partial_d(f), shift) == frame_derivation(F, shift)


def test_orbit_bookkeeping():
    shift = MoebiusShift(GaussRat(2))
    p = GaussRat(3, 1)
    q = p / (1 + shift.beta * p * 4)
    assert same_orbit(p, q, shift) == 4
    assert same_orbit(q, p, shift) == -4
    assert same_orbit(p, GaussRat(7), shift) is None
    with pytest.raises(PreconditionError):
        pole_to_frame(ZERO, shift)
    rep, k = orbit_representative(GaussRat(Fraction(7, 2), 2))
    assert rep == GaussRat(Fraction(1, 2), 2) and k == 3


def test_first_order_equation_round_trip():
    t = RatFun.gen()
    eq = TauEquation.first_order_form(UNIT, t + 1, t * t)
    a, f = eq.first_order()
    assert a == t + 1 and f == t * t
    assert eq.order == 1


def test_canonical_form_clears_denominators():
    t = RatFun.gen()
    eq = TauEquation(UNIT, (t / (1 + t), RatFun.const(GaussRat(2))), 1 / (1 + t))
    canon = eq.canonical()
    assert all(c.is_polynomial() for c in canon.coeffs)
    assert canon.coeffs[-1].num.lc() == 1
    assert canon.coeffs[0] == t / 2
    assert canon.rhs == RatFun.const(Fraction(1, 2))


def test_trimmed_moves_down_leading_zero_coefficients():
    t = RatFun.gen()
    zero = RatFun.const(ZERO)
    eq = TauEquation(UNIT, (zero, -t, RatFun.const(ONE)), RatFun.const(ONE))
    trimmed = eq.trimmed()
    assert trimmed.order == 1
    assert trimmed.coeffs[0] == -tau_inverse(t, UNIT)


def test_zero_equation_is_rejected():
    with pytest.raises(PreconditionError):
        TauEquation(UNIT, (RatFun.const(ZERO),), RatFun.const(ONE))


def test_residual_of_the_bell_equation_vanishes():
    bell = CatalogRegistry.get_entry("bell-touchard")
    eq = TauEquation.first_order_form(UNIT, RatFun.gen(), RatFun.const(ONE))
    assert eq.first_residual_order(bell.build_ogf({"x": 1}, 24)) is None
    assert eq.first_residual_order(Series.exp_linear(ONE, 24)) is not None


def test_rescale_to_unit():
    rng = random.Random(settings.PROPERTY_SEED + 22)
    beta = random_nonzero_gauss(rng)
    shift = MoebiusShift(beta)
    t = RatFun.gen()
    eq = TauEquation.first_order_form(shift, t, RatFun.const(ONE))
    unit = eq.rescale_to_unit()
    assert unit.shift == UNIT
    assert unit.coeffs[0] == -(t / beta)
