import mpmath
import numpy as np
import pytest

from core.errors import PreconditionError
from core.services.numeric_verify import (
    asymptotic_table,
    check_asymptotic,
    check_closed_form,
    check_telescoping,
    even_bernoulli_numbers,
    trigamma,
)

TOL = 1e-10


@pytest.mark.parametrize("z", [0.25, 1.0, 2.5, 7.0, 19.5, 42.0])
def test_trigamma_matches_mpmath(z):
    want = float(mpmath.psi(1, z))
    assert trigamma(z) == pytest.approx(want, rel=1e-12)


def test_trigamma_on_arrays():
    zs = np.array([[0.5, 1.0], [3.0, 30.0]])
    got = trigamma(zs)
    assert got.shape == zs.shape
    assert got[0, 1] == pytest.approx(np.pi**2 / 6, rel=1e-12)


def test_trigamma_rejects_poles():
    with pytest.raises(PreconditionError):
        trigamma(0.0)
    with pytest.raises(PreconditionError):
        trigamma([1.0, -2.0])


def test_even_bernoulli_numbers():
    assert even_bernoulli_numbers()[:3] == pytest.approx((1 / 6, -1 / 30, 1 / 42))


@pytest.mark.parametrize("x", [0.0, 2.0, -0.5])
def test_closed_form_solves_the_bernoulli_equation(x):
    report = check_closed_form(x, [0.05, 0.1, 0.3, 0.5, 0.9])
    assert report.samples
    assert report.max_residual < TOL


def test_closed_form_negative_control():
    report = check_closed_form(0.0, [0.1, 0.5], s_sign=-1.0)
    assert report.max_residual > 1e-3


def test_closed_form_skips_nonpositive_arguments():
    report = check_closed_form(3.0, [0.1, 0.6])
    assert report.samples == (0.1,)
    assert report.skipped == (0.6,)


def test_telescoping():
    report = check_telescoping(0.5, 0.2, 10)
    assert report.residual < TOL
    assert check_telescoping(0.5, 0.2, 0).residual == 0.0
    with pytest.raises(PreconditionError):
        check_telescoping(0.5, 0.2, -1)
    with pytest.raises(PreconditionError):
        check_telescoping(3.0, 1.0, 4)


def test_asymptotic_error_scales_with_the_order():
    row = check_asymptotic(3)
    assert row.passed
    assert row.expected_ratios == (2.0**9,)


def test_asymptotic_table_rows_pass_or_hit_precision():
    for row in asymptotic_table(5):
        assert row.passed or row.precision_limited


def test_asymptotic_samples_must_be_large():
    with pytest.raises(PreconditionError):
        check_asymptotic(1, (5.0, 10.0))
