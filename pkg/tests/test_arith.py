from fractions import Fraction

import pytest

from core.arith.gauss import I, ONE, ZERO, GaussRat
from core.arith.linalg import LinSystem, linsolve
from core.arith.partial_fractions import partial_fractions, reassemble
from core.arith.poly import Poly, poly_from_roots
from core.arith.ratfun import RatFun
from core.arith.roots import gaussian_roots
from core.errors import DimensionMismatchError, DivisionByZeroError, NonSplitDenominatorError, TaucertError


def _t(*coeffs):
    return Poly.from_values(coeffs)


def test_parse_and_render_gaussian_rationals():
    assert GaussRat.parse("3/4") == GaussRat(Fraction(3, 4))
    assert GaussRat.parse("1-2i") == GaussRat(1, -2)
    assert GaussRat.parse("-3/4i") == GaussRat(0, Fraction(-3, 4))
    assert GaussRat.parse("i") == I
    assert str(GaussRat(0, -1)) == "-i"
    assert str(GaussRat(Fraction(-3, 4), 2)) == "-3/4+2i"
    assert GaussRat(Fraction(1, 2), 3).to_pair() == ["1/2", "3"]


def test_parse_rejects_garbage():
    with pytest.raises(TaucertError):
        GaussRat.parse("1/2 + x")
    with pytest.raises(TaucertError):
        GaussRat.parse("")


def test_field_operations():
    z = GaussRat(Fraction(2, 3), -5)
    assert z * z.inverse() == ONE
    assert (z - z) == ZERO
    assert I * I == GaussRat(-1)
    assert z.conjugate().conjugate() == z
    with pytest.raises(DivisionByZeroError):
        ZERO.inverse()


def test_poly_division_and_gcd():
    a = poly_from_roots([ONE, GaussRat(2), I])
    b = poly_from_roots([ONE, -I])
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.degree() < b.degree()
    assert a.gcd(b) == poly_from_roots([ONE])


def test_taylor_shift_and_compose():
    p = _t(1, 2, 3)
    assert p.taylor_shift(1) == _t(6, 8, 3)
    assert p.compose(_t(0, 2)) == _t(1, 4, 12)


def test_resultant_detects_common_roots():
    a = poly_from_roots([GaussRat(3)])
    assert not a.resultant(poly_from_roots([GaussRat(3), I]))
    assert a.resultant(poly_from_roots([GaussRat(2)])) == ONE
    assert _t(2).resultant(a) == GaussRat(2)


def test_sympy_conversion_keeps_coefficients():
    p = _t(GaussRat(Fraction(1, 3), -2), 0, I, GaussRat(Fraction(-7, 5)))
    back = Poly.from_sympy(p.to_sympy(), "t")
    assert back == p
    assert Poly.from_sympy(Poly((), "s").to_sympy()).is_zero()


def test_ratfun_normal_form():
    f = RatFun.from_lists([0, 2], [0, 4])
    assert f == RatFun.const(GaussRat(Fraction(1, 2)))
    g = RatFun.from_lists([1], [2, 2])
    assert g.den.lc() == 1
    assert g * (1 + RatFun.gen()) == RatFun.const(GaussRat(Fraction(1, 2)))


def test_ratfun_laurent_expansion():
    geometric = RatFun.from_lists([1], [1, -1])
    assert geometric.laurent_window(0, 5) == [ONE] * 5
    pole = RatFun.from_lists([1], [0, 1, 1])
    assert pole.valuation() == -1
    assert pole.laurent_window(-1, 2) == [ONE, GaussRat(-1), ONE]


def test_gaussian_roots_with_multiplicity():
    p = poly_from_roots([I, -I, GaussRat(Fraction(1, 2)), GaussRat(Fraction(1, 2))])
    assert gaussian_roots(p) == [(-I, 1), (I, 1), (GaussRat(Fraction(1, 2)), 2)]


def test_gaussian_roots_of_split_polynomials_with_large_coefficients():
    roots = [
        GaussRat(Fraction(1234567, 89), 1000003),
        GaussRat(Fraction(-998244353, 7), Fraction(1, 3)),
        GaussRat(104729),
    ]
    found = gaussian_roots(poly_from_roots(roots) * GaussRat(Fraction(5, 7), 3))
    assert found == [(r, 1) for r in sorted(roots, key=lambda z: (z.re, z.im))]


def test_gaussian_roots_rejects_irreducible_quadratic():
    with pytest.raises(NonSplitDenominatorError):
        gaussian_roots(_t(-2, 0, 1))


def test_partial_fractions_reassemble():
    f = RatFun(_t(3, 0, 1, 5), poly_from_roots([ONE, ONE, I, GaussRat(-2)]))
    pf = partial_fractions(f)
    assert set(pf.poles()) == {ONE, I, GaussRat(-2)}
    assert reassemble(pf) == f


def test_linsolve_particular_and_kernel():
    system = LinSystem.build([[1, 1, 0], [0, 1, 1]], [2, 3])
    solution = linsolve(system)
    x = solution.particular
    assert x[0] + x[1] == 2 and x[1] + x[2] == 3
    assert len(solution.kernel) == 1
    k = solution.kernel[0]
    assert k[0] + k[1] == 0 and k[1] + k[2] == 0


def test_linsolve_inconsistent_and_shape_errors():
    assert linsolve(LinSystem.build([[1, 1], [1, 1]], [0, 1])) is None
    with pytest.raises(DimensionMismatchError):
        LinSystem.build([[1, 2], [3]], [0, 0])
