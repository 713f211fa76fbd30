"""
Reduced rational functions over Q(i).

Normal form: gcd(num, den) = 1 and den monic, so structural equality is
equality of functions.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Sequence

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly, power_series_quotient
from core.errors import DivisionByZeroError

_SCALARS = (GaussRat, int, Fraction)


def ratfun_normalize(num: Poly, den: Poly) -> "RatFun":
    if den.is_zero():
        raise DivisionByZeroError("division by zero")
    var = den.var
    num = num.with_var(var)
    if num.is_zero():
        return RatFun._raw(Poly((), var), Poly((ONE,), var))
    if den.degree() > 0:
        g = num.gcd(den)
        if g.degree() > 0:
            num = num.exact_div(g)
            den = den.exact_div(g)
    lead = den.lc()
    if lead != 1:
        num = num / lead
        den = den / lead
    return RatFun._raw(num, den)


def _homogenize(p: Poly, top: Poly, bottom: Poly, degree: int) -> Poly:
    """Sum of c_k * top^k * bottom^(degree-k) over the coefficients of p."""
    result = Poly((), top.var)
    for k, c in enumerate(p.coeffs):
        if c:
            result = result + (top ** k) * (bottom ** (degree - k)) * c
    return result


class RatFun:
    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Any, den: Poly | Any = None, var: str | None = None):
        var = var or (num.var if isinstance(num, Poly) else den.var if isinstance(den, Poly) else "t")
        if not isinstance(num, Poly):
            num = Poly((num,), var)
        if den is None:
            den = Poly((ONE,), var)
        elif not isinstance(den, Poly):
            den = Poly((den,), var)
        reduced = ratfun_normalize(num.with_var(var), den.with_var(var))
        self.num = reduced.num
        self.den = reduced.den

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> "RatFun":
        obj = object.__new__(cls)
        obj.num = num
        obj.den = den
        return obj

    # -- constructors -----------------------------------------------------

    @classmethod
    def const(cls, value: Any, var: str = "t") -> "RatFun":
        return cls._raw(Poly((GaussRat.coerce(value),), var), Poly((ONE,), var))

    @classmethod
    def gen(cls, var: str = "t") -> "RatFun":
        return cls._raw(Poly.gen(var), Poly((ONE,), var))

    @classmethod
    def from_poly(cls, p: Poly) -> "RatFun":
        return cls._raw(p, Poly((ONE,), p.var))

    @classmethod
    def from_lists(cls, num: Sequence[Any], den: Sequence[Any] = (1,), var: str = "t") -> "RatFun":
        return cls(Poly.from_values(num, var), Poly.from_values(den, var))

    # -- structure --------------------------------------------------------

    @property
    def var(self) -> str:
        return self.den.var

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.degree() == 0

    def is_constant(self) -> bool:
        return self.is_polynomial() and self.num.degree() <= 0

    def degree(self) -> int:
        """max(deg num, deg den), the size measure used for guard bands."""
        return max(self.num.degree(), self.den.degree())

    def with_var(self, var: str) -> "RatFun":
        return RatFun._raw(self.num.with_var(var), self.den.with_var(var))

    def _coerce(self, other: Any) -> "RatFun | None":
        if isinstance(other, RatFun):
            return other
        if isinstance(other, Poly):
            return RatFun.from_poly(other.with_var(self.var))
        if isinstance(other, _SCALARS):
            return RatFun.const(other, self.var)
        return None

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Any) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return ratfun_normalize(self.num + o.num, self.den)
        return ratfun_normalize(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFun":
        return RatFun._raw(-self.num, self.den)

    def __sub__(self, other: Any) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other: Any) -> "RatFun":
        if isinstance(other, _SCALARS):
            if not other:
                return RatFun.const(ZERO, self.var)
            return RatFun._raw(self.num * GaussRat.coerce(other), self.den)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return ratfun_normalize(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFun":
        if self.is_zero():
            raise DivisionByZeroError("division by zero")
        return ratfun_normalize(self.den, self.num)

    def __truediv__(self, other: Any) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other: Any) -> "RatFun":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int) -> "RatFun":
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        return RatFun._raw(self.num ** exponent, self.den ** exponent)

    def __eq__(self, other: Any) -> bool:
        o = self._coerce(other) if not isinstance(other, RatFun) else other
        if o is None:
            return NotImplemented
        return self.num.coeffs == o.num.coeffs and self.den.coeffs == o.den.coeffs

    def __hash__(self) -> int:
        return hash((self.num.coeffs, self.den.coeffs))

    # -- substitution and calculus ----------------------------------------

    def __call__(self, value: Any) -> GaussRat:
        bottom = self.den(value)
        if not bottom:
            raise DivisionByZeroError(f"pole at {value}")
        return self.num(value) / bottom

    def compose(self, inner: "RatFun") -> "RatFun":
        """self(inner), the result lives in inner's variable."""
        top, bottom = inner.num, inner.den
        dn, dd = self.num.degree(), self.den.degree()
        d = max(dn, dd, 0)
        new_num = _homogenize(self.num, top, bottom, d)
        new_den = _homogenize(self.den, top, bottom, d)
        return ratfun_normalize(new_num, new_den)

    def scale_var(self, factor: Any) -> "RatFun":
        return ratfun_normalize(self.num.scale_var(factor), self.den.scale_var(factor))

    def derivative(self) -> "RatFun":
        num = self.num.derivative() * self.den - self.num * self.den.derivative()
        return ratfun_normalize(num, self.den * self.den)

    # -- expansion at 0 ---------------------------------------------------

    def valuation(self) -> int:
        if self.is_zero():
            raise ValueError("zero has no valuation")
        return self.num.valuation() - self.den.valuation()

    def laurent(self, count: int) -> tuple[int, list[GaussRat]]:
        """(v, c) with self = sum c[k] * var^(v+k) + O(var^(v+count))."""
        if self.is_zero():
            return 0, [ZERO] * count
        vn, vd = self.num.valuation(), self.den.valuation()
        top = self.num.shift_degree(-vn)
        bottom = self.den.shift_degree(-vd)
        return vn - vd, power_series_quotient(top, bottom, count)

    def laurent_window(self, lo: int, hi: int) -> list[GaussRat]:
        """Coefficients of var^lo .. var^(hi-1) in the expansion at 0."""
        if hi <= lo:
            return []
        if self.is_zero():
            return [ZERO] * (hi - lo)
        v = self.valuation()
        _, coeffs = self.laurent(max(hi - v, 0))
        out = []
        for k in range(lo, hi):
            idx = k - v
            out.append(coeffs[idx] if 0 <= idx < len(coeffs) else ZERO)
        return out

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if self.is_polynomial():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RatFun({self})"
