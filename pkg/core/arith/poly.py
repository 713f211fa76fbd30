"""
Dense univariate polynomials.

Coefficients are stored from degree 0 upward and may live in any
commutative ring whose elements support +, -, * and truthiness (False iff
zero): Gaussian rationals, or polynomials in another variable. Field-only
operations (division with remainder, gcd, resultant) require Gaussian
rational coefficients; gcd and resultant run in sympy over QQ_I.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Callable, Iterable, Sequence

import sympy
from sympy.polys.domains import QQ, QQ_I

from core.arith.gauss import ONE, ZERO, GaussRat
from core.errors import DivisionByZeroError


def _lift(value: Any) -> Any:
    if isinstance(value, (int, Fraction)):
        return GaussRat(value)
    return value


def gauss_to_domain(c: GaussRat) -> Any:
    """The QQ_I element equal to c."""
    return QQ_I(QQ(c.re.numerator, c.re.denominator), QQ(c.im.numerator, c.im.denominator))


def gauss_from_domain(z: Any) -> GaussRat:
    return GaussRat(
        Fraction(int(z.x.numerator), int(z.x.denominator)),
        Fraction(int(z.y.numerator), int(z.y.denominator)),
    )


def gauss_from_sympy(value: Any) -> GaussRat:
    return gauss_from_domain(QQ_I.from_sympy(sympy.sympify(value)))


class Poly:
    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable[Any] = (), var: str = "t"):
        items = [_lift(c) for c in coeffs]
        while items and not items[-1]:
            items.pop()
        self.coeffs: tuple = tuple(items)
        self.var = var

    # -- constructors -----------------------------------------------------

    @classmethod
    def gen(cls, var: str = "t", one: Any = ONE) -> "Poly":
        return cls((one * 0, one), var)

    @classmethod
    def const(cls, value: Any, var: str = "t") -> "Poly":
        return cls((value,), var)

    @classmethod
    def monomial(cls, value: Any, k: int, var: str = "t") -> "Poly":
        return cls([value * 0] * k + [value], var)

    @classmethod
    def from_values(cls, values: Sequence[Any], var: str = "t") -> "Poly":
        return cls((GaussRat.coerce(v) for v in values), var)

    # -- structure --------------------------------------------------------

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def lc(self) -> Any:
        return self.coeffs[-1] if self.coeffs else ZERO

    def coeff(self, k: int) -> Any:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return ZERO

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return -1

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    def constant_value(self) -> Any:
        return self.coeffs[0] if self.coeffs else ZERO

    def map_coeffs(self, fn: Callable[[Any], Any], var: str | None = None) -> "Poly":
        return Poly((fn(c) for c in self.coeffs), var or self.var)

    def with_var(self, var: str) -> "Poly":
        return Poly(self.coeffs, var)

    def _is_same_ring(self, other: Any) -> bool:
        return isinstance(other, Poly) and other.var == self.var

    # -- ring arithmetic --------------------------------------------------

    def __add__(self, other: Any) -> "Poly":
        if self._is_same_ring(other):
            a, b = self.coeffs, other.coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for k, c in enumerate(b):
                out[k] = out[k] + c
            return Poly(out, self.var)
        if not self.coeffs:
            return Poly((other,), self.var)
        out = list(self.coeffs)
        out[0] = out[0] + other
        return Poly(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly((-c for c in self.coeffs), self.var)

    def __sub__(self, other: Any) -> "Poly":
        return self + (-other)

    def __rsub__(self, other: Any) -> "Poly":
        return (-self) + other

    def __mul__(self, other: Any) -> "Poly":
        if self._is_same_ring(other):
            a, b = self.coeffs, other.coeffs
            if not a or not b:
                return Poly((), self.var)
            out = [None] * (len(a) + len(b) - 1)
            for i, ca in enumerate(a):
                if not ca:
                    continue
                for j, cb in enumerate(b):
                    term = ca * cb
                    cur = out[i + j]
                    out[i + j] = term if cur is None else cur + term
            return Poly((ZERO if c is None else c for c in out), self.var)
        if not other:
            return Poly((), self.var)
        return Poly((c * other for c in self.coeffs), self.var)

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Poly":
        if isinstance(other, Poly):
            if other.var == self.var:
                raise TypeError("use divmod or RatFun for polynomial division")
        if not other:
            raise DivisionByZeroError("division by zero")
        return Poly((c / other for c in self.coeffs), self.var)

    def __pow__(self, exponent: int) -> "Poly":
        if not isinstance(exponent, int) or exponent < 0:
            return NotImplemented
        result = Poly((ONE if not self.coeffs else self.coeffs[0] * 0 + 1,), self.var)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other: Any) -> bool:
        if self._is_same_ring(other):
            return self.coeffs == other.coeffs
        if isinstance(other, (Poly, GaussRat, int, Fraction)):
            if len(self.coeffs) > 1:
                return False
            return self.constant_value() == other
        return NotImplemented

    def __hash__(self) -> int:
        if len(self.coeffs) <= 1:
            return hash(self.constant_value())
        return hash((self.var, self.coeffs))

    # -- evaluation and calculus ------------------------------------------

    def __call__(self, value: Any) -> Any:
        result: Any = ZERO
        for c in reversed(self.coeffs):
            result = result * value + c
        return result

    def compose(self, inner: "Poly") -> "Poly":
        result = Poly((), inner.var)
        for c in reversed(self.coeffs):
            result = result * inner + c
        return result

    def taylor_shift(self, k: Any) -> "Poly":
        """p(var + k)."""
        return self.compose(Poly((k, ONE), self.var))

    def scale_var(self, factor: Any) -> "Poly":
        """p(factor * var)."""
        out = []
        power: Any = ONE
        for c in self.coeffs:
            out.append(c * power)
            power = power * factor
        return Poly(out, self.var)

    def derivative(self) -> "Poly":
        return Poly((c * k for k, c in enumerate(self.coeffs) if k), self.var)

    def shift_degree(self, k: int) -> "Poly":
        """Multiply by var**k (k >= 0) or drop the lowest -k coefficients."""
        if k >= 0:
            return Poly([ZERO] * k + list(self.coeffs), self.var)
        return Poly(self.coeffs[-k:], self.var)

    # -- field operations (Gaussian rational coefficients) ----------------

    def monic(self) -> "Poly":
        if not self.coeffs:
            return self
        return self / self.lc()

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if not other.coeffs:
            raise DivisionByZeroError("division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return Poly((), self.var), Poly(rem, self.var)
        inv = other.lc().inverse()
        quot = [ZERO] * (dq + 1)
        db = other.degree()
        for k in range(dq, -1, -1):
            c = rem[k + db]
            if not c:
                continue
            q = c * inv
            quot[k] = q
            for j, cb in enumerate(other.coeffs):
                if cb:
                    rem[k + j] = rem[k + j] - q * cb
        return Poly(quot, self.var), Poly(rem[:db], self.var)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def divides(self, other: "Poly") -> bool:
        return not (other % self)

    def exact_div(self, other: "Poly") -> "Poly":
        quot, rem = divmod(self, other)
        if rem:
            raise ValueError(f"{other} does not divide {self}")
        return quot

    def to_sympy(self) -> sympy.Poly:
        """The same polynomial as a sympy Poly over QQ_I."""
        gen = sympy.Symbol(self.var)
        if not self.coeffs:
            return sympy.Poly(0, gen, domain=QQ_I)
        return sympy.Poly.from_list([gauss_to_domain(c) for c in reversed(self.coeffs)], gen, domain=QQ_I)

    @classmethod
    def from_sympy(cls, poly: sympy.Poly, var: str | None = None) -> "Poly":
        return cls((gauss_from_domain(c) for c in reversed(poly.rep.to_list())), var or str(poly.gen))

    def gcd(self, other: "Poly") -> "Poly":
        if not self or not other:
            return (self if self else other).monic()
        if self.degree() == 0 or other.degree() == 0:
            return Poly((ONE,), self.var)
        return Poly.from_sympy(self.to_sympy().gcd(other.to_sympy()), self.var).monic()

    def resultant(self, other: "Poly") -> GaussRat:
        if not self or not other:
            return ZERO
        if self.degree() == 0:
            return self.lc() ** other.degree()
        if other.degree() == 0:
            return other.lc() ** self.degree()
        return gauss_from_sympy(self.to_sympy().resultant(other.to_sympy()))

    # -- rendering --------------------------------------------------------

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            text = str(c)
            compound = isinstance(c, Poly) or ("+" in text[1:] or "-" in text[1:])
            if k == 0:
                parts.append(f"({text})" if compound and len(self.coeffs) > 1 else text)
                continue
            mono = self.var if k == 1 else f"{self.var}^{k}"
            if c == 1:
                parts.append(mono)
            elif c == -1:
                parts.append(f"-{mono}")
            else:
                parts.append(f"({text})*{mono}" if compound else f"{text}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")

    def __repr__(self) -> str:
        return f"Poly({self})"


def poly_from_roots(roots: Sequence[GaussRat], var: str = "t") -> Poly:
    result = Poly((ONE,), var)
    for r in roots:
        result = result * Poly((-r, ONE), var)
    return result


def power_series_quotient(top: Poly, bottom: Poly, count: int) -> list:
    """First `count` coefficients of top/bottom at 0; bottom(0) must be a unit."""
    head = bottom.coeff(0)
    if not head:
        raise DivisionByZeroError("series division by a non-unit")
    inv = head.inverse()
    out: list = []
    for n in range(count):
        acc = top.coeff(n)
        for k in range(max(0, n - bottom.degree()), n):
            b = bottom.coeff(n - k)
            if b:
                acc = acc - out[k] * b
        out.append(acc * inv)
    return out
