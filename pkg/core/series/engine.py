"""
Truncated power series in t.

Coefficients are Gaussian rationals when every parameter is specialized, or
polynomials in the parameter x (Poly with var "x") when x stays symbolic.
A Series of order N holds exactly N coefficients c_0..c_{N-1}; binary
operations refuse operands of different orders.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from math import comb, factorial
from typing import Any, Iterable

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.errors import PreconditionError, TruncationMismatchError

logger = logging.getLogger(__name__)


def _lift(value: Any) -> Any:
    if isinstance(value, (Poly, GaussRat)):
        return value
    return GaussRat.coerce(value)


def _is_constant(c: Any) -> bool:
    return not isinstance(c, Poly) or c.degree() <= 0


def _constant_of(c: Any) -> GaussRat:
    return c.constant_value() if isinstance(c, Poly) else c


class Series:
    __slots__ = ("coeffs", "var", "param")

    def __init__(self, coeffs: Iterable[Any], order: int | None = None, var: str = "t", param: str = "x"):
        items = [_lift(c) for c in coeffs]
        if order is not None:
            items = items[:order] + [ZERO] * max(0, order - len(items))
        self.coeffs: tuple = tuple(items)
        self.var = var
        self.param = param

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((ONE,), order)

    @classmethod
    def gen(cls, order: int) -> "Series":
        return cls((ZERO, ONE), order)

    @classmethod
    def from_poly(cls, p: Poly, order: int) -> "Series":
        return cls(p.coeffs, order)

    @classmethod
    def from_ratfun(cls, f: RatFun, order: int) -> "Series":
        if f.is_zero():
            return cls.zero(order)
        if f.valuation() < 0:
            raise PreconditionError(f"{f} has a pole at {f.var} = 0")
        return cls(f.laurent_window(0, order), order)

    @classmethod
    def exp_linear(cls, rate: Any, order: int) -> "Series":
        """e^(rate*t); rate is a Gaussian rational or a polynomial in x."""
        out = []
        power: Any = ONE
        for n in range(order):
            out.append(power / factorial(n))
            power = power * rate
        return cls(out, order)

    # -- structure --------------------------------------------------------

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, n: int) -> Any:
        return self.coeffs[n]

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def valuation(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return self.order

    def truncate(self, order: int) -> "Series":
        if order > self.order:
            raise TruncationMismatchError(f"cannot extend a series of order {self.order} to {order}")
        return Series(self.coeffs[:order], order, self.var, self.param)

    def specialize(self, x: Any) -> "Series":
        """Evaluate x-polynomial coefficients at a Gaussian rational."""
        value = GaussRat.coerce(x)
        return Series((c(value) if isinstance(c, Poly) else c for c in self.coeffs), self.order)

    def is_symbolic(self) -> bool:
        return any(isinstance(c, Poly) and c.degree() > 0 for c in self.coeffs)

    def _check(self, other: "Series") -> None:
        if other.order != self.order:
            raise TruncationMismatchError(
                f"truncation mismatch: order {self.order} vs order {other.order}"
            )

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            self._check(other)
            return Series((a + b for a, b in zip(self.coeffs, other.coeffs)), self.order)
        if not self.coeffs:
            return self
        return Series((self.coeffs[0] + other,) + self.coeffs[1:], self.order)

    __radd__ = __add__

    def __neg__(self) -> "Series":
        return Series((-c for c in self.coeffs), self.order)

    def __sub__(self, other: Any) -> "Series":
        return self + (-other)

    def __rsub__(self, other: Any) -> "Series":
        return (-self) + other

    def __mul__(self, other: Any) -> "Series":
        if isinstance(other, Series):
            self._check(other)
            n = self.order
            a, b = self.coeffs, other.coeffs
            out: list[Any] = [ZERO] * n
            for i in range(n):
                if not a[i]:
                    continue
                for j in range(n - i):
                    if b[j]:
                        out[i + j] = out[i + j] + a[i] * b[j]
            return Series(out, n)
        if isinstance(other, Poly) and other.var == self.var:
            return self * Series.from_poly(other, self.order)
        return Series((c * other for c in self.coeffs), self.order)

    __rmul__ = __mul__

    def scale(self, value: Any) -> "Series":
        return Series((c * value for c in self.coeffs), self.order)

    def shift(self, k: int) -> "Series":
        """Multiply by t^k, keeping the order."""
        return Series([ZERO] * k + list(self.coeffs[: self.order - k]), self.order)

    def derivative(self) -> "Series":
        """d/dt; the result has order N-1."""
        return Series((c * n for n, c in enumerate(self.coeffs) if n), self.order - 1)

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return self.order == other.order and all(a == b for a, b in zip(self.coeffs, other.coeffs))

    __hash__ = None  # type: ignore[assignment]

    def __str__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order > 8 else ""
        return f"[{shown}{more}] + O({self.var}^{self.order})"

    def __repr__(self) -> str:
        return f"Series({self})"


@dataclass(frozen=True)
class SeriesPair:
    ogf: Series
    egf: Series

    @classmethod
    def from_ogf(cls, ogf: Series) -> "SeriesPair":
        return cls(ogf, borel(ogf))

    @classmethod
    def from_egf(cls, egf: Series) -> "SeriesPair":
        return cls(inverse_borel(egf), egf)

    def is_consistent(self) -> bool:
        return borel(self.ogf) == self.egf


# -- Borel transform and the Phi operator -------------------------------------


def borel(f: Series) -> Series:
    return Series((c / factorial(n) for n, c in enumerate(f.coeffs)), f.order)


def inverse_borel(f: Series) -> Series:
    return Series((c * factorial(n) for n, c in enumerate(f.coeffs)), f.order)


def phi_tau(f: Series, rate: Any = ONE) -> Series:
    """(1/(1 - rate*t)) * f(t/(1 - rate*t)); its Borel image is borel(f)*e^(rate*t)."""
    lam = GaussRat.coerce(rate)
    n_max = f.order
    powers = [ONE]
    for _ in range(n_max):
        powers.append(powers[-1] * lam)
    out = []
    for n in range(n_max):
        acc: Any = ZERO
        for k in range(n + 1):
            c = f.coeffs[k]
            if c:
                acc = acc + c * (powers[n - k] * comb(n, k))
        out.append(acc)
    return Series(out, n_max)


def divided_difference(f: Series, i: int) -> Series:
    """(f - sum_{j<i} f_j t^j) / t^i, truncated at N - i."""
    if i < 0 or i >= f.order:
        raise PreconditionError(f"divided difference of order {i} needs a series longer than {f.order}")
    return Series(f.coeffs[i:], f.order - i)


# -- composition and elementary functions -------------------------------------


def compose(f: Series, g: Series) -> Series:
    """f(g); requires g(0) = 0."""
    f._check(g)
    if g.coeffs and g.coeffs[0]:
        raise PreconditionError(f"compose needs a zero constant term, got {g.coeffs[0]}")
    result = Series.zero(f.order)
    for c in reversed(f.coeffs):
        result = result * g + c
    return result


def exp_series(f: Series) -> Series:
    """exp(f); requires f(0) = 0 so the result stays over the coefficient ring."""
    if f.coeffs and f.coeffs[0]:
        raise PreconditionError(f"exp_series needs a zero constant term, got {f.coeffs[0]}")
    n_max = f.order
    out: list[Any] = [ONE] + [ZERO] * (n_max - 1)
    for n in range(1, n_max):
        acc: Any = ZERO
        for k in range(1, n + 1):
            if f.coeffs[k]:
                acc = acc + f.coeffs[k] * out[n - k] * k
        out[n] = acc / n
    return Series(out, n_max)


def log_series(f: Series) -> Series:
    """log(f); requires f(0) = 1."""
    if not f.coeffs or f.coeffs[0] != 1:
        head = f.coeffs[0] if f.coeffs else ZERO
        raise PreconditionError(f"log_series needs constant term 1, got {head}")
    n_max = f.order
    out: list[Any] = [ZERO] * n_max
    for n in range(1, n_max):
        acc = f.coeffs[n] * n
        for k in range(1, n):
            if out[k] and f.coeffs[n - k]:
                acc = acc - out[k] * f.coeffs[n - k] * k
        out[n] = acc / n
    return Series(out, n_max)


def reciprocal(f: Series) -> Series:
    """1/f; requires f(0) to be a nonzero constant."""
    head = f.coeffs[0] if f.coeffs else ZERO
    if not head or not _is_constant(head):
        raise PreconditionError(f"reciprocal needs an invertible constant term, got {head}")
    inv = _constant_of(head).inverse()
    n_max = f.order
    out: list[Any] = [inv] + [ZERO] * (n_max - 1)
    for n in range(1, n_max):
        acc: Any = ZERO
        for k in range(1, n + 1):
            if f.coeffs[k] and out[n - k]:
                acc = acc + f.coeffs[k] * out[n - k]
        out[n] = -acc * inv
    return Series(out, n_max)


# -- the Moebius shift on series ----------------------------------------------


def _tau_matrix(beta: GaussRat, order: int) -> list[list[GaussRat]]:
    """row m, column k: coefficient of t^m in (t/(1+beta*t))^k."""
    neg = -beta
    powers = [ONE]
    for _ in range(order):
        powers.append(powers[-1] * neg)
    rows = []
    for m in range(order):
        row = [ONE if m == 0 else ZERO]
        for k in range(1, m + 1):
            row.append(powers[m - k] * comb(m - 1, m - k))
        rows.append(row)
    return rows


def tau_substitute(f: Series, beta: Any) -> Series:
    """f(t/(1+beta*t)), truncated at the order of f."""
    b = GaussRat.coerce(beta)
    if not b:
        raise PreconditionError("shift parameter beta must be nonzero")
    rows = _tau_matrix(b, f.order)
    out = []
    for m, row in enumerate(rows):
        acc: Any = ZERO
        for k, weight in enumerate(row):
            c = f.coeffs[k]
            if c and weight:
                acc = acc + c * weight
        out.append(acc)
    return Series(out, f.order)


def tau_inverse_substitute(f: Series, beta: Any) -> Series:
    """f(t/(1-beta*t))."""
    return tau_substitute(f, -GaussRat.coerce(beta))


def tau_power_substitute(f: Series, beta: Any, k: int) -> Series:
    """tau_beta^k applied to f for any integer k (tau_beta^k = tau_{k*beta})."""
    if k == 0:
        return f
    return tau_substitute(f, GaussRat.coerce(beta) * k)
