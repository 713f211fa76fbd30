"""
Gaussian rationals: exact elements re + im*i of Q(i).

BigRat is the standard library Fraction (arbitrary-precision numerator,
positive denominator, always in lowest terms).
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Any

from core.errors import DivisionByZeroError, TaucertError

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_IMAG = r"[+-]?(?:\d+(?:/\d+)?)?"
_PURE_IMAG_PATTERN = re.compile(rf"^(?P<im>{_IMAG})i$")
_GAUSS_PATTERN = re.compile(rf"^(?P<re>{_RATIONAL})(?:(?P<im>{_IMAG})i)?$")


class GaussRat:
    """Immutable element of Q(i)."""

    __slots__ = ("re", "im")

    def __init__(self, re: int | Fraction = 0, im: int | Fraction = 0):
        self.re = re if isinstance(re, Fraction) else Fraction(re)
        self.im = im if isinstance(im, Fraction) else Fraction(im)

    # -- construction -----------------------------------------------------

    @classmethod
    def coerce(cls, value: Any) -> "GaussRat":
        if isinstance(value, GaussRat):
            return value
        if isinstance(value, (int, Fraction)):
            return cls(value)
        if isinstance(value, str):
            return cls.parse(value)
        if isinstance(value, (list, tuple)) and len(value) == 2:
            return cls(Fraction(str(value[0])), Fraction(str(value[1])))
        raise TaucertError(f"cannot interpret {value!r} as a Gaussian rational")

    @classmethod
    def parse(cls, text: str) -> "GaussRat":
        """Parse "p/q", "a+bi", "-3/4i", "i" (whitespace ignored)."""
        cleaned = text.replace(" ", "").replace("*", "")
        if not cleaned:
            raise TaucertError("empty Gaussian rational literal")
        match = _PURE_IMAG_PATTERN.match(cleaned) or _GAUSS_PATTERN.match(cleaned)
        if match is None:
            raise TaucertError(f"malformed Gaussian rational literal {text!r}")
        groups = match.groupdict()
        real = Fraction(groups["re"]) if groups.get("re") else Fraction(0)
        imag_text = groups.get("im")
        if imag_text is None:
            imag = Fraction(0)
        elif imag_text in ("", "+"):
            imag = Fraction(1)
        elif imag_text == "-":
            imag = Fraction(-1)
        else:
            imag = Fraction(imag_text)
        return cls(real, imag)

    # -- predicates -------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> "GaussRat":
        return GaussRat(self.re, -self.im)

    def inverse(self) -> "GaussRat":
        if not self.im:
            if not self.re:
                raise DivisionByZeroError("division by zero")
            return GaussRat(1 / self.re)
        n = self.norm()
        return GaussRat(self.re / n, -self.im / n)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other: Any) -> "GaussRat":
        if isinstance(other, GaussRat):
            return GaussRat(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "GaussRat":
        return GaussRat(-self.re, -self.im)

    def __sub__(self, other: Any) -> "GaussRat":
        if isinstance(other, GaussRat):
            return GaussRat(self.re - other.re, self.im - other.im)
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re - other, self.im)
        return NotImplemented

    def __rsub__(self, other: Any) -> "GaussRat":
        if isinstance(other, (int, Fraction)):
            return GaussRat(other - self.re, -self.im)
        return NotImplemented

    def __mul__(self, other: Any) -> "GaussRat":
        if isinstance(other, GaussRat):
            if not self.im and not other.im:
                return GaussRat(self.re * other.re)
            return GaussRat(
                self.re * other.re - self.im * other.im,
                self.re * other.im + self.im * other.re,
            )
        if isinstance(other, (int, Fraction)):
            return GaussRat(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "GaussRat":
        if isinstance(other, GaussRat):
            return self * other.inverse()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise DivisionByZeroError("division by zero")
            return GaussRat(self.re / other, self.im / other)
        return NotImplemented

    def __rtruediv__(self, other: Any) -> "GaussRat":
        if isinstance(other, (int, Fraction)):
            return GaussRat(other) * self.inverse()
        return NotImplemented

    def __pow__(self, exponent: int) -> "GaussRat":
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = GaussRat(1)
        e = abs(exponent)
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison / hashing ---------------------------------------------

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, GaussRat):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self) -> int:
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    # -- rendering --------------------------------------------------------

    def to_pair(self) -> list[str]:
        return [str(self.re), str(self.im)]

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if self.im == 1:
            imag = "i"
        elif self.im == -1:
            imag = "-i"
        else:
            imag = f"{self.im}i"
        if not self.re:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{self.re}{sign}{imag}"

    def __repr__(self) -> str:
        return f"GaussRat({self})"


ZERO = GaussRat(0)
ONE = GaussRat(1)
I = GaussRat(0, 1)
