"""
Operator algebra on Q(i)(t): the Moebius shift tau_beta: t -> t/(1+beta*t),
the derivation d = t^2 d/dt, and the shift frame s = 1/(beta*t) in which
tau_beta becomes the unit shift s -> s+1 and d becomes -(1/beta) d/ds.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import floor
from typing import Any

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.arith.roots import gaussian_roots
from core.errors import PreconditionError

FRAME_VAR = "s"


@dataclass(frozen=True)
class MoebiusShift:
    beta: GaussRat

    def __post_init__(self) -> None:
        object.__setattr__(self, "beta", GaussRat.coerce(self.beta))
        if not self.beta:
            raise PreconditionError("shift parameter beta must be nonzero")

    @classmethod
    def unit(cls) -> "MoebiusShift":
        return cls(ONE)

    def power(self, k: int) -> "MoebiusShift":
        """tau_beta^k = tau_{k*beta} for k != 0."""
        return MoebiusShift(self.beta * k)

    def substitution(self, k: int = 1, var: str = "t") -> RatFun:
        """The rational function t/(1 + k*beta*t)."""
        return RatFun(Poly.gen(var), Poly((ONE, self.beta * k), var))

    def __str__(self) -> str:
        return f"t -> t/(1 + ({self.beta})*t)"


def tau_power(f: RatFun, shift: MoebiusShift, k: int) -> RatFun:
    if k == 0 or f.is_constant():
        return f
    return f.compose(shift.substitution(k, f.var))


def tau_apply(f: RatFun, shift: MoebiusShift) -> RatFun:
    return tau_power(f, shift, 1)


def tau_inverse(f: RatFun, shift: MoebiusShift) -> RatFun:
    return tau_power(f, shift, -1)


def partial_d(f: RatFun, i: int = 1) -> RatFun:
    """i-fold t^2 * d/dt."""
    if i < 0:
        raise PreconditionError("derivation power must be nonnegative")
    t2 = RatFun.from_poly(Poly.monomial(ONE, 2, f.var))
    out = f
    for _ in range(i):
        if out.is_zero():
            break
        out = t2 * out.derivative()
    return out


def fixed_points(shift: MoebiusShift) -> list[GaussRat]:
    """Points of Q(i) fixed by tau; always [0] since the homography is parabolic."""
    t = RatFun.gen()
    moved = tau_apply(t, shift) - t
    return [root for root, _ in gaussian_roots(moved.num)]


# -- shift frame --------------------------------------------------------------


def to_shift_frame(f: RatFun, shift: MoebiusShift) -> RatFun:
    """F(s) = f(1/(beta*s))."""
    inner = RatFun(Poly((ONE,), FRAME_VAR), Poly((ZERO, shift.beta), FRAME_VAR))
    if f.is_constant():
        return f.with_var(FRAME_VAR)
    return f.compose(inner)


def from_shift_frame(F: RatFun, shift: MoebiusShift, var: str = "t") -> RatFun:
    """f(t) = F(1/(beta*t))."""
    inner = RatFun(Poly((ONE,), var), Poly((ZERO, shift.beta), var))
    if F.is_constant():
        return F.with_var(var)
    return F.compose(inner)


def sigma(F: RatFun, k: int | GaussRat = 1) -> RatFun:
    """F(s + k)."""
    if F.is_constant():
        return F
    return RatFun(F.num.taylor_shift(k), F.den.taylor_shift(k))


def frame_derivation(F: RatFun, shift: MoebiusShift) -> RatFun:
    """Image of t^2 d/dt in the frame: -(1/beta) dF/ds."""
    return F.derivative() * (-shift.beta.inverse())


def pole_to_frame(pole: GaussRat, shift: MoebiusShift) -> GaussRat:
    if not pole:
        raise PreconditionError("the pole at t = 0 has no finite frame image")
    return (shift.beta * pole).inverse()


def orbit_representative(point: GaussRat) -> tuple[GaussRat, int]:
    """(rep, k) with point = rep + k and Re(rep) in [0, 1)."""
    k = floor(point.re)
    return point - k, k


def integer_offset(p: GaussRat, q: GaussRat) -> int | None:
    diff = q - p
    if diff.im or diff.re.denominator != 1:
        return None
    return int(diff.re)


def same_orbit(p: Any, q: Any, shift: MoebiusShift) -> int | None:
    """
    Offset m with s(q) = s(p) + m in the frame s = 1/(beta*t), i.e.
    q = tau^m(p) as points; None when the poles lie on different orbits.
    """
    sp = pole_to_frame(GaussRat.coerce(p), shift)
    sq = pole_to_frame(GaussRat.coerce(q), shift)
    return integer_offset(sp, sq)
