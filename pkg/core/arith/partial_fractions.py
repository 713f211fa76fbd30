"""
Partial fraction decomposition over Q(i).

Poles and multiplicities come from the sympy factorization in gaussian_roots;
the coefficients at each pole are read off the local Laurent expansion.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from core.arith.gauss import ONE, GaussRat
from core.arith.poly import Poly, power_series_quotient
from core.arith.ratfun import RatFun
from core.arith.roots import gaussian_roots


@dataclass(frozen=True)
class PoleTerm:
    pole: GaussRat
    order: int
    coeff: GaussRat

    def as_ratfun(self, var: str) -> RatFun:
        linear = Poly((-self.pole, ONE), var)
        return RatFun(Poly((self.coeff,), var), linear ** self.order)


@dataclass(frozen=True)
class PartialFractions:
    polynomial_part: Poly
    terms: tuple[PoleTerm, ...] = field(default_factory=tuple)

    @property
    def var(self) -> str:
        return self.polynomial_part.var

    def poles(self) -> list[GaussRat]:
        seen: list[GaussRat] = []
        for term in self.terms:
            if term.pole not in seen:
                seen.append(term.pole)
        return seen


def partial_fractions(f: RatFun) -> PartialFractions:
    var = f.var
    poly_part, rem = divmod(f.num, f.den)
    terms: list[PoleTerm] = []
    if rem:
        for root, mult in gaussian_roots(f.den):
            linear = Poly((-root, ONE), var)
            cofactor = f.den.exact_div(linear ** mult)
            # expand rem/cofactor around the root in u = var - root
            local = power_series_quotient(rem.taylor_shift(root), cofactor.taylor_shift(root), mult)
            for k, c in enumerate(local):
                if c:
                    terms.append(PoleTerm(root, mult - k, c))
    return PartialFractions(poly_part, tuple(terms))


def reassemble(pf: PartialFractions) -> RatFun:
    total = RatFun.from_poly(pf.polynomial_part)
    for term in pf.terms:
        total = total + term.as_ratfun(pf.var)
    return total
