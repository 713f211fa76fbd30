"""
Linear tau-equations sum_k b_k * tau^k(y) = rhs with rational coefficients.
"""

from __future__ import annotations

from dataclasses import dataclass

from core.arith.gauss import ONE
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.errors import PreconditionError
from core.schemas.enums import ResidualStatus
from core.series.engine import Series, tau_power_substitute
from core.tau.calculus import MoebiusShift, tau_power


def _lcm(a: Poly, b: Poly) -> Poly:
    return (a * b).exact_div(a.gcd(b)).monic()


@dataclass(frozen=True)
class TauEquation:
    shift: MoebiusShift
    coeffs: tuple[RatFun, ...]
    rhs: RatFun

    def __post_init__(self) -> None:
        if not self.coeffs or all(c.is_zero() for c in self.coeffs):
            raise PreconditionError("tau-equation with all coefficients zero")

    @classmethod
    def first_order_form(cls, shift: MoebiusShift, a: RatFun, f: RatFun) -> "TauEquation":
        """tau(y) = a*y + f, stored as (-a) y + 1 tau(y) = f."""
        return cls(shift, (-a, RatFun.const(ONE, a.var)), f)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @property
    def var(self) -> str:
        return self.rhs.var

    def trimmed(self) -> "TauEquation":
        """Drop vanishing top coefficients and shift down until b_0 != 0."""
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1].is_zero():
            coeffs.pop()
        rhs = self.rhs
        while coeffs[0].is_zero():
            coeffs = [tau_power(c, self.shift, -1) for c in coeffs[1:]]
            rhs = tau_power(rhs, self.shift, -1)
        return TauEquation(self.shift, tuple(coeffs), rhs)

    def canonical(self) -> "TauEquation":
        """Polynomial coefficients, trivial common content, highest-shift coefficient monic."""
        eq = self.trimmed()
        var = eq.var
        parts = list(eq.coeffs) + [eq.rhs]
        common_den = Poly((ONE,), var)
        for p in parts:
            common_den = _lcm(common_den, p.den)
        nums = [(p.num * common_den).exact_div(p.den) for p in parts]
        content = Poly((), var)
        for n in nums:
            if n:
                content = n if not content else content.gcd(n)
        content = content.monic()
        nums = [n.exact_div(content) for n in nums]
        lead = nums[-2].lc()
        nums = [n / lead for n in nums]
        return TauEquation(
            eq.shift,
            tuple(RatFun.from_poly(n) for n in nums[:-1]),
            RatFun.from_poly(nums[-1]),
        )

    def first_order(self) -> tuple[RatFun, RatFun]:
        """(a, f) with tau(y) = a*y + f."""
        eq = self.trimmed()
        if eq.order != 1:
            raise PreconditionError(f"expected a first-order equation, got order {eq.order}")
        b0, b1 = eq.coeffs
        return -b0 / b1, eq.rhs / b1

    def rescale_to_unit(self) -> "TauEquation":
        """Substitute t -> t/beta, turning tau_beta into tau_1 for z(t) = y(t/beta)."""
        factor = self.shift.beta.inverse()
        return TauEquation(
            MoebiusShift(ONE),
            tuple(c.scale_var(factor) for c in self.coeffs),
            self.rhs.scale_var(factor),
        )

    def residual_series(self, y: Series) -> Series:
        """sum_k b_k tau^k(y) - rhs on the truncation window of y."""
        eq = self.canonical()
        order = y.order
        total = Series.from_poly(eq.rhs.num, order) * (-1)
        for k, b in enumerate(eq.coeffs):
            if b.is_zero():
                continue
            total = total + tau_power_substitute(y, self.shift.beta, k) * b.num
        return total

    def first_residual_order(self, y: Series) -> int | None:
        residual = self.residual_series(y)
        for n, c in enumerate(residual.coeffs):
            if c:
                return n
        return None

    def __str__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            op = "y" if k == 0 else ("tau(y)" if k == 1 else f"tau^{k}(y)")
            terms.append(f"({c})*{op}")
        return " + ".join(terms) + f" = {self.rhs}"


@dataclass(frozen=True)
class ResidualReport:
    status: ResidualStatus
    order: int
    first_failing_order: int | None = None

    @classmethod
    def from_residual(cls, first_failing: int | None, order: int) -> "ResidualReport":
        if first_failing is None:
            return cls(ResidualStatus.EXACT, order)
        return cls(ResidualStatus.MISMATCH, order, first_failing)
