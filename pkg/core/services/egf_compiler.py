"""
EGF differential equation -> tau-equation for the OGF.

Input: sum_i a_i(u) D^i(yhat) = sum coeff * t^m * e^(rate*t), u = e^(lam*t),
with the first OGF coefficients y_0, y_1, ... supplied. Multiplication by
u^k on the Borel side is Phi_lam^k = (1/(1 - k*lam*t)) tau^(-k) on the OGF
side, D^i is the divided difference Delta^i, and t^m e^(ct) has the OGF
m! t^m / (1 - ct)^(m+1). Applying tau^K (K the top power of u) clears the
negative shift powers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field, replace
from math import factorial
from typing import Any

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.errors import (
    InconsistentEquationError,
    MissingInitialTermsError,
    PreconditionError,
    ResonanceError,
    TaucertError,
)
from core.schemas.enums import ErrorCode, ResidualStatus
from core.series.engine import Series, inverse_borel
from core.tau.calculus import MoebiusShift, tau_power
from core.tau.equation import ResidualReport, TauEquation

logger = logging.getLogger(__name__)

PARAM_VAR = "x"
U_VAR = "u"


def _specialize_value(value: Any, x: GaussRat) -> Any:
    return value(x) if isinstance(value, Poly) else value


def _is_symbolic(value: Any) -> bool:
    return isinstance(value, Poly) and value.degree() > 0


@dataclass(frozen=True)
class ExpMonomial:
    """coeff * t^m * e^(rate*t); rate and coeff are Gaussian rationals or x-polynomials."""

    m: int
    rate: Any
    coeff: Any

    def ogf(self, var: str = "t") -> RatFun:
        """Inverse Borel image m! t^m / (1 - rate*t)^(m+1)."""
        top = Poly.monomial(GaussRat(factorial(self.m)) * self.coeff, self.m, var)
        bottom = Poly((ONE, -self.rate), var) ** (self.m + 1)
        return RatFun(top, bottom)

    def series(self, order: int) -> Series:
        return Series.exp_linear(self.rate, order).shift(self.m) * self.coeff


@dataclass(frozen=True)
class EgfEquation:
    lam: GaussRat
    lhs: tuple[Poly, ...]
    rhs: tuple[ExpMonomial, ...] = field(default_factory=tuple)
    init: tuple[Any, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "lam", GaussRat.coerce(self.lam))
        if not self.lam:
            raise PreconditionError("exponential rate lambda must be nonzero")
        if not any(a for a in self.lhs):
            raise PreconditionError("zero equation: every left-hand coefficient vanishes")

    @property
    def order(self) -> int:
        return len(self.lhs) - 1

    @property
    def u_degree(self) -> int:
        return max(a.degree() for a in self.lhs if a)

    def is_symbolic(self) -> bool:
        values: list[Any] = [c for a in self.lhs for c in a.coeffs]
        values += [v for mono in self.rhs for v in (mono.rate, mono.coeff)]
        values += list(self.init)
        return any(_is_symbolic(v) for v in values)

    def specialize(self, x: Any) -> "EgfEquation":
        value = GaussRat.coerce(x)
        return EgfEquation(
            self.lam,
            tuple(a.map_coeffs(lambda c: _specialize_value(c, value)) for a in self.lhs),
            tuple(
                ExpMonomial(m.m, _specialize_value(m.rate, value), _specialize_value(m.coeff, value))
                for m in self.rhs
            ),
            tuple(_specialize_value(v, value) for v in self.init),
        )

    def rescaled_to_unit_rate(self) -> "EgfEquation":
        """The equation satisfied by zhat(T) = yhat(T/lam), so u = e^T."""
        lam = self.lam
        inv = lam.inverse()
        return EgfEquation(
            ONE,
            tuple(a * (lam ** i) for i, a in enumerate(self.lhs)),
            tuple(ExpMonomial(m.m, m.rate * inv, m.coeff * (inv ** m.m)) for m in self.rhs),
            tuple(v * (inv ** n) for n, v in enumerate(self.init)),
        )

    def with_rhs(self, rhs: tuple[ExpMonomial, ...]) -> "EgfEquation":
        return replace(self, rhs=rhs)

    def _require_specialized(self, action: str) -> None:
        if self.is_symbolic():
            raise TaucertError(
                f"{action} needs the parameter {PARAM_VAR} specialized to a value",
                code=ErrorCode.INVALID_INPUT,
            )


def _init_needed(eq: EgfEquation) -> int:
    return max(0, max((i for i, a in enumerate(eq.lhs) if a), default=0))


def compile_equation(eq: EgfEquation) -> TauEquation:
    eq._require_specialized("compile")
    shift = MoebiusShift(eq.lam)
    lam = eq.lam
    K = eq.u_degree
    needed = _init_needed(eq)
    if len(eq.init) < needed:
        raise MissingInitialTermsError(
            f"missing initial terms: the equation needs y_0..y_{needed - 1}, got {len(eq.init)}"
        )
    t = Poly.gen("t")
    coeffs = [RatFun.const(ZERO) for _ in range(K + 1)]
    rhs = RatFun.const(ZERO)
    for mono in eq.rhs:
        rhs = rhs + tau_power(mono.ogf(), shift, K)
    for i, a in enumerate(eq.lhs):
        for k, a_ik in enumerate(a.coeffs):
            if not a_ik:
                continue
            j_shift = K - k
            # tau^K(1/(1 - k lam t)) and tau^K(tau^-k(t)) = t/(1 + (K-k) lam t)
            weight = RatFun(Poly((ONE, lam * K)), Poly((ONE, lam * j_shift))) * a_ik
            t_shift = RatFun(t, Poly((ONE, lam * j_shift)))
            coeffs[j_shift] = coeffs[j_shift] + weight / (t_shift ** i)
            for j in range(i):
                y_j = GaussRat.coerce(eq.init[j])
                if y_j:
                    rhs = rhs + weight * (t_shift ** (j - i)) * y_j
    out = TauEquation(shift, tuple(coeffs), rhs).canonical()
    logger.info("compiled equation of order %d (u-degree %d)", out.order, K)
    return out


def solve_egf_series(eq: EgfEquation, order: int) -> Series:
    """Exponential-series solution yhat, determined term by term from the initial OGF coefficients."""
    eq._require_specialized("series solution")
    window = order + eq.u_degree + 2
    lhs: dict[int, Series] = {}
    for i, a in enumerate(eq.lhs):
        if a:
            series = _u_series(a, eq.lam, window)
            if not series.is_zero():
                lhs[i] = series
    if not lhs:
        raise PreconditionError("zero equation: every left-hand coefficient vanishes")
    # the equation at t^n fixes yhat_(n + delta)
    delta = max(i - s.valuation() for i, s in lhs.items())
    if len(eq.init) < delta:
        raise MissingInitialTermsError(
            f"missing initial terms: the equation needs y_0..y_{delta - 1}, got {len(eq.init)}"
        )
    rhs = Series.zero(window)
    for mono in eq.rhs:
        rhs = rhs + mono.series(window)

    yhat: list[Any] = [GaussRat.coerce(v) / factorial(k) for k, v in enumerate(eq.init[:order])]
    n = 0
    while n + delta < order:
        m = n + delta
        known: Any = ZERO
        lead: Any = ZERO
        for i, series in lhs.items():
            for j in range(n + 1):
                c = series.coeffs[j]
                if not c:
                    continue
                falling = 1
                for r in range(n - j + 1, n - j + i + 1):
                    falling *= r
                idx = n - j + i
                if idx == m:
                    lead = lead + c * falling
                else:
                    known = known + c * yhat[idx] * falling
        target = rhs.coeffs[n] - known
        if m < len(yhat):
            fixed = lead * yhat[m] if m >= 0 else ZERO
            if fixed != target:
                raise InconsistentEquationError(
                    f"equation inconsistent with the supplied initial terms at order {n}"
                )
        elif not lead:
            raise ResonanceError(f"series solution underdetermined at order {m}", order=m)
        else:
            yhat.append(target / lead)
        n += 1
    return Series(yhat, order)


def _u_series(a: Poly, lam: GaussRat, order: int) -> Series:
    total = Series.zero(order)
    for k, c in enumerate(a.coeffs):
        if c:
            total = total + Series.exp_linear(lam * k, order) * c
    return total


def verify_compiled(eq: EgfEquation, out: TauEquation, order: int) -> ResidualReport:
    yhat = solve_egf_series(eq, order)
    y = inverse_borel(yhat)
    failing = out.first_residual_order(y)
    if failing is None:
        logger.info("compiled equation exact to order %d", order)
        return ResidualReport(ResidualStatus.EXACT, order)
    logger.info("compiled equation fails at order %d", failing)
    return ResidualReport(ResidualStatus.MISMATCH, order, failing)
