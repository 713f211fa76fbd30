"""
Certification of first-order equations tau(w) = a*w + f.

A formal solution w that is not a rational function is differentially
transcendental over the field of meromorphic germs at 0 (one-fixed-point
shifts only). Rationality is decided exactly: the rational solutions of the
equation are r + c*z, and w is compared against them on a guarded window.
"""

from __future__ import annotations

import hashlib
import json
import logging
from dataclasses import dataclass, field
from math import comb
from typing import Any

from core.arith.gauss import ZERO, GaussRat
from core.arith.linalg import LinSystem, linsolve
from core.arith.ratfun import RatFun
from core.config import settings
from core.errors import (
    ComparisonOrderError,
    InconsistentEquationError,
    PreconditionError,
    ResonanceError,
)
from core.schemas.enums import EvidenceKind, Verdict
from core.series.engine import Series
from core.services.summability import (
    RationalSolutionSpace,
    TelescoperWitness,
    rational_solutions,
    telescoper_decide,
)
from core.tau.calculus import MoebiusShift, partial_d, tau_apply
from core.tau.equation import TauEquation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FirstOrderProblem:
    shift: MoebiusShift
    a: RatFun
    f: RatFun
    w: Series
    order: int

    def __post_init__(self) -> None:
        if self.a.is_zero():
            raise PreconditionError("coefficient a must be nonzero")
        if self.w.order < self.order:
            raise ComparisonOrderError(
                f"series of order {self.w.order} is shorter than the comparison order {self.order}"
            )

    @classmethod
    def from_equation(cls, eq: TauEquation, w: Series, order: int | None = None) -> "FirstOrderProblem":
        a, f = eq.first_order()
        return cls(eq.shift, a, f, w, order if order is not None else w.order)

    def equation(self) -> TauEquation:
        return TauEquation.first_order_form(self.shift, self.a, self.f)


@dataclass(frozen=True)
class Evidence:
    kind: EvidenceKind
    universal_denominator_degree: int | None = None
    poly_degree_bound: int | None = None
    homogeneous_dimension: int = 0
    comparison_order: int | None = None
    detail: str | None = None


@dataclass(frozen=True)
class Certificate:
    verdict: Verdict
    evidence: Evidence
    equation: TauEquation
    order: int
    series_prefix: tuple[Any, ...] = field(default_factory=tuple)
    series_prefix_hash: str = ""
    witness: RatFun | None = None


def series_prefix_hash(values: tuple[Any, ...]) -> str:
    payload = json.dumps([str(v) for v in values], separators=(",", ":"))
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


# -- formal solution ----------------------------------------------------------


def _tau_coeff(beta: GaussRat, m: int, k: int) -> GaussRat:
    """Coefficient of t^m in (t/(1+beta*t))^k."""
    if m < 0 or k > m:
        return ZERO
    if k == 0:
        return GaussRat(1) if m == 0 else ZERO
    return (-beta) ** (m - k) * comb(m - 1, m - k)


def solve_series(eq: TauEquation, order: int) -> Series:
    """The power-series solution of a first-order tau-equation, to the given order."""
    a, f = eq.first_order()
    if a.is_zero():
        raise PreconditionError("coefficient a must be nonzero")
    beta = eq.shift.beta
    v = a.valuation()
    if v < 0:
        delta = v
    elif v > 0:
        delta = 0
    else:
        delta = 1 if a.laurent_window(0, 1)[0] == 1 else 0
    lo = min(v, 0, f.valuation() if f else 0)
    hi = order + max(delta, 0)
    a_coeffs = dict(zip(range(v, hi + 1), a.laurent_window(v, hi + 1)))
    f_coeffs = dict(zip(range(lo, hi + 1), f.laurent_window(lo, hi + 1)))

    def coefficient(m: int, k: int) -> GaussRat:
        # coefficient of y_k in the equation at t^m
        return _tau_coeff(beta, m, k) - a_coeffs.get(m - k, ZERO)

    y: list[GaussRat] = []
    for m in range(lo, order + delta):
        idx = m - delta
        rhs = f_coeffs.get(m, ZERO)
        known = ZERO
        for k in range(max(0, min(idx, len(y)))):
            c = coefficient(m, k)
            if c:
                known = known + c * y[k]
        if idx < 0:
            if rhs != known:
                raise InconsistentEquationError(f"equation has no power-series solution (order {m})")
            continue
        lead = coefficient(m, idx)
        if not lead:
            raise ResonanceError(f"series solution underdetermined at order {idx}", order=idx)
        y.append((rhs - known) / lead)
    return Series(y, order)


# -- certification ------------------------------------------------------------


def _candidate_degree(space: RationalSolutionSpace) -> int:
    degrees = [z.degree() for z in space.homogeneous]
    if space.particular is not None:
        degrees.append(space.particular.degree())
    return max(degrees, default=0)


def _match(problem: FirstOrderProblem, space: RationalSolutionSpace) -> RatFun | None:
    """Rational solution equal to w on the comparison window, if any."""
    particular = space.particular
    candidates = [particular, *space.homogeneous]
    lo = min([0] + [c.valuation() for c in candidates if c])
    hi = problem.order
    w = [ZERO] * (-lo) + list(problem.w.coeffs[:hi])
    diff = list(w)
    if particular:
        diff = [d - r for d, r in zip(diff, particular.laurent_window(lo, hi))]
    if not space.homogeneous:
        return particular if not any(diff) else None
    columns = [z.laurent_window(lo, hi) for z in space.homogeneous]
    matrix = [[col[k] for col in columns] for k in range(hi - lo)]
    solution = linsolve(LinSystem.build(matrix, diff, cols=len(columns)))
    if solution is None:
        return None
    witness = particular if particular is not None else RatFun.const(ZERO, problem.a.var)
    for c, z in zip(solution.particular, space.homogeneous):
        if c:
            witness = witness + z * c
    return witness


def certify(problem: FirstOrderProblem) -> Certificate:
    prefix = tuple(problem.w.coeffs[: problem.order])
    digest = series_prefix_hash(prefix)
    equation = problem.equation()

    if problem.w.is_zero() and problem.f.is_zero():
        logger.info("zero series certified rational")
        return Certificate(
            Verdict.RATIONAL,
            Evidence(EvidenceKind.WITNESS_MATCH, comparison_order=problem.order),
            equation,
            problem.order,
            prefix,
            digest,
            RatFun.const(ZERO, problem.a.var),
        )

    space = rational_solutions(problem.a, problem.f, problem.shift)
    base = dict(
        universal_denominator_degree=space.universal_denominator_degree,
        poly_degree_bound=space.poly_degree_bound,
        homogeneous_dimension=len(space.homogeneous),
    )
    if space.particular is None:
        logger.info("no rational solution: strongly differentially transcendental")
        return Certificate(
            Verdict.STRONGLY_D_TRANSCENDENTAL,
            Evidence(EvidenceKind.NO_RATIONAL_SOLUTION, **base),
            equation,
            problem.order,
            prefix,
            digest,
        )

    needed = 2 * _candidate_degree(space) + settings.CERTIFY_GUARD_BAND
    if problem.order < needed:
        raise ComparisonOrderError(
            f"comparison order {problem.order} is below the guarded minimum {needed}"
        )
    witness = _match(problem, space)
    if witness is None:
        logger.info("rational solutions differ from the series: strongly differentially transcendental")
        return Certificate(
            Verdict.STRONGLY_D_TRANSCENDENTAL,
            Evidence(EvidenceKind.SERIES_MISMATCH, comparison_order=problem.order, **base),
            equation,
            problem.order,
            prefix,
            digest,
        )
    logger.info("series matches rational witness %s", witness)
    return Certificate(
        Verdict.RATIONAL,
        Evidence(EvidenceKind.WITNESS_MATCH, comparison_order=problem.order, **base),
        equation,
        problem.order,
        prefix,
        digest,
        witness,
    )


def certify_equation(eq: TauEquation, w: Series, order: int | None = None) -> Certificate:
    """Certificate for a tau-equation of any order; only order one is decided."""
    trimmed = eq.trimmed()
    n = order if order is not None else w.order
    if trimmed.order != 1:
        prefix = tuple(w.coeffs[:n])
        return Certificate(
            Verdict.UNSUPPORTED,
            Evidence(EvidenceKind.UNSUPPORTED_INPUT, detail=f"equation of order {trimmed.order}"),
            eq,
            n,
            prefix,
            series_prefix_hash(prefix),
        )
    return certify(FirstOrderProblem.from_equation(trimmed, w, n))


def unsupported_shift(eq: TauEquation, w: Series, alpha: Any, order: int) -> Certificate:
    prefix = tuple(w.coeffs[:order])
    return Certificate(
        Verdict.UNSUPPORTED,
        Evidence(EvidenceKind.UNSUPPORTED_INPUT, detail=f"shift with alpha = {alpha} has two fixed points"),
        eq,
        order,
        prefix,
        series_prefix_hash(prefix),
    )


def recheck(certificate: Certificate, problem: FirstOrderProblem) -> bool:
    """Re-derive the verdict and, for rational verdicts, substitute the witness."""
    again = certify(problem)
    if again.verdict != certificate.verdict or again.evidence.kind != certificate.evidence.kind:
        return False
    if certificate.verdict is Verdict.RATIONAL:
        w = certificate.witness
        if w is None:
            return False
        if tau_apply(w, problem.shift) - problem.a * w - problem.f:
            return False
        return w.laurent_window(0, problem.order) == list(problem.w.coeffs[: problem.order])
    return True


def homogeneous_criterion(
    a: RatFun, shift: MoebiusShift, n_max: int | None = None
) -> TelescoperWitness | None:
    """Telescoper for the logarithmic derivative d(a)/a = t^2 a'/a."""
    if a.is_zero():
        raise PreconditionError("coefficient a must be nonzero")
    return telescoper_decide(partial_d(a) / a, shift, n_max)
