"""
Conversion between wire payloads and domain values.

Exact numbers leave as strings: Gaussian rationals as [re, im] pairs inside
rational functions and shifts, as plain "p/q" / "a+bi" strings inside
series and parameter polynomials.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Type, TypeVar

from pydantic import BaseModel, ValidationError

from core.arith.gauss import ONE, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.errors import TaucertError
from core.schemas.enums import ErrorCode
from core.schemas.messages import (
    CertificatePayload,
    EgfEquationPayload,
    EvidencePayload,
    LhsTerm,
    RatFunPayload,
    RationalResultPayload,
    ResidualReportPayload,
    RhsTerm,
    SeriesPayload,
    ShiftPayload,
    TauEquationPayload,
    TelescoperPayload,
)
from core.series.engine import Series
from core.services.certifier import Certificate
from core.services.egf_compiler import PARAM_VAR, U_VAR, EgfEquation, ExpMonomial
from core.services.summability import RationalSolutionSpace, TelescoperWitness
from core.tau.calculus import MoebiusShift
from core.tau.equation import ResidualReport, TauEquation

ModelT = TypeVar("ModelT", bound=BaseModel)


# -- scalars ------------------------------------------------------------------


def gauss_from_wire(value: Any) -> GaussRat:
    return GaussRat.coerce(value)


def gauss_to_wire(value: Any) -> list[str]:
    return GaussRat.coerce(value).to_pair()


def xpoly_from_wire(value: Any) -> Any:
    """Gaussian rational, or a Poly in x when the list has degree >= 1."""
    if isinstance(value, str):
        if value.strip() == PARAM_VAR:
            return Poly.gen(PARAM_VAR)
        return GaussRat.parse(value)
    poly = Poly((GaussRat.coerce(v) for v in value), PARAM_VAR)
    return poly if poly.degree() > 0 else poly.constant_value()


def xpoly_to_wire(value: Any) -> list[str]:
    if isinstance(value, Poly):
        return [str(c) for c in value.coeffs]
    return [str(value)] if value else []


# -- rational functions and series --------------------------------------------


def ratfun_from_payload(payload: RatFunPayload) -> RatFun:
    if not payload.den:
        raise TaucertError("rational function with an empty denominator", code=ErrorCode.INVALID_INPUT)
    num = Poly((gauss_from_wire(v) for v in payload.num), payload.var)
    den = Poly((gauss_from_wire(v) for v in payload.den), payload.var)
    return RatFun(num, den)


def ratfun_to_payload(f: RatFun) -> RatFunPayload:
    return RatFunPayload(
        var=f.var,
        num=[c.to_pair() for c in f.num.coeffs],
        den=[c.to_pair() for c in f.den.coeffs],
    )


def series_from_payload(payload: SeriesPayload) -> Series:
    coeffs = [xpoly_from_wire(c) for c in payload.coeffs]
    order = payload.order if payload.order is not None else len(coeffs)
    if order > len(coeffs):
        raise TaucertError(
            f"series declares order {order} but carries {len(coeffs)} coefficients",
            code=ErrorCode.INVALID_INPUT,
        )
    return Series(coeffs, order, payload.var, payload.param)


def series_to_payload(s: Series) -> SeriesPayload:
    return SeriesPayload(var=s.var, param=s.param, order=s.order, coeffs=[xpoly_to_wire(c) for c in s.coeffs])


def terms_to_wire(s: Series) -> list[str]:
    """Flat list of coefficient strings; symbolic coefficients print as x-polynomials."""
    return [str(c) for c in s.coeffs]


# -- shifts and equations -----------------------------------------------------


def shift_from_payload(payload: ShiftPayload) -> tuple[MoebiusShift, GaussRat]:
    return MoebiusShift(gauss_from_wire(payload.beta)), gauss_from_wire(payload.alpha)


def shift_to_payload(shift: MoebiusShift, alpha: GaussRat = ONE) -> ShiftPayload:
    return ShiftPayload(alpha=str(alpha), beta=shift.beta.to_pair())


def tau_equation_from_payload(payload: TauEquationPayload) -> tuple[TauEquation, GaussRat]:
    shift, alpha = shift_from_payload(payload.shift)
    coeffs = tuple(ratfun_from_payload(c) for c in payload.coeffs)
    return TauEquation(shift, coeffs, ratfun_from_payload(payload.rhs)), alpha


def tau_equation_to_payload(eq: TauEquation, alpha: GaussRat = ONE) -> TauEquationPayload:
    return TauEquationPayload(
        shift=shift_to_payload(eq.shift, alpha),
        coeffs=[ratfun_to_payload(c) for c in eq.coeffs],
        rhs=ratfun_to_payload(eq.rhs),
    )


def egf_equation_from_payload(payload: EgfEquationPayload) -> EgfEquation:
    if not payload.lhs:
        raise TaucertError("EGF equation without left-hand terms", code=ErrorCode.INVALID_INPUT)
    order = max(term.i for term in payload.lhs)
    lhs = [Poly((), U_VAR) for _ in range(order + 1)]
    for term in payload.lhs:
        lhs[term.i] = lhs[term.i] + Poly((xpoly_from_wire(c) for c in term.u_poly), U_VAR)
    rhs = tuple(
        ExpMonomial(term.m, xpoly_from_wire(term.rate) if isinstance(term.rate, str) else gauss_from_wire(term.rate),
                    xpoly_from_wire(term.coeff))
        for term in payload.rhs
    )
    init = tuple(xpoly_from_wire(v) for v in payload.init)
    return EgfEquation(gauss_from_wire(payload.lam), tuple(lhs), rhs, init)


def _rate_to_wire(rate: Any) -> Any:
    if isinstance(rate, Poly):
        if rate == Poly.gen(PARAM_VAR):
            return PARAM_VAR
        raise TaucertError("EGF rates must be constants or x", code=ErrorCode.INVALID_INPUT)
    return GaussRat.coerce(rate).to_pair()


def egf_equation_to_payload(eq: EgfEquation) -> EgfEquationPayload:
    return EgfEquationPayload(
        lam=eq.lam.to_pair(),
        lhs=[LhsTerm(i=i, u_poly=[xpoly_to_wire(c) for c in a.coeffs]) for i, a in enumerate(eq.lhs) if a],
        rhs=[RhsTerm(m=m.m, rate=_rate_to_wire(m.rate), coeff=xpoly_to_wire(m.coeff)) for m in eq.rhs],
        init=[xpoly_to_wire(v) for v in eq.init],
    )


# -- results ------------------------------------------------------------------


def certificate_to_payload(cert: Certificate, alpha: GaussRat = ONE) -> CertificatePayload:
    ev = cert.evidence
    return CertificatePayload(
        verdict=cert.verdict,
        equation=tau_equation_to_payload(cert.equation, alpha),
        evidence=EvidencePayload(
            kind=ev.kind,
            universal_denominator_degree=ev.universal_denominator_degree,
            poly_degree_bound=ev.poly_degree_bound,
            homogeneous_dimension=ev.homogeneous_dimension,
            comparison_order=ev.comparison_order,
            detail=ev.detail,
        ),
        series_prefix=[str(c) for c in cert.series_prefix],
        series_prefix_hash=cert.series_prefix_hash,
        order=cert.order,
        witness=ratfun_to_payload(cert.witness) if cert.witness is not None else None,
    )


def telescoper_to_payload(witness: TelescoperWitness | None, checked_n: int) -> TelescoperPayload:
    if witness is None:
        return TelescoperPayload(result="none", checked_n=checked_n)
    return TelescoperPayload(
        result="witness",
        checked_n=checked_n,
        n=witness.n,
        alphas=[str(a) for a in witness.alphas],
        g=ratfun_to_payload(witness.g),
    )


def witness_to_payload(g: RatFun | None) -> RationalResultPayload:
    if g is None:
        return RationalResultPayload(result="none")
    return RationalResultPayload(result="witness", witness=ratfun_to_payload(g))


def solution_space_to_payload(space: RationalSolutionSpace) -> RationalResultPayload:
    return RationalResultPayload(
        result="witness" if space.particular is not None else "none",
        witness=ratfun_to_payload(space.particular) if space.particular is not None else None,
        homogeneous=[ratfun_to_payload(z) for z in space.homogeneous],
        universal_denominator_degree=space.universal_denominator_degree,
        poly_degree_bound=space.poly_degree_bound,
    )


def residual_to_payload(report: ResidualReport) -> ResidualReportPayload:
    return ResidualReportPayload(
        status=report.status, order=report.order, first_failing_order=report.first_failing_order
    )


# -- files --------------------------------------------------------------------


def parse_payload(text: str, model: Type[ModelT]) -> ModelT:
    try:
        return model.model_validate_json(text)
    except ValidationError as exc:
        raise TaucertError(f"malformed {model.__name__}: {exc.errors()[0]['msg']}", code=ErrorCode.INVALID_INPUT) from exc


def load_payload(path: str | Path, model: Type[ModelT]) -> ModelT:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise TaucertError(f"cannot read {path}: {exc.strerror}", code=ErrorCode.INVALID_INPUT) from exc
    return parse_payload(text, model)
