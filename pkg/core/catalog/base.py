"""
Catalog entries: generating functions with a stored tau-equation.

Every entry builds its EGF from series primitives, stores the tau-equation
its OGF satisfies as a template over Q(i)[x] (t-polynomials whose
coefficients are Gaussian rationals or x-polynomials), and carries the
exponential differential equation the compiler turns into the same
tau-equation. Parameters travel as a dict with keys "x" and "gamma"; x may
be the string "symbolic" where the entry supports it.
"""

from __future__ import annotations

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Mapping

from core.arith.gauss import ONE, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.arith.roots import gaussian_roots
from core.errors import PreconditionError, SingularParameterError, TaucertError
from core.schemas.enums import ErrorCode
from core.series.engine import Series, inverse_borel, tau_power_substitute
from core.services.egf_compiler import PARAM_VAR, EgfEquation
from core.tau.calculus import MoebiusShift
from core.tau.equation import ResidualReport, TauEquation

logger = logging.getLogger(__name__)

SYMBOLIC = "symbolic"
X = Poly.gen(PARAM_VAR)


def t_poly(*coeffs: Any) -> Poly:
    """t-polynomial from coefficients of increasing degree (scalars or x-polynomials)."""
    return Poly(coeffs, "t")


T_ONE = t_poly(ONE)


@dataclass(frozen=True)
class TemplateTerm:
    """num/den with t-polynomial entries over Q(i)[x]; no cancellation is attempted."""

    num: Poly
    den: Poly = T_ONE

    def specialize(self) -> RatFun:
        return RatFun(self.num, self.den)


@dataclass(frozen=True)
class EquationTemplate:
    """sum_k coeffs[k] * tau^k(F) = rhs."""

    coeffs: tuple[TemplateTerm, ...]
    rhs: TemplateTerm

    @classmethod
    def first_order(cls, R: TemplateTerm, S: TemplateTerm) -> "EquationTemplate":
        """tau(F) = R*F + S."""
        return cls((TemplateTerm(-R.num, R.den), TemplateTerm(T_ONE)), S)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def denominators(self) -> list[Poly]:
        return [c.den for c in self.coeffs] + [self.rhs.den]

    def cleared(self) -> tuple[list[Poly], Poly]:
        """Multiply through by the product of all denominators (ring operations only)."""
        dens = self.denominators()
        cofactors = []
        for k in range(len(dens)):
            prod = T_ONE
            for j, d in enumerate(dens):
                if j != k:
                    prod = prod * d
            cofactors.append(prod)
        coeffs = [c.num * cofactors[k] for k, c in enumerate(self.coeffs)]
        return coeffs, self.rhs.num * cofactors[-1]


@dataclass(frozen=True)
class Params:
    x: Any = None
    gamma: GaussRat | None = None

    @property
    def symbolic(self) -> bool:
        return isinstance(self.x, Poly)

    def as_dict(self) -> dict[str, str]:
        out = {}
        if self.x is not None:
            out["x"] = SYMBOLIC if self.symbolic else str(self.x)
        if self.gamma is not None:
            out["gamma"] = str(self.gamma)
        return out


@dataclass(frozen=True)
class ReferenceTerms:
    params: Mapping[str, Any]
    prefix: tuple[str, ...]
    source: str = ""

    def values(self) -> list[GaussRat]:
        return [GaussRat.parse(v) for v in self.prefix]


@dataclass(frozen=True)
class LociReport:
    singular: tuple[GaussRat, ...] = field(default_factory=tuple)
    degenerate: tuple[GaussRat, ...] = field(default_factory=tuple)
    gamma_singular: tuple[GaussRat, ...] = field(default_factory=tuple)


def _x_poly(c: Any) -> Poly:
    return c if isinstance(c, Poly) else Poly((c,), PARAM_VAR)


def x_content(p: Poly) -> Poly:
    """gcd of the coefficients of a t-polynomial, as a monic x-polynomial."""
    content = Poly((), PARAM_VAR)
    for c in p.coeffs:
        if c:
            content = _x_poly(c) if not content else content.gcd(_x_poly(c))
    return content.monic() if content else Poly((ONE,), PARAM_VAR)


def x_loci(polys: list[Poly]) -> list[GaussRat]:
    roots: set[GaussRat] = set()
    for p in polys:
        content = x_content(p)
        if content.degree() > 0:
            roots.update(r for r, _ in gaussian_roots(content))
    return sorted(roots, key=lambda z: (z.re, z.im))


class CatalogEntry(ABC):
    """
    Interface every catalog family implements. Subclasses supply the EGF
    builder, the stored tau-equation template and the EGF differential
    equation; validation, specialization and verification live here.
    """

    title: str = ""
    provenance: str = ""
    beta: GaussRat = ONE
    needs_x: bool = True
    needs_gamma: bool = False
    gamma_loci: tuple[GaussRat, ...] = ()
    default_params: tuple[Mapping[str, Any], ...] = ()
    references: tuple[ReferenceTerms, ...] = ()

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def egf(self, p: Params, order: int) -> Series:
        """EGF series to the given order."""

    @abstractmethod
    def template(self, p: Params) -> EquationTemplate:
        """Stored tau-equation with x a Gaussian rational or the x-polynomial generator."""

    @abstractmethod
    def egf_equation(self, p: Params) -> EgfEquation:
        """Exponential differential equation satisfied by the EGF."""

    # -- parameters -------------------------------------------------------

    @property
    def shift(self) -> MoebiusShift:
        return MoebiusShift(self.beta)

    @property
    def supports_symbolic(self) -> bool:
        return self.needs_x

    @property
    def param_names(self) -> tuple[str, ...]:
        return tuple(n for n, used in (("x", self.needs_x), ("gamma", self.needs_gamma)) if used)

    def resolve(self, params: Mapping[str, Any] | None) -> Params:
        params = dict(params or {})
        unknown = set(params) - set(self.param_names)
        if unknown:
            raise TaucertError(
                f"entry {self.name} takes parameters {list(self.param_names)}, got {sorted(unknown)}",
                code=ErrorCode.INVALID_INPUT,
            )
        x = None
        if self.needs_x:
            if "x" not in params:
                raise TaucertError(f"entry {self.name} needs a value for x", code=ErrorCode.INVALID_INPUT)
            raw = params["x"]
            if isinstance(raw, Poly) or raw == SYMBOLIC:
                x = X
            else:
                x = GaussRat.coerce(raw)
        gamma = None
        if self.needs_gamma:
            if "gamma" not in params:
                raise TaucertError(f"entry {self.name} needs a value for gamma", code=ErrorCode.INVALID_INPUT)
            if params["gamma"] == SYMBOLIC:
                raise TaucertError("gamma must be specialized", code=ErrorCode.INVALID_INPUT)
            gamma = GaussRat.coerce(params["gamma"])
        p = Params(x, gamma)
        self._check_loci(p)
        return p

    def _check_loci(self, p: Params) -> None:
        if p.gamma is not None and p.gamma in self.gamma_loci:
            raise SingularParameterError(f"singular parameter: {self.name} at gamma = {p.gamma}")
        if p.x is None or p.symbolic:
            return
        loci = self.singular_loci(p.gamma)
        if p.x in loci.singular:
            raise SingularParameterError(f"singular parameter: {self.name} at x = {p.x}")
        if p.x in loci.degenerate:
            logger.warning("%s at x = %s lies on a degenerate locus", self.name, p.x)

    def singular_loci(self, gamma: Any = None) -> LociReport:
        """x-loci found from the symbolic template; gamma must be fixed for gamma-entries."""
        gamma_value = None
        if self.needs_gamma:
            gamma_value = GaussRat.coerce(gamma if gamma is not None else self._first_default("gamma"))
        if not self.needs_x:
            return LociReport(gamma_singular=tuple(self.gamma_loci))
        template = self.template(Params(X, gamma_value))
        singular = x_loci(template.denominators())
        degenerate = [z for z in x_loci([template.rhs.num]) if z not in singular]
        logger.debug("%s loci: singular %s, degenerate %s", self.name, singular, degenerate)
        return LociReport(tuple(singular), tuple(degenerate), tuple(self.gamma_loci))

    def _first_default(self, key: str) -> Any:
        for spec in self.default_params:
            if key in spec:
                return spec[key]
        raise PreconditionError(f"entry {self.name} has no default for {key}")

    # -- operations -------------------------------------------------------

    def build_ogf(self, params: Mapping[str, Any] | None, order: int) -> Series:
        p = self.resolve(params)
        return inverse_borel(self.egf(p, order))

    def equation(self, params: Mapping[str, Any] | None) -> TauEquation:
        p = self.resolve(params)
        if p.symbolic:
            raise TaucertError(
                "a tau-equation over Q(i)(t) needs x specialized", code=ErrorCode.INVALID_INPUT
            )
        template = self.template(p)
        return TauEquation(
            self.shift,
            tuple(c.specialize() for c in template.coeffs),
            template.rhs.specialize(),
        )

    def compiler_input(self, params: Mapping[str, Any] | None) -> EgfEquation:
        return self.egf_equation(self.resolve(params))

    def verify(self, params: Mapping[str, Any] | None, order: int) -> ResidualReport:
        """Substitute the OGF into the stored equation, exactly, to the given order."""
        p = self.resolve(params)
        y = inverse_borel(self.egf(p, order))
        coeffs, rhs = self.template(p).cleared()
        residual = Series.from_poly(rhs, order) * (-1)
        for k, b in enumerate(coeffs):
            if b:
                residual = residual + tau_power_substitute(y, self.beta, k) * b
        failing = next((n for n, c in enumerate(residual.coeffs) if c), None)
        report = ResidualReport.from_residual(failing, order)
        logger.info("verified %s %s: %s", self.name, p.as_dict(), report.status.value)
        return report

    def reference_check(self) -> list[tuple[ReferenceTerms, bool]]:
        out = []
        for ref in self.references:
            want = ref.values()
            got = self.build_ogf(ref.params, len(want))
            out.append((ref, list(got.coeffs) == want))
        return out

    def metadata(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "title": self.title,
            "provenance": self.provenance,
            "parameters": list(self.param_names),
            "symbolic_x": self.supports_symbolic,
            "beta": str(self.beta),
            "order": self.template(self._sample_params()).order,
        }

    def _sample_params(self) -> Params:
        spec = self.default_params[0] if self.default_params else {}
        return Params(
            X if self.needs_x else None,
            GaussRat.coerce(spec["gamma"]) if self.needs_gamma else None,
        )
