"""
Acceptance suite: every check is a pure function returning (passed, detail).
Checks fan out over a thread pool through asyncio; the report carries no
timings so two runs serialize to identical JSON, timings are returned
separately for the stderr table.
"""

from __future__ import annotations

import asyncio
import logging
import random
import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.linalg import LinSystem, linsolve
from core.arith.ratfun import RatFun
from core.catalog.base import SYMBOLIC
from core.catalog.fam_appell import check_bernoulli_substitution
from core.catalog.registry import CatalogRegistry
from core.config import settings
from core.schemas.enums import ResidualStatus, Verdict
from core.schemas.messages import AcceptanceReport, CheckResult
from core.series.engine import Series, borel, phi_tau, tau_substitute
from core.services.certifier import FirstOrderProblem, certify, certify_equation
from core.services.egf_compiler import compile_equation, verify_compiled
from core.services.instances import (
    planted_first_order,
    planted_pole_chain,
    random_gauss,
    random_nonzero_gauss,
    random_orbit_remainder,
    random_split_ratfun,
)
from core.services.numeric_verify import check_asymptotic, check_closed_form, check_telescoping, trigamma
from core.services.summability import is_summable, rational_solution, rational_solutions, telescoper_decide
from core.tau.calculus import MoebiusShift, partial_d, same_orbit, tau_apply
from core.tau.equation import TauEquation

logger = logging.getLogger(__name__)

CheckFn = Callable[[], "tuple[bool, str]"]
UNIT = MoebiusShift(ONE)
ORDER = 64


@dataclass(frozen=True)
class AcceptanceCheck:
    name: str
    group: str
    run: CheckFn


@dataclass(frozen=True)
class AcceptanceOutcome:
    report: AcceptanceReport
    timings: tuple[tuple[str, float], ...]


def _rng(offset: int) -> random.Random:
    return random.Random(settings.PROPERTY_SEED + offset)


# -- catalog ------------------------------------------------------------------


def check_reference_prefixes() -> tuple[bool, str]:
    bad = []
    for entry in CatalogRegistry.list_entries():
        for ref, ok in entry.reference_check():
            if not ok:
                bad.append(f"{entry.name} {dict(ref.params)}")
    return not bad, "; ".join(bad) or "all reference prefixes match"


def check_entry_equations() -> tuple[bool, str]:
    bad = []
    for entry in CatalogRegistry.list_entries():
        specs = [dict(p) for p in entry.default_params] or [{}]
        for params in specs:
            if entry.verify(params, ORDER).status is not ResidualStatus.EXACT:
                bad.append(f"{entry.name} {params}")
        if entry.supports_symbolic:
            params = {"x": SYMBOLIC, **({"gamma": specs[0]["gamma"]} if entry.needs_gamma else {})}
            if entry.verify(params, settings.SYMBOLIC_VERIFY_ORDER).status is not ResidualStatus.EXACT:
                bad.append(f"{entry.name} symbolic")
    return not bad, "; ".join(bad) or "every stored equation is exact"


def check_bernoulli_identity() -> tuple[bool, str]:
    report = check_bernoulli_substitution(settings.SYMBOLIC_VERIFY_ORDER)
    return report.status is ResidualStatus.EXACT, f"first failing order {report.first_failing_order}"


# -- compiler -----------------------------------------------------------------


def check_compiler_reference_forms() -> tuple[bool, str]:
    t = RatFun.gen()
    bell = CatalogRegistry.get_entry("bell-touchard")
    want_bell = TauEquation.first_order_form(UNIT, t, RatFun.const(ONE)).canonical()
    graph = CatalogRegistry.get_entry("graph-a060311")
    bernoulli = CatalogRegistry.get_entry("bernoulli")
    cases = [
        ("bell", compile_equation(bell.compiler_input({"x": 1})), want_bell),
        ("graph", compile_equation(graph.compiler_input({})), graph.equation({}).canonical()),
        ("bernoulli", compile_equation(bernoulli.compiler_input({"x": 2})), bernoulli.equation({"x": 2}).canonical()),
    ]
    bad = [name for name, got, want in cases if got != want]
    return not bad, "; ".join(bad) or "compiled forms match the stored equations"


def check_compiled_residuals() -> tuple[bool, str]:
    bad = []
    for entry in CatalogRegistry.list_entries():
        params = dict(entry.default_params[0]) if entry.default_params else {}
        egf = entry.compiler_input(params)
        compiled = compile_equation(egf)
        if compiled != entry.equation(params).canonical():
            bad.append(f"{entry.name}: compiled form differs")
        elif verify_compiled(egf, compiled, ORDER).status is not ResidualStatus.EXACT:
            bad.append(f"{entry.name}: residual")
    return not bad, "; ".join(bad) or "all compiled equations exact to order 64"


# -- summability --------------------------------------------------------------


def check_telescoper_negatives() -> tuple[bool, str]:
    t = RatFun.gen()
    cases = [("f = t", t, 5)]
    for x in (2, 3):
        base = RatFun(t.num, RatFun.from_lists([1, 1 - x]).num)
        cases.append((f"(t/(1+t-tx))^2 at x={x}", base ** 2, 6))
    bad = [name for name, f, n_max in cases if telescoper_decide(f, UNIT, n_max) is not None]
    return not bad, "; ".join(bad) or "no telescopers, as claimed"


def check_summability_roundtrip() -> tuple[bool, str]:
    rng = _rng(1)
    for k in range(100):
        g = random_split_ratfun(rng)
        w = is_summable(tau_apply(g, UNIT) - g, UNIT)
        if w is None or not (w - g).is_constant():
            return False, f"constructed instance {k} not recovered: g = {g}"
    for k in range(100):
        f = random_orbit_remainder(rng, UNIT)
        if is_summable(f, UNIT) is not None:
            return False, f"remainder instance {k} wrongly summable: {f}"
    return True, "100 constructed recovered, 100 remainders rejected"


def rational_fit(series: Series, num_degree: int, den_degree: int) -> RatFun | None:
    """Brute-force N/D with D(0) = 1 matching the series on all its coefficients."""
    n = series.order
    cols = num_degree + 1 + den_degree
    matrix, rhs = [], []
    for m in range(n):
        row = [ONE if m == j else ZERO for j in range(num_degree + 1)]
        # N_m - sum_{j>=1} D_j y_{m-j} = y_m
        row += [-series[m - j] if m - j >= 0 else ZERO for j in range(1, den_degree + 1)]
        matrix.append(row)
        rhs.append(series[m])
    solution = linsolve(LinSystem.build(matrix, rhs, cols=cols))
    if solution is None:
        return None
    num = list(solution.particular[: num_degree + 1])
    den = [ONE] + list(solution.particular[num_degree + 1:])
    return RatFun.from_lists(num, den)


def check_rational_solutions() -> tuple[bool, str]:
    rng = _rng(2)
    for k in range(35):
        a, f, _ = planted_first_order(rng, UNIT)
        g = rational_solution(a, f, UNIT)
        if g is None or tau_apply(g, UNIT) - a * g - f:
            return False, f"planted instance {k} not solved"
    for k in range(15):
        a, f, _ = planted_pole_chain(rng, UNIT)
        space = rational_solutions(a, f, UNIT)
        g = space.particular
        if g is None or tau_apply(g, UNIT) - a * g - f:
            return False, f"pole-chain instance {k} not solved"
        if not space.homogeneous or any(tau_apply(z, UNIT) - a * z for z in space.homogeneous):
            return False, f"pole-chain instance {k} lost its homogeneous solution"
    for name, params in (("bell-touchard", {"x": 1}), ("bernoulli-numbers", {})):
        entry = CatalogRegistry.get_entry(name)
        a, f = entry.equation(params).first_order()
        if rational_solution(a, f, UNIT) is not None:
            return False, f"{name} has an unexpected rational solution"
        series = entry.build_ogf(params, 30)
        for dn in range(11):
            for dd in range(11):
                if rational_fit(series, dn, dd) is not None:
                    return False, f"{name} fits a rational function of degrees ({dn}, {dd})"
    return True, "35 planted and 15 pole-chain instances solved; Bell and Bernoulli numbers have none"


# -- certification ------------------------------------------------------------

TRANSCENDENTAL_CASES = (
    ("bell-touchard", {"x": 1}),
    ("bell-touchard", {"x": -1}),
    ("bell-touchard", {"x": 2}),
    ("mahler", {"x": -1}),
    ("genocchi", {"x": 1}),
    ("fubini", {"x": 1}),
    ("bernoulli", {"x": 2}),
    ("tangent", {}),
    ("alternating", {}),
    ("springer", {}),
)


def check_certify_catalog() -> tuple[bool, str]:
    bad = []
    for name, params in TRANSCENDENTAL_CASES:
        entry = CatalogRegistry.get_entry(name)
        cert = certify_equation(entry.equation(params), entry.build_ogf(params, ORDER), ORDER)
        if cert.verdict is not Verdict.STRONGLY_D_TRANSCENDENTAL:
            bad.append(f"{name} {params}: {cert.verdict.value}")
    return not bad, "; ".join(bad) or "all strongly differentially transcendental"


def check_certify_rational() -> tuple[bool, str]:
    rng = _rng(3)
    for k in range(10):
        a, f, g = planted_first_order(rng, UNIT) if k % 2 else planted_pole_chain(rng, UNIT)
        cert = certify(FirstOrderProblem(UNIT, a, f, Series.from_ratfun(g, ORDER), ORDER))
        if cert.verdict is not Verdict.RATIONAL or cert.witness != g:
            return False, f"planted problem {k}: {cert.verdict.value}"
    return True, "10 rational witnesses recovered"


# -- numerics -----------------------------------------------------------------


def check_numeric() -> tuple[bool, str]:
    grid = np.linspace(0.25, 5.0, 20)
    recurrence = float(np.max(np.abs(trigamma(grid) - trigamma(grid + 1.0) - 1.0 / grid**2)))
    closed = max(check_closed_form(x, (0.1, 0.05, 0.02)).max_residual for x in (0.0, 2.0))
    telescoping = check_telescoping(0.0, 0.1, 10).residual
    asymptotic = check_asymptotic(3)
    passed = recurrence < 1e-12 and closed < 1e-10 and telescoping < 1e-10 and asymptotic.passed
    detail = (
        f"recurrence {recurrence:.2e}, closed form {closed:.2e}, "
        f"telescoping {telescoping:.2e}, asymptotic ratio {asymptotic.ratios[0]:.1f}"
    )
    return passed, detail


# -- operator algebra ---------------------------------------------------------


def check_operator_laws() -> tuple[bool, str]:
    rng = _rng(4)
    for k in range(50):
        shift = MoebiusShift(random_nonzero_gauss(rng, 2))
        f, g = random_split_ratfun(rng, 3, 2), random_split_ratfun(rng, 3, 2)
        if tau_apply(partial_d(f), shift) != partial_d(tau_apply(f, shift)):
            return False, f"tau and d do not commute on instance {k}"
        if tau_apply(f * g, shift) != tau_apply(f, shift) * tau_apply(g, shift):
            return False, f"tau not multiplicative on instance {k}"
        if tau_apply(f + g, shift) != tau_apply(f, shift) + tau_apply(g, shift):
            return False, f"tau not additive on instance {k}"
        series = Series([random_nonzero_gauss(rng) for _ in range(12)], 12)
        if borel(phi_tau(series)) != borel(series) * Series.exp_linear(ONE, 12):
            return False, f"Borel image of Phi is not multiplication by e^t on instance {k}"
        if tau_substitute(Series.from_ratfun(f, 12), shift.beta) != Series.from_ratfun(tau_apply(f, shift), 12):
            return False, f"series and rational tau disagree on instance {k}"
        # frame positions with a denominator of 7 never reach s = 0
        sp = random_gauss(rng) + GaussRat(Fraction(1, 7))
        m1, m2 = rng.randint(-3, 3), rng.randint(-3, 3)
        p, q, r = (1 / (shift.beta * (sp + m)) for m in (0, m1, m1 + m2))
        pq, qr, pr = same_orbit(p, q, shift), same_orbit(q, r, shift), same_orbit(p, r, shift)
        if same_orbit(p, p, shift) != 0 or pq is None or same_orbit(q, p, shift) != -pq or pr != pq + qr:
            return False, f"orbit relation laws fail on instance {k}"
    return True, "50 instances per law"


def build_checks() -> list[AcceptanceCheck]:
    return [
        AcceptanceCheck("reference-prefixes", "catalog", check_reference_prefixes),
        AcceptanceCheck("entry-equations", "catalog", check_entry_equations),
        AcceptanceCheck("bernoulli-substitution", "catalog", check_bernoulli_identity),
        AcceptanceCheck("compiler-reference-forms", "compiler", check_compiler_reference_forms),
        AcceptanceCheck("compiled-residuals", "compiler", check_compiled_residuals),
        AcceptanceCheck("telescoper-negatives", "summability", check_telescoper_negatives),
        AcceptanceCheck("summability-roundtrip", "summability", check_summability_roundtrip),
        AcceptanceCheck("rational-solutions", "summability", check_rational_solutions),
        AcceptanceCheck("certify-catalog", "certify", check_certify_catalog),
        AcceptanceCheck("certify-rational", "certify", check_certify_rational),
        AcceptanceCheck("numeric", "numeric", check_numeric),
        AcceptanceCheck("operator-laws", "operators", check_operator_laws),
    ]


def _matches(check: AcceptanceCheck, pattern: str | None) -> bool:
    return pattern is None or pattern in check.group or pattern in check.name


def _execute(check: AcceptanceCheck) -> tuple[CheckResult, float]:
    start = time.perf_counter()
    try:
        passed, detail = check.run()
    except Exception as exc:
        logger.exception("acceptance check %s raised", check.name)
        passed, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    logger.info("acceptance %s: %s (%.2fs)", check.name, "pass" if passed else "FAIL", elapsed)
    return CheckResult(name=check.name, group=check.group, passed=passed, detail=detail), elapsed


async def _run_all(checks: list[AcceptanceCheck], workers: int) -> list[tuple[CheckResult, float]]:
    semaphore = asyncio.Semaphore(max(1, workers))

    async def run_one(check: AcceptanceCheck) -> tuple[CheckResult, float]:
        async with semaphore:
            return await asyncio.to_thread(_execute, check)

    return await asyncio.gather(*(run_one(c) for c in checks))


def run_acceptance_suite(pattern: str | None = None, workers: int | None = None) -> AcceptanceOutcome:
    checks = [c for c in build_checks() if _matches(c, pattern)]
    results = asyncio.run(_run_all(checks, workers or settings.ACCEPTANCE_WORKERS))
    rows = [r for r, _ in results]
    failed = sum(1 for r in rows if not r.passed)
    report = AcceptanceReport(passed=failed == 0, total=len(rows), failed=failed, checks=rows)
    timings = tuple((r.name, elapsed) for r, elapsed in results)
    return AcceptanceOutcome(report, timings)
