"""
Decision procedures in the shift frame s = 1/(beta*t), where tau_beta acts
as the unit shift sigma: s -> s+1.

- summable_decompose: F = sigma(G) - G + Rem with Rem reduced to one pole
  per orbit and order (the orbit representative) carrying the orbit sum.
- is_summable / telescoper_decide: rational summability of h, and the
  search for constants alpha_i with sum alpha_i d^i(f) = tau(g) - g.
- rational_solutions: rational solutions of tau(g) = a*g + f via the
  universal denominator and a bounded polynomial solve.
"""

from __future__ import annotations

import logging
from collections import defaultdict
from dataclasses import dataclass, field

from sympy.polys.dispersion import dispersionset

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.linalg import LinSystem, linsolve
from core.arith.partial_fractions import PartialFractions, PoleTerm, partial_fractions, reassemble
from core.arith.poly import Poly
from core.arith.ratfun import RatFun, ratfun_normalize
from core.config import settings
from core.errors import PreconditionError
from core.tau.calculus import (
    FRAME_VAR,
    MoebiusShift,
    from_shift_frame,
    orbit_representative,
    partial_d,
    to_shift_frame,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OrbitMember:
    offset: int
    order: int
    coeff: GaussRat


@dataclass(frozen=True)
class Orbit:
    representative: GaussRat
    members: tuple[OrbitMember, ...]

    def orbit_sums(self) -> dict[int, GaussRat]:
        sums: dict[int, GaussRat] = defaultdict(lambda: ZERO)
        for m in self.members:
            sums[m.order] = sums[m.order] + m.coeff
        return dict(sums)


@dataclass(frozen=True)
class OrbitDecomposition:
    polynomial_part: Poly
    orbits: tuple[Orbit, ...]

    def reassemble(self) -> RatFun:
        terms = tuple(
            PoleTerm(orbit.representative + m.offset, m.order, m.coeff)
            for orbit in self.orbits
            for m in orbit.members
        )
        return reassemble(PartialFractions(self.polynomial_part, terms))


@dataclass(frozen=True)
class TelescoperWitness:
    n: int
    alphas: tuple[GaussRat, ...]
    g: RatFun


@dataclass(frozen=True)
class RationalSolutionSpace:
    """All rational solutions: particular + c * homogeneous[0] (+ ...)."""

    particular: RatFun | None
    homogeneous: tuple[RatFun, ...] = field(default_factory=tuple)
    universal_denominator_degree: int = 0
    poly_degree_bound: int = -1


# -- polynomial parts ---------------------------------------------------------


def falling_factorial(k: int, var: str = FRAME_VAR) -> Poly:
    out = Poly((ONE,), var)
    for j in range(k):
        out = out * Poly((GaussRat(-j), ONE), var)
    return out


def discrete_antiderivative(p: Poly) -> Poly:
    """Q with Q(s+1) - Q(s) = p(s) and Q(0) = 0, built in the falling-factorial basis."""
    rest = p
    out = Poly((), p.var)
    while rest:
        d = rest.degree()
        c = rest.lc()
        out = out + falling_factorial(d + 1, p.var) * (c / (d + 1))
        rest = rest - falling_factorial(d, p.var) * c
    return out


# -- orbit reduction ----------------------------------------------------------


def orbit_decomposition(F: RatFun) -> OrbitDecomposition:
    pf = partial_fractions(F)
    grouped: dict[GaussRat, list[OrbitMember]] = defaultdict(list)
    for term in pf.terms:
        rep, k = orbit_representative(term.pole)
        grouped[rep].append(OrbitMember(k, term.order, term.coeff))
    orbits = tuple(
        Orbit(rep, tuple(sorted(members, key=lambda m: (m.offset, m.order))))
        for rep, members in sorted(grouped.items(), key=lambda item: (item[0].re, item[0].im))
    )
    return OrbitDecomposition(pf.polynomial_part, orbits)


def summable_decompose(F: RatFun) -> tuple[RatFun, RatFun]:
    """(G, Rem) with F = sigma(G) - G + Rem."""
    var = F.var
    decomposition = orbit_decomposition(F)
    g_terms: dict[tuple[GaussRat, int], GaussRat] = defaultdict(lambda: ZERO)
    rem_terms: list[PoleTerm] = []
    for orbit in decomposition.orbits:
        r0 = orbit.representative
        for m in orbit.members:
            if m.offset > 0:
                # pole r0+k telescopes down to r0 through r0+k-1, ..., r0+1
                for i in range(1, m.offset + 1):
                    g_terms[(r0 + i, m.order)] = g_terms[(r0 + i, m.order)] - m.coeff
            elif m.offset < 0:
                for i in range(-m.offset):
                    g_terms[(r0 - i, m.order)] = g_terms[(r0 - i, m.order)] + m.coeff
        for order, total in sorted(orbit.orbit_sums().items()):
            logger.debug("orbit %s order %d sum %s", r0, order, total)
            if total:
                rem_terms.append(PoleTerm(r0, order, total))
    g_poly = discrete_antiderivative(decomposition.polynomial_part.with_var(var))
    g_pf = PartialFractions(
        g_poly,
        tuple(PoleTerm(pole, order, c) for (pole, order), c in g_terms.items() if c),
    )
    rem_pf = PartialFractions(Poly((), var), tuple(rem_terms))
    return reassemble(g_pf), reassemble(rem_pf)


def is_summable(h: RatFun, shift: MoebiusShift) -> RatFun | None:
    """g with tau(g) - g = h, or None."""
    H = to_shift_frame(h, shift)
    G, rem = summable_decompose(H)
    if rem:
        logger.debug("not summable, remainder %s", rem)
        return None
    return from_shift_frame(G, shift, h.var)


# -- telescopers --------------------------------------------------------------


def _rising(j: int, i: int) -> int:
    out = 1
    for k in range(i):
        out *= j + k
    return out


def telescoper_decide(f: RatFun, shift: MoebiusShift, n_max: int | None = None) -> TelescoperWitness | None:
    """First n <= n_max admitting constants alpha_0..alpha_n, not all zero, with
    sum alpha_i d^i(f) = tau(g) - g for a rational g."""
    n_max = settings.TELESCOPER_NMAX if n_max is None else n_max
    if n_max < 0:
        raise PreconditionError("n_max must be nonnegative")
    if f.is_zero():
        return TelescoperWitness(0, (ONE,), RatFun.const(ZERO, f.var))
    decomposition = orbit_decomposition(to_shift_frame(f, shift))
    for n in range(n_max + 1):
        # rows indexed by (orbit, order); column i holds the orbit sum of (-d/ds)^i F
        rows: dict[tuple[int, int], list[GaussRat]] = {}
        for idx, orbit in enumerate(decomposition.orbits):
            for m in orbit.members:
                for i in range(n + 1):
                    key = (idx, m.order + i)
                    row = rows.setdefault(key, [ZERO] * (n + 1))
                    row[i] = row[i] + m.coeff * _rising(m.order, i)
        matrix = [row for _, row in sorted(rows.items())]
        solution = linsolve(LinSystem.build(matrix, cols=n + 1))
        if solution is None or not solution.kernel:
            logger.debug("no telescoper of order %d", n)
            continue
        gammas = solution.kernel[0]
        lead = next(c for c in gammas if c)
        gammas = tuple(c / lead for c in gammas)
        alphas = tuple(c * shift.beta ** i for i, c in enumerate(gammas))
        combined = RatFun.const(ZERO, f.var)
        for i, alpha in enumerate(alphas):
            if alpha:
                combined = combined + partial_d(f, i) * alpha
        g = is_summable(combined, shift)
        if g is None:
            raise ArithmeticError("telescoper combination failed to sum")
        logger.info("telescoper found at order %d", n)
        return TelescoperWitness(n, alphas, g)
    return None


# -- rational solutions of tau(g) = a*g + f ------------------------------------


def dispersion_set(A: Poly, B: Poly) -> list[int]:
    """Nonnegative k with gcd(A(s), B(s+k)) nontrivial, ascending."""
    if A.degree() <= 0 or B.degree() <= 0:
        return []
    return sorted(int(k) for k in dispersionset(A.to_sympy(), B.to_sympy()))


def universal_denominator(A: Poly, B: Poly) -> Poly:
    """Abramov's universal denominator for p1(s) G(s+1) + p0(s) G(s) = q with A = p1(s-1), B = p0."""
    U = Poly((ONE,), A.var)
    spread = dispersion_set(A, B)
    logger.debug("dispersion set %s", spread)
    if not spread:
        return U
    for i in range(spread[-1], -1, -1):
        d = A.gcd(B.taylor_shift(i))
        if d.degree() <= 0:
            continue
        A = A.exact_div(d)
        B = B.exact_div(d.taylor_shift(-i))
        for j in range(i + 1):
            U = U * d.taylor_shift(-j)
    return U


def _degree_bound(b1: Poly, b0: Poly, c: Poly) -> int:
    """Degree bound for P in b1 (P(s+1) - P(s)) + b0 P(s) = c."""
    db1, db0, dc = b1.degree(), b0.degree(), c.degree()
    if db0 >= db1:
        return dc - db0
    if db0 < db1 - 1:
        return dc - db1 + 1
    bound = dc - db1 + 1
    root = -b0.lc() / b1.lc()
    if root.is_real and root.re.denominator == 1 and root.re >= 0:
        bound = max(bound, int(root.re))
    return bound


def rational_solutions(a: RatFun, f: RatFun, shift: MoebiusShift) -> RationalSolutionSpace:
    if a.is_zero():
        raise PreconditionError("coefficient a must be nonzero")
    A = to_shift_frame(a, shift)
    C = to_shift_frame(f, shift)
    L = (A.den * C.den).exact_div(A.den.gcd(C.den))
    p1 = L
    p0 = -(L * A.num).exact_div(A.den)
    q = (L * C.num).exact_div(C.den)

    U = universal_denominator(p1.taylor_shift(-1), p0)
    U_next = U.taylor_shift(1)
    a1 = p1 * U
    a0 = p0 * U_next
    c = q * U * U_next
    common = a1.gcd(a0)
    if c:
        common = common.gcd(c)
    if common.degree() > 0:
        a1, a0, c = a1.exact_div(common), a0.exact_div(common), c.exact_div(common)

    bound = _degree_bound(a1, a1 + a0, c)
    logger.debug("universal denominator degree %d, numerator degree bound %d", U.degree(), bound)
    if bound < 0:
        particular = RatFun.const(ZERO, f.var) if not c else None
        return RationalSolutionSpace(particular, (), U.degree(), bound)

    columns = []
    shifted = Poly((ONE, ONE), FRAME_VAR)
    for j in range(bound + 1):
        mono = Poly.monomial(ONE, j, FRAME_VAR)
        columns.append(a1 * (shifted ** j) + a0 * mono)
    height = max([col.degree() for col in columns] + [c.degree(), 0]) + 1
    matrix = [[col.coeff(r) for col in columns] for r in range(height)]
    rhs = [c.coeff(r) for r in range(height)]
    solution = linsolve(LinSystem.build(matrix, rhs, cols=bound + 1))

    def to_t(coeffs: tuple[GaussRat, ...]) -> RatFun:
        G = ratfun_normalize(Poly(coeffs, FRAME_VAR), U)
        return from_shift_frame(G, shift, f.var)

    if solution is None:
        homogeneous_only = linsolve(LinSystem.build(matrix, [ZERO] * height, cols=bound + 1))
        kernel = homogeneous_only.kernel if homogeneous_only else ()
        return RationalSolutionSpace(None, tuple(to_t(k) for k in kernel), U.degree(), bound)
    return RationalSolutionSpace(
        to_t(solution.particular),
        tuple(to_t(k) for k in solution.kernel),
        U.degree(),
        bound,
    )


def rational_solution(a: RatFun, f: RatFun, shift: MoebiusShift) -> RatFun | None:
    return rational_solutions(a, f, shift).particular
