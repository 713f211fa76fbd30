"""
Random exact instances for the property suites. Every generator takes a
random.Random so runs seeded from settings.PROPERTY_SEED are reproducible.
"""

from __future__ import annotations

import random
from fractions import Fraction

from core.arith.gauss import ONE, ZERO, GaussRat
from core.arith.poly import Poly
from core.arith.ratfun import RatFun
from core.tau.calculus import FRAME_VAR, MoebiusShift, from_shift_frame, tau_apply


def random_gauss(rng: random.Random, height: int = 4, imaginary: bool = True) -> GaussRat:
    re = Fraction(rng.randint(-height, height), rng.choice((1, 2, 3)))
    im = Fraction(rng.randint(-height, height), rng.choice((1, 2))) if imaginary and rng.random() < 0.3 else 0
    return GaussRat(re, im)


def random_nonzero_gauss(rng: random.Random, height: int = 4, imaginary: bool = True) -> GaussRat:
    while True:
        z = random_gauss(rng, height, imaginary)
        if z:
            return z


def random_poly(rng: random.Random, degree: int, var: str = "t") -> Poly:
    coeffs = [random_gauss(rng) for _ in range(degree)] + [random_nonzero_gauss(rng)]
    return Poly(coeffs, var)


def random_split_poly(rng: random.Random, roots: int, var: str = "t") -> Poly:
    """Monic product of linear factors with nonzero Gaussian rational roots."""
    out = Poly((ONE,), var)
    for _ in range(roots):
        out = out * Poly((-random_nonzero_gauss(rng), ONE), var)
    return out


def random_split_ratfun(rng: random.Random, num_degree: int = 4, roots: int = 3, var: str = "t") -> RatFun:
    """Rational function with a split denominator and no pole at 0."""
    return RatFun(random_poly(rng, rng.randint(0, num_degree), var), random_split_poly(rng, rng.randint(1, roots), var))


def random_orbit_remainder(rng: random.Random, shift: MoebiusShift, poles: int = 3) -> RatFun:
    """
    F(t) whose frame image is sum c_j/(s - r_j)^k_j with distinct orbit
    representatives r_j (Re in [0, 1), r_j != 0) and nonzero c_j, so that no
    orbit sum vanishes and F is not summable.
    """
    reps: list[GaussRat] = []
    while len(reps) < poles:
        den = rng.choice((2, 3, 4, 5))
        r = GaussRat(Fraction(rng.randint(0, den - 1), den), rng.choice((0, 0, 1, -1)))
        if r and r not in reps:
            reps.append(r)
    total = RatFun.const(ZERO, FRAME_VAR)
    for r in reps:
        c = random_nonzero_gauss(rng)
        k = rng.randint(1, 2)
        total = total + RatFun(Poly((c,), FRAME_VAR), Poly((-r, ONE), FRAME_VAR) ** k)
    return from_shift_frame(total, shift, "t")


def planted_first_order(rng: random.Random, shift: MoebiusShift, degree: int = 6) -> tuple[RatFun, RatFun, RatFun]:
    """(a, f, g) with tau(g) = a*g + f for a random rational g without a pole at 0."""
    g = random_split_ratfun(rng, degree, degree)
    a = RatFun(random_poly(rng, rng.randint(0, 2)), random_split_poly(rng, rng.randint(0, 1)))
    f = tau_apply(g, shift) - a * g
    return a, f, g


def _half_integer_point(rng: random.Random) -> GaussRat:
    # s = r + j stays away from 0 for every integer j
    return GaussRat(Fraction(2 * rng.randint(-3, 3) + 1, 2), rng.choice((0, 1, -1)))


def frame_pole_chain(rng: random.Random, shift: MoebiusShift, length: int) -> RatFun:
    """sum c_j/(s - r - j)^k_j over j < length, as a function of t."""
    r = _half_integer_point(rng)
    total = RatFun.const(ZERO, FRAME_VAR)
    for j in range(length):
        linear = Poly((-(r + j), ONE), FRAME_VAR)
        total = total + RatFun(Poly((random_nonzero_gauss(rng),), FRAME_VAR), linear ** rng.randint(1, 2))
    return from_shift_frame(total, shift, "t")


def planted_pole_chain(rng: random.Random, shift: MoebiusShift, length: int = 3) -> tuple[RatFun, RatFun, RatFun]:
    """
    (a, f, g) with tau(g) = a*g + f where g has poles on one shift orbit
    (s = r, r+1, ... in the frame) and a = tau(z)/z for a rational z whose
    poles form a second chain, so the homogeneous equation has z as a solution.
    """
    g = frame_pole_chain(rng, shift, length)
    r = _half_integer_point(rng)
    chain = Poly((ONE,), FRAME_VAR)
    for j in range(rng.randint(1, 2)):
        chain = chain * Poly((-(r + j), ONE), FRAME_VAR)
    z = from_shift_frame(RatFun(Poly((ONE,), FRAME_VAR), chain), shift, "t")
    a = tau_apply(z, shift) / z
    f = tau_apply(g, shift) - a * g
    return a, f, g
