"""
Floating-point checks of the trigamma solution of the Bernoulli equation.

trigamma(z) = sum_{k>=0} 1/(z+k)^2 is evaluated by the upward recurrence
psi'(z) = psi'(z+1) + 1/z^2 until z >= shift_to, then by the asymptotic
series 1/z + 1/(2z^2) + sum_n B_2n / z^(2n+1) through B_10.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

import numpy as np

from core.catalog.registry import CatalogRegistry
from core.errors import PreconditionError

logger = logging.getLogger(__name__)

ASYMPTOTIC_TERMS = 5
PRECISION_FLOOR = 1e-15


@lru_cache(maxsize=1)
def even_bernoulli_numbers() -> tuple[float, ...]:
    """B_2, B_4, ..., B_12 as floats, read from the exact catalog entry."""
    values = CatalogRegistry.get_entry("bernoulli-numbers").build_ogf({}, 13)
    return tuple(float(values[2 * n].re) for n in range(1, 7))


def _asymptotic(z: np.ndarray, terms: int) -> np.ndarray:
    bern = even_bernoulli_numbers()
    out = 1.0 / z + 0.5 / z**2
    for n in range(1, terms + 1):
        out = out + bern[n - 1] / z ** (2 * n + 1)
    return out


def trigamma(z, shift_to: float = 20.0, terms: int = ASYMPTOTIC_TERMS):
    """Scalar or array trigamma for z > 0; relative error below 1e-12."""
    arr = np.atleast_1d(np.asarray(z, dtype=float))
    if np.any(arr <= 0) or not np.all(np.isfinite(arr)):
        raise PreconditionError("trigamma needs finite positive arguments (poles at nonpositive integers)")
    w = arr.copy()
    acc = np.zeros_like(w)
    low = w < shift_to
    while np.any(low):
        acc[low] += 1.0 / w[low] ** 2
        w[low] += 1.0
        low = w < shift_to
    result = acc + _asymptotic(w, terms)
    return float(result[0]) if np.ndim(z) == 0 else result.reshape(np.shape(z))


@dataclass(frozen=True)
class ClosedFormReport:
    x: float
    max_residual: float
    samples: tuple[float, ...]
    skipped: tuple[float, ...] = field(default_factory=tuple)


def bernoulli_closed_form(x: float, t) -> np.ndarray:
    """F(x, t) = (1/t) psi'((1 + t - t x)/t)."""
    t = np.asarray(t, dtype=float)
    return trigamma(1.0 / t + 1.0 - x) / t


def check_closed_form(x: float, samples: Iterable[float], s_sign: float = 1.0) -> ClosedFormReport:
    """
    Max residual of tau(F) - (1+t) F - S with S = -t(1+t)/(1+t-tx)^2 over
    the samples; s_sign = -1 flips S for negative controls.
    """
    kept, skipped = [], []
    for t in samples:
        # tau(F) evaluates psi' at 1/t + 2 - x, F at 1/t + 1 - x
        if t <= 0 or 1.0 / t + 1.0 - x <= 0:
            logger.warning("skipping sample t=%s: nonpositive trigamma argument", t)
            skipped.append(t)
            continue
        kept.append(t)
    if not kept:
        return ClosedFormReport(x, 0.0, (), tuple(skipped))
    ts = np.array(kept)
    shifted = ts / (1.0 + ts)
    tau_f = bernoulli_closed_form(x, shifted)
    f = bernoulli_closed_form(x, ts)
    s = -s_sign * ts * (1.0 + ts) / (1.0 + ts - ts * x) ** 2
    residual = np.abs(tau_f - (1.0 + ts) * f - s)
    worst = float(np.max(residual))
    logger.info("closed form residual at x=%s: %.3e", x, worst)
    return ClosedFormReport(x, worst, tuple(kept), tuple(skipped))


@dataclass(frozen=True)
class TelescopingReport:
    x: float
    t: float
    n: int
    lhs: float
    rhs: float
    residual: float


def check_telescoping(x: float, t: float, n: int) -> TelescopingReport:
    """G - tau^n(G) = sum_{k=1}^n (t/(1+kt-tx))^2 with G = psi'((1+t-tx)/t)."""
    if n < 0:
        raise PreconditionError("n must be nonnegative")
    base = 1.0 / t + 1.0 - x
    if t <= 0 or base <= 0:
        raise PreconditionError("trigamma arguments must be positive")
    if n == 0:
        return TelescopingReport(x, t, 0, 0.0, 0.0, 0.0)
    ks = np.arange(1, n + 1, dtype=float)
    rhs = float(np.sum((t / (1.0 + ks * t - t * x)) ** 2))
    lhs = trigamma(base) - trigamma(base + n)
    return TelescopingReport(x, t, n, lhs, rhs, abs(lhs - rhs))


@dataclass(frozen=True)
class AsymptoticRow:
    m: int
    errors: tuple[float, ...]
    ratios: tuple[float, ...]
    expected_ratios: tuple[float, ...]
    passed: bool
    precision_limited: bool


def asymptotic_error(m: int, t) -> np.ndarray:
    ts = np.asarray(t, dtype=float)
    reference = trigamma(ts, shift_to=60.0)
    return np.abs(reference - _asymptotic(ts, m))


def check_asymptotic(m: int, samples: Sequence[float] = (10.0, 20.0)) -> AsymptoticRow:
    """Truncation error at order m must scale like t^-(2m+3) between consecutive samples."""
    if any(t < 10 for t in samples):
        raise PreconditionError("asymptotic samples must be >= 10")
    errors = asymptotic_error(m, samples)
    ratios, expected = [], []
    passed = True
    for a, b, ta, tb in zip(errors[:-1], errors[1:], samples[:-1], samples[1:]):
        want = (tb / ta) ** (2 * m + 3)
        got = float(a / b) if b else float("inf")
        ratios.append(got)
        expected.append(want)
        if not (want / 4 <= got <= want * 4):
            passed = False
    limited = bool(np.any(errors < PRECISION_FLOOR))
    if not passed and limited:
        logger.warning("asymptotic check at m=%d limited by double precision", m)
    return AsymptoticRow(m, tuple(float(e) for e in errors), tuple(ratios), tuple(expected), passed, limited)


def asymptotic_table(max_m: int = 5, samples: Sequence[float] = (10.0, 20.0)) -> list[AsymptoticRow]:
    return [check_asymptotic(m, samples) for m in range(max_m + 1)]
