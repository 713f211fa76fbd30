"""
Roots of polynomials over Q(i) that lie in Q(i).

The polynomial is factored over QQ_I with sympy; every linear factor gives a
root, and any factor of higher degree means the polynomial does not split.
"""

from __future__ import annotations

import logging

from core.arith.gauss import GaussRat
from core.arith.poly import Poly
from core.errors import NonSplitDenominatorError

logger = logging.getLogger(__name__)


def gaussian_roots(p: Poly) -> list[tuple[GaussRat, int]]:
    """
    All roots of p with multiplicities, in a deterministic order.
    Raises NonSplitDenominatorError unless they account for the whole degree.
    """
    if p.degree() <= 0:
        return []
    _, factors = p.to_sympy().factor_list()
    roots: list[tuple[GaussRat, int]] = []
    for factor, mult in factors:
        if factor.degree() > 1:
            raise NonSplitDenominatorError(
                f"non-split denominator: {p} has an irreducible factor of degree {factor.degree()} over Q(i)"
            )
        linear = Poly.from_sympy(factor, p.var)
        roots.append((-linear.coeff(0) / linear.coeff(1), mult))
    roots.sort(key=lambda item: (item[0].re, item[0].im))
    logger.debug("roots of %s: %s", p, [(str(r), m) for r, m in roots])
    return roots
