from core.arith.gauss import I, ONE, ZERO, GaussRat
from core.arith.linalg import LinSolution, LinSystem, linsolve
from core.arith.partial_fractions import PartialFractions, PoleTerm, partial_fractions, reassemble
from core.arith.poly import Poly
from core.arith.ratfun import RatFun, ratfun_normalize
from core.arith.roots import gaussian_roots

__all__ = [
    "GaussRat",
    "I",
    "LinSolution",
    "LinSystem",
    "ONE",
    "PartialFractions",
    "PoleTerm",
    "Poly",
    "RatFun",
    "ZERO",
    "gaussian_roots",
    "linsolve",
    "partial_fractions",
    "ratfun_normalize",
    "reassemble",
]
