"""
Exact linear systems over Q(i): reduced row echelon form, one particular
solution and a kernel basis.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from core.arith.gauss import ONE, ZERO, GaussRat
from core.errors import DimensionMismatchError


@dataclass(frozen=True)
class LinSystem:
    matrix: tuple[tuple[GaussRat, ...], ...]
    rhs: tuple[GaussRat, ...]
    cols: int

    @classmethod
    def build(cls, matrix: Sequence[Sequence], rhs: Sequence | None = None, cols: int | None = None) -> "LinSystem":
        rows = [tuple(GaussRat.coerce(v) for v in row) for row in matrix]
        width = cols if cols is not None else (len(rows[0]) if rows else 0)
        for row in rows:
            if len(row) != width:
                raise DimensionMismatchError(f"row of length {len(row)} in a system with {width} columns")
        if rhs is None:
            vector = tuple(ZERO for _ in rows)
        else:
            vector = tuple(GaussRat.coerce(v) for v in rhs)
        if len(vector) != len(rows):
            raise DimensionMismatchError(f"{len(rows)} equations but {len(vector)} right-hand sides")
        return cls(tuple(rows), vector, width)


@dataclass(frozen=True)
class LinSolution:
    particular: tuple[GaussRat, ...]
    kernel: tuple[tuple[GaussRat, ...], ...] = field(default_factory=tuple)


def linsolve(system: LinSystem) -> LinSolution | None:
    """None when the system is inconsistent."""
    cols = system.cols
    rows = [list(row) + [b] for row, b in zip(system.matrix, system.rhs)]
    pivots: list[int] = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [a - factor * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    for i in range(r, len(rows)):
        if rows[i][cols]:
            return None

    particular = [ZERO] * cols
    for i, c in enumerate(pivots):
        particular[c] = rows[i][cols]

    kernel = []
    pivot_set = set(pivots)
    for free in range(cols):
        if free in pivot_set:
            continue
        vector = [ZERO] * cols
        vector[free] = ONE
        for i, c in enumerate(pivots):
            vector[c] = -rows[i][free]
        kernel.append(tuple(vector))
    return LinSolution(tuple(particular), tuple(kernel))
