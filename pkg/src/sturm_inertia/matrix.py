"""Symbolic Sturm matrices and their trailing principal minors.

The Sturm matrix of a chain is the symmetric tridiagonal matrix with the
Euclidean quotients ``d_1, ..., d_m`` on the diagonal and ones beside it.
Only the diagonal is stored.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from .chain import SturmChain
from .inertia import SymMatrix
from .poly import Polynomial, Scalar, to_rational

__all__ = [
    "SturmMatrix",
    "EvaluatedSturmMatrix",
    "build_matrix",
    "eval_matrix",
    "trailing_minor_polys",
    "trailing_minor_values",
]

# Test-only fault injection: when set, build_matrix passes its diagonal
# through this callable. Never set outside tests.
_fault_hook: Optional[Callable[[tuple[Polynomial, ...]], tuple[Polynomial, ...]]] = None


@dataclass(frozen=True)
class SturmMatrix:
    diag: tuple[Polynomial, ...]

    def __post_init__(self):
        if not self.diag:
            raise ValueError("a Sturm matrix has at least one row")

    @property
    def m(self) -> int:
        return len(self.diag)

    def entry(self, i: int, j: int) -> Polynomial:
        """Symbolic entry at 0-based position ``(i, j)``."""
        if i == j:
            return self.diag[i]
        return Polynomial([1]) if abs(i - j) == 1 else Polynomial()

    def at(self, a: Scalar) -> EvaluatedSturmMatrix:
        return eval_matrix(self, a)


@dataclass(frozen=True)
class EvaluatedSturmMatrix:
    diag: tuple[Fraction, ...]
    point: Fraction

    @property
    def m(self) -> int:
        return len(self.diag)

    def to_symmetric(self) -> SymMatrix:
        return SymMatrix.tridiagonal(self.diag)


def build_matrix(c: SturmChain) -> SturmMatrix:
    diag = tuple(c.quotients)
    if _fault_hook is not None:
        diag = tuple(_fault_hook(diag))
    return SturmMatrix(diag)


def eval_matrix(S: SturmMatrix, a: Scalar) -> EvaluatedSturmMatrix:
    a = to_rational(a)
    return EvaluatedSturmMatrix(tuple(d(a) for d in S.diag), a)


def _trailing_recurrence(diag, one, zero):
    # D_1 = d_m, D_2 = d_{m-1} d_m - 1, D_{k+2} = d_{m-k-1} D_{k+1} - D_k;
    # seeding D_0 = 1, D_{-1} = 0 reproduces the first two
    prev, cur = zero, one
    out = []
    for d in reversed(diag):
        prev, cur = cur, d * cur - prev
        out.append(cur)
    return out


def trailing_minor_polys(S: SturmMatrix) -> list[Polynomial]:
    """``[D_1, ..., D_m]`` where ``D_i`` is the determinant of the last ``i`` rows/columns."""
    return _trailing_recurrence(S.diag, Polynomial([1]), Polynomial())


def trailing_minor_values(E: EvaluatedSturmMatrix) -> list[Fraction]:
    """Numeric counterpart of :func:`trailing_minor_polys` at the evaluation point."""
    return _trailing_recurrence(E.diag, Fraction(1), Fraction(0))
