"""Inertia of real symmetric matrices over the rationals.

Three independent routes are provided:

* :func:`inertia_congruence` diagonalizes by symmetric congruence and is the
  ground truth everything else is checked against.
* :func:`q_from_normal_sequence` counts negative eigenvalues from a normal
  sequence of nested principal minors.
* :func:`bordered_q_update` tracks the negative index when a matrix is
  bordered by one row and column.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

from .poly import Scalar, sign, to_rational

__all__ = [
    "SymMatrix",
    "InertiaTriple",
    "MinorSequence",
    "NormalSequenceNotFound",
    "determinant",
    "inertia_congruence",
    "rank",
    "is_normal",
    "q_from_normal_sequence",
    "find_normal_sequence",
    "bordered_q_update",
]

# complete backtracking is cheap up to this size; beyond it the search is capped
EXHAUSTIVE_MAX_N = 8
SEARCH_NODE_BUDGET = 200_000


class SymMatrix:
    """Immutable symmetric matrix with exact rational entries."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[Scalar]]):
        rows = tuple(tuple(to_rational(v) for v in row) for row in rows)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise ValueError(f"matrix is not symmetric at ({i}, {j})")
        self._rows = rows

    @classmethod
    def diagonal(cls, values: Sequence[Scalar]) -> SymMatrix:
        n = len(values)
        return cls([[values[i] if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def tridiagonal(cls, diag: Sequence[Scalar], off: Scalar = 1) -> SymMatrix:
        n = len(diag)
        return cls(
            [
                [diag[i] if i == j else (off if abs(i - j) == 1 else 0) for j in range(n)]
                for i in range(n)
            ]
        )

    @property
    def n(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self._rows[i][j]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SymMatrix({[[str(v) for v in row] for row in self._rows]})"

    def principal(self, index: Iterable[int]) -> SymMatrix:
        """Principal submatrix on the given (0-based) indices."""
        idx = sorted(index)
        return SymMatrix([[self._rows[i][j] for j in idx] for i in idx])

    def bordered(self, alpha: Sequence[Scalar], b: Scalar) -> SymMatrix:
        """``[[A, alpha], [alpha^T, b]]``."""
        if len(alpha) != self.n:
            raise ValueError("border vector has the wrong length")
        alpha = [to_rational(v) for v in alpha]
        rows = [list(row) + [alpha[i]] for i, row in enumerate(self._rows)]
        rows.append(alpha + [to_rational(b)])
        return SymMatrix(rows)

    def congruent(self, P: Sequence[Sequence[Scalar]]) -> SymMatrix:
        """``P^T A P`` for a square ``P`` given as a list of rows."""
        n = self.n
        P = [[to_rational(v) for v in row] for row in P]
        AP = [[sum(self._rows[i][k] * P[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        return SymMatrix(
            [[sum(P[k][i] * AP[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
        )

    def det(self) -> Fraction:
        return determinant(self._rows)


class InertiaTriple(NamedTuple):
    p: int
    q: int
    z: int

    @property
    def n(self) -> int:
        return self.p + self.q + self.z

    @property
    def rank(self) -> int:
        return self.p + self.q


@dataclass(frozen=True)
class MinorSequence:
    """Determinants of the principal submatrices on a nested chain of index sets."""

    index_sets: tuple[tuple[int, ...], ...]
    values: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.index_sets) != len(self.values):
            raise ValueError("index_sets and values differ in length")
        prev: set[int] = set()
        for i, s in enumerate(self.index_sets, start=1):
            cur = set(s)
            if len(cur) != i or not prev <= cur:
                raise ValueError(f"index set {i} does not extend its predecessor by one")
            prev = cur

    @classmethod
    def from_order(cls, A: SymMatrix, order: Sequence[int]) -> MinorSequence:
        sets = tuple(tuple(sorted(order[:k])) for k in range(1, len(order) + 1))
        return cls(sets, tuple(A.principal(s).det() for s in sets))


class NormalSequenceNotFound(LookupError):
    """No normal principal minor sequence was found for a matrix."""

    def __init__(self, matrix: SymMatrix, exhausted: bool):
        self.matrix = matrix
        self.exhausted = exhausted
        how = "exhaustive search" if exhausted else "budgeted search"
        super().__init__(f"{how} found no normal principal minor sequence for {matrix!r}")


def determinant(rows: Sequence[Sequence[Scalar]]) -> Fraction:
    """Exact determinant by Gaussian elimination with row swaps."""
    a = [[to_rational(v) for v in row] for row in rows]
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        piv = next((i for i in range(k, n) if a[i][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            det = -det
        pk = a[k][k]
        det *= pk
        for i in range(k + 1, n):
            f = a[i][k]
            if f:
                f /= pk
                row_i, row_k = a[i], a[k]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
    return det


def _swap(w: list[list[Fraction]], i: int, j: int) -> None:
    w[i], w[j] = w[j], w[i]
    for row in w:
        row[i], row[j] = row[j], row[i]


def inertia_congruence(A: SymMatrix) -> InertiaTriple:
    """Inertia by exact symmetric congruence diagonalization."""
    w = [list(row) for row in A.rows]
    n = len(w)
    diag: list[Fraction] = []
    for k in range(n):
        if w[k][k] == 0:
            j = next((j for j in range(k + 1, n) if w[j][j] != 0), None)
            if j is not None:
                _swap(w, k, j)
            else:
                pair = next(
                    ((i, j) for i in range(k, n) for j in range(i + 1, n) if w[i][j] != 0),
                    None,
                )
                if pair is None:
                    diag.extend([Fraction(0)] * (n - k))
                    break
                i, j = pair
                # row_i += row_j, col_i += col_j; new w[i][i] = 2 w[i][j] since w[j][j] = 0
                for c in range(k, n):
                    w[i][c] += w[j][c]
                for r in range(k, n):
                    w[r][i] += w[r][j]
                _swap(w, k, i)
        p = w[k][k]
        diag.append(p)
        row_k = w[k]
        for i in range(k + 1, n):
            f = w[i][k]
            if f:
                f /= p
                row_i = w[i]
                for j in range(k + 1, n):
                    row_i[j] -= f * row_k[j]
                row_i[k] = Fraction(0)
        for j in range(k + 1, n):
            row_k[j] = Fraction(0)
    pos = sum(1 for d in diag if d > 0)
    neg = sum(1 for d in diag if d < 0)
    return InertiaTriple(pos, neg, n - pos - neg)


def rank(A: SymMatrix) -> int:
    return inertia_congruence(A).rank


def _values(seq: MinorSequence | Sequence[Scalar]) -> Sequence[Scalar]:
    return seq.values if isinstance(seq, MinorSequence) else seq


def is_normal(seq: MinorSequence | Sequence[Scalar], r: int) -> bool:
    """``D_r != 0`` and no two consecutive zeros among ``D_1, ..., D_r``."""
    values = _values(seq)
    if r == 0:
        return True
    if len(values) < r or values[r - 1] == 0:
        return False
    return not any(values[i] == 0 and values[i + 1] == 0 for i in range(r - 1))


def q_from_normal_sequence(seq: MinorSequence | Sequence[Scalar], r: int) -> int:
    """Negative index of inertia read off a normal principal minor sequence.

    Counts ``D_1 < 0``, the strict sign changes between consecutive minors
    up to ``D_r``, and the zeros among ``D_1, ..., D_{r-1}``.
    """
    values = _values(seq)
    if not is_normal(values, r):
        raise ValueError(f"minor sequence {list(map(str, values))} is not normal at rank {r}")
    if r == 0:
        return 0
    q = int(sign(values[0]) == -1)
    for i in range(r - 1):
        q += sign(values[i] * values[i + 1]) == -1
        q += values[i] == 0
    return q


def find_normal_sequence(A: SymMatrix) -> MinorSequence:
    """Depth-first search for a normal principal minor sequence of ``A``.

    Extensions by the smallest unused index with a nonzero minor are tried
    first, then those with a zero minor; dead ends backtrack. The search is
    complete for ``n <= EXHAUSTIVE_MAX_N`` and node-budgeted beyond that.
    Raises :class:`NormalSequenceNotFound` instead of returning a
    non-normal sequence.
    """
    n = A.n
    r = rank(A)
    budget = None if n <= EXHAUSTIVE_MAX_N else SEARCH_NODE_BUDGET
    nodes = 0
    order: list[int] = []
    values: list[Fraction] = []
    rows = A.rows
    minors: dict[frozenset[int], Fraction] = {}

    def minor(index: list[int]) -> Fraction:
        key = frozenset(index)
        if key not in minors:
            idx = sorted(key)
            minors[key] = determinant([[rows[i][j] for j in idx] for i in idx])
        return minors[key]

    def dfs() -> bool:
        nonlocal nodes
        k = len(order)
        if k >= r:
            # past the rank nothing is constrained; finish in index order
            rest = [j for j in range(n) if j not in order]
            order.extend(rest)
            return True
        i = k + 1
        scored = []
        for j in range(n):
            if j in order:
                continue
            v = minor(order + [j])
            scored.append((v == 0, j, v))
        scored.sort()
        for is_zero, j, v in scored:
            if is_zero and (i == r or (values and values[-1] == 0)):
                continue
            nodes += 1
            if budget is not None and nodes > budget:
                return False
            order.append(j)
            values.append(v)
            if dfs():
                return True
            order.pop()
            values.pop()
        return False

    if not dfs():
        raise NormalSequenceNotFound(A, exhausted=budget is None or nodes <= budget)
    sets = tuple(tuple(sorted(order[:k])) for k in range(1, n + 1))
    seq = MinorSequence(sets, tuple(minor(list(s)) for s in sets))
    assert is_normal(seq, r)
    return seq


def bordered_q_update(qA: int, detA: Scalar, detB: Scalar) -> int:
    """Negative index of ``B = [[A, alpha], [alpha^T, b]]`` from that of ``A``.

    Requires ``rank(A) >= n - 1`` and not both determinants zero.
    """
    if detA == 0 and detB == 0:
        raise ValueError("bordered update needs |A|^2 + |B|^2 != 0")
    if detB == 0:
        return qA
    if detA == 0:
        return qA + 1
    return qA if sign(detA) == sign(detB) else qA + 1
