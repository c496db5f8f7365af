"""Real root counting and isolation by sign variations and by matrix inertia."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .chain import SturmChain, build_chain, canonical_chain, variation_at
from .inertia import (
    inertia_congruence,
    is_normal,
    q_from_normal_sequence,
)
from .matrix import SturmMatrix, build_matrix, eval_matrix, trailing_minor_values
from .poly import Polynomial, Scalar, cauchy_bound, poly_gcd, to_rational

__all__ = [
    "Interval",
    "RootCountReport",
    "StructureReport",
    "MultipleRootError",
    "InertiaMismatch",
    "q_at",
    "q_of_matrix",
    "count_roots_variation",
    "count_roots_inertia",
    "count_roots",
    "count_all_roots",
    "isolate_roots",
    "structure_check",
]

METHODS = ("auto", "congruence", "minors")


class MultipleRootError(ValueError):
    """An interval endpoint is a multiple root, so classical Sturm counting does not apply."""

    def __init__(self, point: Fraction):
        self.point = point
        super().__init__(
            f"endpoint {point} is a multiple root; sign-variation counting requires "
            "that neither endpoint be a multiple root"
        )


class InertiaMismatch(AssertionError):
    """The minor-sequence fast path and the congruence oracle disagree."""


@dataclass(frozen=True)
class Interval:
    """Half-open interval ``(lo, hi]``."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        if not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi}]")

    def __contains__(self, x: Scalar) -> bool:
        return self.lo < x <= self.hi

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def __str__(self) -> str:
        return f"({self.lo}, {self.hi}]"


@dataclass(frozen=True)
class RootCountReport:
    count_inertia: int
    qa: int
    qb: int
    count_variation: Optional[int] = None

    @property
    def agreement(self) -> Optional[bool]:
        if self.count_variation is None:
            return None
        return self.count_variation == self.count_inertia


def q_of_matrix(S: SturmMatrix, a: Scalar, method: str = "auto", check: bool = False) -> int:
    """Negative index of inertia of ``S`` evaluated at ``a``.

    ``"minors"`` reads it from the trailing principal minors (valid when they
    form a normal sequence), ``"congruence"`` diagonalizes, and ``"auto"``
    takes the minor path when it applies. With ``check=True`` both routes
    are computed and compared whenever the minor path applies.
    """
    if method not in METHODS:
        raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")
    E = eval_matrix(S, a)
    if method == "congruence":
        return inertia_congruence(E.to_symmetric()).q
    values = trailing_minor_values(E)
    # unit off-diagonals keep the rank at m or m - 1
    r = E.m if values[-1] != 0 else E.m - 1
    if is_normal(values, r):
        q = q_from_normal_sequence(values, r)
        if check:
            oracle = inertia_congruence(E.to_symmetric()).q
            if oracle != q:
                raise InertiaMismatch(f"minor path q={q}, congruence q={oracle} at x={E.point}")
        return q
    if method == "minors":
        raise ValueError(f"trailing minors at {E.point} do not form a normal sequence")
    return inertia_congruence(E.to_symmetric()).q


def q_at(
    f: Polynomial, g: Polynomial, a: Scalar, method: str = "auto", check: bool = False
) -> int:
    """``q(S_{f,g}(a))``, defined for every rational ``a``, common roots included."""
    return q_of_matrix(build_matrix(build_chain(f, g)), a, method=method, check=check)


def _check_interval(a: Fraction, b: Fraction) -> None:
    if not a < b:
        raise ValueError(f"need a < b, got a={a}, b={b}")


def is_multiple_root(f: Polynomial, a: Scalar, common: Optional[Polynomial] = None) -> bool:
    if common is None:
        common = poly_gcd(f, f.derivative())
    return f(a) == 0 and common(a) == 0


def _variation_count(f: Polynomial, c: SturmChain, a: Fraction, b: Fraction) -> int:
    common = poly_gcd(f, f.derivative())
    for end in (a, b):
        if is_multiple_root(f, end, common):
            raise MultipleRootError(end)
    return variation_at(c, a) - variation_at(c, b)


def count_roots_variation(f: Polynomial, a: Scalar, b: Scalar) -> int:
    """Distinct real roots in ``(a, b]`` as ``V_f(a) - V_f(b)``.

    Raises :class:`MultipleRootError` when an endpoint is a multiple root.
    """
    a, b = to_rational(a), to_rational(b)
    _check_interval(a, b)
    return _variation_count(f, canonical_chain(f), a, b)


def count_roots_inertia(f: Polynomial, a: Scalar, b: Scalar, check: bool = False) -> int:
    """Distinct real roots in ``(a, b]`` as ``q(S(a)) - q(S(b))`` with ``g = f'``.

    Valid for every pair of rational endpoints, multiple roots included.
    """
    a, b = to_rational(a), to_rational(b)
    _check_interval(a, b)
    S = build_matrix(canonical_chain(f))
    return q_of_matrix(S, a, check=check) - q_of_matrix(S, b, check=check)


def count_roots(
    f: Polynomial, a: Scalar, b: Scalar, variation: bool = True, check: bool = False
) -> RootCountReport:
    """Count by inertia and, where the classical hypothesis holds, by variation."""
    a, b = to_rational(a), to_rational(b)
    _check_interval(a, b)
    c = canonical_chain(f)
    S = build_matrix(c)
    qa, qb = q_of_matrix(S, a, check=check), q_of_matrix(S, b, check=check)
    cv = None
    if variation:
        try:
            cv = _variation_count(f, c, a, b)
        except MultipleRootError:
            cv = None
    return RootCountReport(count_inertia=qa - qb, qa=qa, qb=qb, count_variation=cv)


def count_all_roots(f: Polynomial) -> int:
    M = cauchy_bound(f)
    return count_roots_inertia(f, -M, M)


def isolate_roots(f: Polynomial) -> list[Interval]:
    """Disjoint half-open intervals, one per distinct real root, in increasing order."""
    M = cauchy_bound(f)
    S = build_matrix(canonical_chain(f))
    cache: dict[Fraction, int] = {}

    def q(x: Fraction) -> int:
        if x not in cache:
            cache[x] = q_of_matrix(S, x)
        return cache[x]

    out: list[Interval] = []
    stack = [(-M, M)]
    while stack:
        lo, hi = stack.pop()
        n = q(lo) - q(hi)
        if n == 0:
            continue
        if n == 1:
            out.append(Interval(lo, hi))
            continue
        mid = (lo + hi) / 2
        # push the right half first so the left half is processed first
        stack.append((mid, hi))
        stack.append((lo, mid))
    return out


@dataclass
class StructureReport:
    """Outcome of :func:`structure_check`.

    ``constants[i]`` is the value of ``q`` on the i-th open gap between
    consecutive roots (index 0 is left of every root); ``at_roots[j]`` is
    ``q`` at the j-th root.
    """

    roots: list[Fraction]
    constants: list[Optional[int]] = field(default_factory=list)
    at_roots: list[int] = field(default_factory=list)
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def structure_check(
    f: Polynomial, roots: Sequence[Scalar], check: bool = False
) -> StructureReport:
    """Check how ``x -> q(S_{f,f'}(x))`` steps across the known real roots of ``f``.

    ``roots`` must be the distinct real roots of ``f``, all rational. The
    checks are: ``q`` is constant on each open gap between roots, it drops by
    exactly one across each root, and at each root ``c`` the value just left
    of ``c`` is ``q(S(c)) + 1`` while the value just right is ``q(S(c))``.
    """
    rts = sorted({to_rational(r) for r in roots})
    report = StructureReport(rts)
    if not rts:
        report.failures.append("no roots supplied")
        return report
    for r in rts:
        if f(r) != 0:
            report.failures.append(f"supplied root {r} is not a root of f")
    if report.failures:
        return report

    S = build_matrix(canonical_chain(f))

    def q(x: Fraction) -> int:
        return q_of_matrix(S, x, check=check)

    gaps = [b - a for a, b in zip(rts, rts[1:])]
    eps = min(gaps) / 4 if gaps else Fraction(1, 4)
    M = cauchy_bound(f)
    lo_end, hi_end = min(-M, rts[0] - 1), max(M, rts[-1] + 1)
    edges = [lo_end] + rts + [hi_end]

    for i in range(len(edges) - 1):
        a, b = edges[i], edges[i + 1]
        pts = sorted({a + eps if i > 0 else a, (a + b) / 2, b - eps if i < len(rts) else b})
        vals = [q(x) for x in pts]
        if len(set(vals)) != 1:
            report.failures.append(
                f"q not constant on gap {i}: "
                + ", ".join(f"q({x})={v}" for x, v in zip(pts, vals))
            )
            report.constants.append(None)
        else:
            report.constants.append(vals[0])

    for j, c in enumerate(rts):
        tc = q(c)
        report.at_roots.append(tc)
        left, right = q(c - eps), q(c + eps)
        if left != tc + 1:
            report.failures.append(f"left of root {c}: q({c - eps})={left}, expected {tc + 1}")
        if right != tc:
            report.failures.append(f"right of root {c}: q({c + eps})={right}, expected {tc}")
        before, after = report.constants[j], report.constants[j + 1]
        if before is not None and after is not None and before - after != 1:
            report.failures.append(
                f"crossing root {c}: gap values {before} -> {after}, expected a drop of 1"
            )
    return report
