"""Generalized Sturm chains built by Euclid's algorithm with negated remainders."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .poly import Polynomial, Scalar, exact_div, sign, to_rational

__all__ = [
    "SturmChain",
    "RefinedChain",
    "build_chain",
    "canonical_chain",
    "sign_variation",
    "variation_at",
    "refine",
    "check_recurrence",
]


@dataclass(frozen=True)
class SturmChain:
    """``f_0, ..., f_m`` with ``f_{i-1} = d_i f_i - f_{i+1}`` and ``f_{m-1} = d_m f_m``."""

    chain: tuple[Polynomial, ...]
    quotients: tuple[Polynomial, ...]

    def __post_init__(self):
        if len(self.chain) != len(self.quotients) + 1 or not self.quotients:
            raise ValueError("a Sturm chain needs m >= 1 quotients and m + 1 members")
        if self.chain[-1].is_zero():
            raise ValueError("last chain member must be nonzero")

    @property
    def m(self) -> int:
        return len(self.quotients)

    @property
    def last(self) -> Polynomial:
        return self.chain[-1]

    def values_at(self, a: Scalar) -> list[Fraction]:
        return [p(a) for p in self.chain]


@dataclass(frozen=True)
class RefinedChain:
    """Chain members divided exactly by the last member ``f_m``."""

    chain: tuple[Polynomial, ...]

    @property
    def m(self) -> int:
        return len(self.chain) - 1

    def values_at(self, a: Scalar) -> list[Fraction]:
        return [p(a) for p in self.chain]


def build_chain(f: Polynomial, g: Polynomial) -> SturmChain:
    """Sturm chain of the pair ``(f, g)``.

    Each new member is the negated remainder of the previous two; the
    process stops at the first zero remainder. A constant ``g`` is allowed
    and yields the one-step chain ``[f, g]``.
    """
    if f.is_constant():
        raise ValueError(f"f must be non-constant, got {f}")
    if g.is_zero():
        raise ValueError("g must be nonzero")
    chain = [f, g]
    quotients = []
    while True:
        q, r = divmod(chain[-2], chain[-1])
        quotients.append(q)
        if r.is_zero():
            break
        chain.append(-r)
    return SturmChain(tuple(chain), tuple(quotients))


def canonical_chain(f: Polynomial) -> SturmChain:
    return build_chain(f, f.derivative())


def sign_variation(values: Iterable[Scalar]) -> int:
    """Number of sign changes after deleting zeros."""
    signs = [s for s in map(sign, values) if s]
    return sum(1 for s, t in zip(signs, signs[1:]) if s != t)


def variation_at(c: SturmChain | RefinedChain, a: Scalar) -> int:
    return sign_variation(c.values_at(to_rational(a)))


def refine(c: SturmChain) -> RefinedChain:
    # divide by f_m exactly as it stands: normalizing f_m first would break
    # the trailing-minor identity D_i = f~_{m-i}
    last = c.last
    return RefinedChain(tuple(exact_div(p, last) for p in c.chain))


def check_recurrence(c: SturmChain) -> bool:
    """True iff the defining identities of ``c`` hold as polynomial equalities."""
    f, d = c.chain, c.quotients
    m = c.m
    for i in range(1, m):
        if f[i - 1] != d[i - 1] * f[i] - f[i + 1]:
            return False
        if f[i + 1].degree >= f[i].degree:
            return False
    return f[m - 1] == d[m - 1] * f[m]
