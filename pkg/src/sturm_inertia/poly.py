"""Exact rational scalars and dense univariate polynomials.

Scalars are :class:`fractions.Fraction` throughout; no floating point is
used anywhere in this package.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Iterable, Union

Rational = Fraction
Scalar = Union[int, Fraction]

__all__ = [
    "Rational",
    "Polynomial",
    "NotDivisibleError",
    "X",
    "to_rational",
    "sign",
    "poly_gcd",
    "exact_div",
    "cauchy_bound",
]


class NotDivisibleError(ArithmeticError):
    """Raised by :func:`exact_div` when the remainder is nonzero."""


def to_rational(value: Scalar | str) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, _RationalABC, str)) and not isinstance(value, bool):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def sign(a: Scalar) -> int:
    return (a > 0) - (a < 0)


class Polynomial:
    """Dense polynomial with rational coefficients, lowest degree first.

    Instances are immutable and always normalized: trailing zero
    coefficients are stripped, so the zero polynomial has ``coeffs == ()``.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar | str] = ()):
        cs = [to_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c: Scalar) -> Polynomial:
        return cls([c])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> Polynomial:
        return cls([0] * degree + [c])

    @classmethod
    def from_roots(cls, roots: Iterable[Scalar]) -> Polynomial:
        """Monic product of ``(x - r)`` over ``roots`` (repeat for multiplicity)."""
        p = cls([1])
        for r in roots:
            p = p * cls([-to_rational(r), 1])
        return p

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        # -1 for the zero polynomial; only ever compared against degrees >= 0
        return len(self._coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self._coeffs[-1] if self._coeffs else Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_constant(self) -> bool:
        return len(self._coeffs) <= 1

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self._coeffs):
            return self._coeffs[i]
        return Fraction(0)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self._coeffs == Polynomial([other])._coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self._coeffs]})"

    def __str__(self) -> str:
        return self.format()

    def format(self, var: str = "x") -> str:
        """Render in the grammar accepted by :func:`sturm_inertia.parsing.parse_poly`."""
        if not self._coeffs:
            return "0"
        parts: list[str] = []
        for k in range(len(self._coeffs) - 1, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                term = str(mag)
            else:
                power = var if k == 1 else f"{var}^{k}"
                term = power if mag == 1 else f"{mag}*{power}"
            if not parts:
                parts.append(f"-{term}" if c < 0 else term)
            else:
                parts.append(("- " if c < 0 else "+ ") + term)
        return " ".join(parts)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Polynomial([other])
        return NotImplemented

    def __neg__(self) -> Polynomial:
        return Polynomial([-c for c in self._coeffs])

    def __pos__(self) -> Polynomial:
        return self

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial(out)

    __radd__ = __add__

    def __sub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self._coeffs, other._coeffs
        if not a or not b:
            return Polynomial()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> Polynomial:
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Polynomial([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __call__(self, a: Scalar) -> Fraction:
        """Evaluate exactly at ``a`` by Horner's rule."""
        a = to_rational(a)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * a + c
        return acc

    def derivative(self) -> Polynomial:
        return Polynomial([k * c for k, c in enumerate(self._coeffs)][1:])

    def monic(self) -> Polynomial:
        if not self._coeffs:
            raise ZeroDivisionError("zero polynomial has no monic associate")
        lc = self._coeffs[-1]
        return Polynomial([c / lc for c in self._coeffs])

    def __divmod__(self, other) -> tuple[Polynomial, Polynomial]:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._coeffs)
        dg = other.degree
        lc = other.leading
        if len(rem) - 1 < dg:
            return Polynomial(), self
        quot = [Fraction(0)] * (len(rem) - dg)
        divisor = other._coeffs
        for k in range(len(rem) - 1 - dg, -1, -1):
            c = rem[k + dg] / lc
            quot[k] = c
            if c:
                for j, dc in enumerate(divisor):
                    rem[k + j] -= c * dc
        return Polynomial(quot), Polynomial(rem[:dg])

    def __floordiv__(self, other) -> Polynomial:
        return divmod(self, other)[0]

    def __mod__(self, other) -> Polynomial:
        return divmod(self, other)[1]


X = Polynomial([0, 1])


def poly_gcd(f: Polynomial, g: Polynomial) -> Polynomial:
    """Monic greatest common divisor of ``f`` and ``g``."""
    if f.is_zero() and g.is_zero():
        raise ValueError("gcd of two zero polynomials is undefined")
    a, b = f, g
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def exact_div(f: Polynomial, d: Polynomial) -> Polynomial:
    q, r = divmod(f, d)
    if not r.is_zero():
        raise NotDivisibleError(f"{d} does not divide {f} (remainder {r})")
    return q


def cauchy_bound(f: Polynomial) -> Fraction:
    """``1 + max |a_i| / |a_n|``; every real root r of ``f`` has ``|r|`` below it."""
    if f.is_constant():
        raise ValueError("Cauchy bound requires a non-constant polynomial")
    lc = abs(f.leading)
    return 1 + max(abs(c) for c in f.coeffs[:-1]) / lc
