"""Exact arithmetic in the field Q(sqrt3, i).

Elements are stored as ``a + b*sqrt3 + c*i + d*sqrt3*i`` with rational
components.  Since ``1, sqrt3, i, sqrt3*i`` are linearly independent over Q,
equality is componentwise.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

__all__ = [
    "FieldElement",
    "ZERO",
    "ONE",
    "SQRT3",
    "I",
    "as_field",
    "add",
    "mul",
    "invert",
    "conjugate",
    "sign_real",
    "parse_scalar",
    "format_scalar",
]

Rational = Fraction
Scalar = Union["FieldElement", int, Fraction]


def _frac(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, _RationalABC)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot use {type(x).__name__} as an exact rational")


class FieldElement:
    __slots__ = ("a", "b", "c", "d")

    def __init__(self, a=0, b=0, c=0, d=0) -> None:
        object.__setattr__(self, "a", _frac(a))
        object.__setattr__(self, "b", _frac(b))
        object.__setattr__(self, "c", _frac(c))
        object.__setattr__(self, "d", _frac(d))

    def __setattr__(self, name, value):
        raise AttributeError("FieldElement is immutable")

    @classmethod
    def _raw(cls, a: Fraction, b: Fraction, c: Fraction, d: Fraction) -> FieldElement:
        # internal constructor for components already known to be Fractions
        x = object.__new__(cls)
        _set(x, "a", a)
        _set(x, "b", b)
        _set(x, "c", c)
        _set(x, "d", d)
        return x

    @property
    def components(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    # -- predicates -------------------------------------------------------

    def is_real(self) -> bool:
        return self.c == 0 and self.d == 0

    def is_rational(self) -> bool:
        return self.b == 0 and self.c == 0 and self.d == 0

    def is_imaginary(self) -> bool:
        return self.a == 0 and self.b == 0

    def __bool__(self) -> bool:
        return bool(self.a or self.b or self.c or self.d)

    # -- arithmetic -------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._raw(self.a + o.a, self.b + o.b, self.c + o.c, self.d + o.d)

    __radd__ = __add__

    def __neg__(self) -> FieldElement:
        return FieldElement._raw(-self.a, -self.b, -self.c, -self.d)

    def __pos__(self) -> FieldElement:
        return self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement._raw(self.a - o.a, self.b - o.b, self.c - o.c, self.d - o.d)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a1, b1, c1, d1 = self.a, self.b, self.c, self.d
        a2, b2, c2, d2 = o.a, o.b, o.c, o.d
        if not (b2 or c2 or d2):
            return FieldElement._raw(a1 * a2, b1 * a2, c1 * a2, d1 * a2)
        if not (b1 or c1 or d1):
            return FieldElement._raw(a1 * a2, a1 * b2, a1 * c2, a1 * d2)
        # sqrt3^2 = 3, i^2 = -1, (sqrt3*i)^2 = -3
        return FieldElement._raw(
            a1 * a2 + 3 * b1 * b2 - c1 * c2 - 3 * d1 * d2,
            a1 * b2 + b1 * a2 - c1 * d2 - d1 * c2,
            a1 * c2 + c1 * a2 + 3 * b1 * d2 + 3 * d1 * b2,
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n: int) -> FieldElement:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> FieldElement:
        """Complex conjugate: negates the i-components, fixes sqrt3."""
        return FieldElement(self.a, self.b, -self.c, -self.d)

    def sqrt3_conjugate(self) -> FieldElement:
        return FieldElement(self.a, -self.b, self.c, -self.d)

    def inverse(self) -> FieldElement:
        if not self:
            raise ZeroDivisionError("FieldElement division by zero")
        # x * conj(x) = p + q*sqrt3 is real; (p + q*sqrt3)(p - q*sqrt3) = p^2 - 3q^2 is rational
        cbar = self.conjugate()
        norm = self * cbar
        p, q = norm.a, norm.b
        denom = p * p - 3 * q * q
        real_inv = FieldElement(p / denom, -q / denom)
        return cbar * real_inv

    # -- real-part ordering -----------------------------------------------

    def sign_real(self) -> int:
        """Exact sign of a real element ``a + b*sqrt3``: -1, 0 or 1."""
        if not self.is_real():
            raise ValueError(f"sign_real needs a real element, got {self}")
        a, b = self.a, self.b
        if a >= 0 and b >= 0:
            return 0 if (a == 0 and b == 0) else 1
        if a <= 0 and b <= 0:
            return -1
        # opposite signs: compare |a| with |b|*sqrt3 via squares
        lhs, rhs = a * a, 3 * b * b
        if lhs == rhs:
            return 0
        if a > 0:
            return 1 if lhs > rhs else -1
        return 1 if rhs > lhs else -1

    # -- comparisons / hashing --------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.components == o.components

    def __hash__(self) -> int:
        if self.is_rational():
            return hash(self.a)
        return hash(self.components)

    # -- conversions --------------------------------------------------------

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.a

    def __complex__(self) -> complex:
        s3 = 3 ** 0.5
        return complex(float(self.a) + float(self.b) * s3, float(self.c) + float(self.d) * s3)

    def __float__(self) -> float:
        if not self.is_real():
            raise ValueError(f"{self} is not real")
        return float(self.a) + float(self.b) * 3 ** 0.5

    def __repr__(self) -> str:
        return f"FieldElement({str(self)!r})"

    def __str__(self) -> str:
        return format_scalar(self)


_set = object.__setattr__


def _coerce(x) -> FieldElement | None:
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return FieldElement(x)
    if isinstance(x, bool):
        return FieldElement(int(x))
    return None


def as_field(x) -> FieldElement:
    if isinstance(x, str):
        return parse_scalar(x)
    o = _coerce(x)
    if o is None:
        raise TypeError(f"cannot coerce {type(x).__name__} to FieldElement")
    return o


ZERO = FieldElement(0)
ONE = FieldElement(1)
SQRT3 = FieldElement(0, 1)
I = FieldElement(0, 0, 1)


# functional aliases mirroring the algebraic operations
def add(x: Scalar, y: Scalar) -> FieldElement:
    return as_field(x) + as_field(y)


def mul(x: Scalar, y: Scalar) -> FieldElement:
    return as_field(x) * as_field(y)


def invert(x: Scalar) -> FieldElement:
    return as_field(x).inverse()


def conjugate(x: Scalar) -> FieldElement:
    return as_field(x).conjugate()


def sign_real(x: Scalar) -> int:
    return as_field(x).sign_real()


# -- text grammar -------------------------------------------------------------

_UNITS = ("", "sqrt3", "i", "sqrt3*i")


def _format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_scalar(x: FieldElement) -> str:
    """Render as ``a + b*sqrt3 + c*i + d*sqrt3*i``, omitting zero parts."""
    parts: list[str] = []
    for q, unit in zip(x.components, _UNITS):
        if q == 0:
            continue
        mag = abs(q)
        if unit and mag == 1:
            body = unit
        elif unit:
            body = f"{_format_rational(mag)}*{unit}"
        else:
            body = _format_rational(mag)
        if not parts:
            parts.append(("-" if q < 0 else "") + body)
        else:
            parts.append((" - " if q < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?
        (?P<unit>sqrt3\s*\*\s*i|i\s*\*\s*sqrt3|sqrt3|i)?\s*""",
    re.VERBOSE,
)


def parse_scalar(text: str) -> FieldElement:
    """Parse the grammar produced by :func:`format_scalar`.

    Accepts any signed sum of terms ``[p/q][*]unit`` where unit is one of
    ``sqrt3``, ``i``, ``sqrt3*i`` (or empty for a rational term).
    """
    s = text.strip()
    if not s:
        raise ValueError("empty scalar")
    comps = [Fraction(0)] * 4
    pos = 0
    first = True
    while pos < len(s):
        m = _TERM.match(s, pos)
        if m is None or m.end() == pos:
            raise ValueError(f"cannot parse scalar {text!r} at {pos}")
        sign, coef, unit = m.group("sign"), m.group("coef"), m.group("unit")
        if sign is None and not first:
            raise ValueError(f"missing operator in {text!r}")
        if coef is None and unit is None:
            raise ValueError(f"dangling sign in {text!r}")
        value = Fraction(coef) if coef is not None else Fraction(1)
        if sign == "-":
            value = -value
        key = (unit or "").replace(" ", "")
        if key == "i*sqrt3":
            key = "sqrt3*i"
        comps[_UNITS.index(key)] += value
        pos = m.end()
        first = False
    return FieldElement(*comps)
