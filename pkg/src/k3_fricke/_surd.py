# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

import cmath
import math
from fractions import Fraction
from typing import Any

from ._errors import DomainError
from .arith import squarefree_decomposition

Rational = int | Fraction


def fraction_as_dict(q: Rational) -> dict[str, int]:
    """Return ``{"num": ..., "den": ...}`` for a rational number."""
    q = Fraction(q)
    return {"num": q.numerator, "den": q.denominator}


def _sign(q: Fraction) -> int:
    return (q > 0) - (q < 0)


class Surd:
    """
    An exact number ``a + b*sqrt(radicand)`` with rational `a` and `b`.

    The radicand is kept squarefree. A negative radicand denotes an
    imaginary square root, so complex quadratic irrationals are covered
    too. Rational values are normalized to ``b == 0, radicand == 1``.

    Arithmetic between two irrational surds requires equal radicands.

    Parameters
    ----------
    a : int or Fraction
        The rational part.
    b : int or Fraction
        The coefficient of the square root.
    radicand : int
        The number under the square root; square factors are moved into
        `b`.
    """

    __slots__ = ("_a", "_b", "_radicand")

    _a: Fraction
    _b: Fraction
    _radicand: int

    def __init__(self, a: Rational = 0, b: Rational = 0, radicand: int = 1):
        a = Fraction(a)
        b = Fraction(b)
        if radicand == 0:
            b = Fraction(0)
            radicand = 1
        else:
            f, radicand = squarefree_decomposition(radicand)
            b *= f
        if radicand == 1:
            a += b
            b = Fraction(0)
        if b == 0:
            radicand = 1
        object.__setattr__(self, "_a", a)
        object.__setattr__(self, "_b", b)
        object.__setattr__(self, "_radicand", radicand)

    def __setattr__(self, name: str, value: Any) -> None:
        raise AttributeError("Surd is immutable")

    @classmethod
    def sqrt(cls, q: Rational) -> "Surd":
        """Return the exact square root of a rational number."""
        q = Fraction(q)
        # sqrt(num/den) = sqrt(num*den)/den; a negative q gives i*sqrt(|q|).
        return cls(0, Fraction(1, q.denominator), q.numerator * q.denominator)

    @property
    def a(self) -> Fraction:
        """The rational part."""
        return self._a

    @property
    def b(self) -> Fraction:
        """The coefficient of the square root."""
        return self._b

    @property
    def radicand(self) -> int:
        """The squarefree radicand (1 for rational values)."""
        return self._radicand

    def is_rational(self) -> bool:
        return self._b == 0

    def is_real(self) -> bool:
        return self._radicand > 0

    def conjugate(self) -> "Surd":
        """Return ``a - b*sqrt(radicand)``."""
        return Surd(self._a, -self._b, self._radicand)

    def norm(self) -> Fraction:
        """Return the product with the conjugate, ``a**2 - b**2*radicand``."""
        return self._a**2 - self._b**2 * self._radicand

    def _coerce(self, other: Any) -> "Surd | None":
        if isinstance(other, Surd):
            return other
        if isinstance(other, int | Fraction):
            return Surd(other)
        return None

    def _common_radicand(self, other: "Surd") -> int:
        if self.is_rational():
            return other._radicand
        if other.is_rational() or other._radicand == self._radicand:
            return self._radicand
        raise DomainError(
            f"Cannot combine surds with radicands {self._radicand} "
            f"and {other._radicand}"
        )

    def __add__(self, other: Any) -> "Surd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self._common_radicand(o)
        return Surd(self._a + o._a, self._b + o._b, m)

    __radd__ = __add__

    def __neg__(self) -> "Surd":
        return Surd(-self._a, -self._b, self._radicand)

    def __sub__(self, other: Any) -> "Surd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other: Any) -> "Surd":
        return (-self) + other

    def __mul__(self, other: Any) -> "Surd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        m = self._common_radicand(o)
        return Surd(
            self._a * o._a + self._b * o._b * m,
            self._a * o._b + self._b * o._a,
            m,
        )

    __rmul__ = __mul__

    def __truediv__(self, other: Any) -> "Surd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        norm = o.norm()
        if norm == 0:
            raise ZeroDivisionError("Surd division by zero")
        num = self * o.conjugate()
        return Surd(num._a / norm, num._b / norm, num._radicand)

    def __rtruediv__(self, other: Any) -> "Surd":
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def sign(self) -> int:
        """Return the sign (-1, 0 or 1) of a real surd."""
        if not self.is_real():
            raise DomainError(f"{self} is not real")
        sa, sb = _sign(self._a), _sign(self._b)
        if sb == 0:
            return sa
        if sa in (0, sb):
            return sb
        return sa if self._a**2 > self._b**2 * self._radicand else sb

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self._a, self._b, self._radicand) == (
            o._a,
            o._b,
            o._radicand,
        )

    def __hash__(self) -> int:
        if self._b == 0:
            return hash(self._a)
        return hash((self._a, self._b, self._radicand))

    def __lt__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __le__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() <= 0

    def __gt__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() > 0

    def __ge__(self, other: Any) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() >= 0

    def __float__(self) -> float:
        if not self.is_real():
            raise DomainError(f"{self} is not real")
        return float(self._a) + float(self._b) * math.sqrt(self._radicand)

    def __complex__(self) -> complex:
        return complex(float(self._a)) + float(self._b) * cmath.sqrt(
            self._radicand
        )

    def __repr__(self) -> str:
        return f"Surd({self._a}, {self._b}, {self._radicand})"

    def __str__(self) -> str:
        if self._b == 0:
            return str(self._a)
        root = f"sqrt({self._radicand})"
        if self._b == 1:
            term = root
        elif self._b == -1:
            term = f"-{root}"
        else:
            term = f"{self._b}*{root}"
        if self._a == 0:
            return term
        if term.startswith("-"):
            return f"{self._a} - {term[1:]}"
        return f"{self._a} + {term}"

    def as_dict(self) -> dict[str, Any]:
        """
        Return the JSON form of the surd.

        The ``approx`` member is a float, or ``[re, im]`` for a non-real
        surd; it is advisory only.
        """
        if self.is_real():
            approx: float | list[float] = float(self)
        else:
            z = complex(self)
            approx = [z.real, z.imag]
        return {
            "a": fraction_as_dict(self._a),
            "b": fraction_as_dict(self._b),
            "radicand": self._radicand,
            "approx": approx,
        }
