# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Exact elementary number theory.

Factorization by trial division, the multiplicative helpers used by the
modular-curve formulas, the Kronecker symbol, and class numbers of
negative discriminants by enumeration of reduced forms.

Examples
--------
>>> factorize(65).factors
((5, 1), (13, 1))
>>> kronecker(-1, 5), kronecker(-1, 3), kronecker(-1, 2)
(1, -1, 0)
>>> class_number(-47)
5
"""

import dataclasses
import functools
import logging
import math
from collections.abc import Iterator

from ._errors import DomainError

__all__ = [
    "Factorization",
    "QuadraticForm",
    "class_number",
    "divisors",
    "euler_phi",
    "factorize",
    "is_squarefree",
    "kronecker",
    "reduced_forms",
    "squarefree_decomposition",
]

_logger = logging.getLogger(__name__)


def _require_positive(n: int, name: str = "n") -> None:
    if n < 1:
        raise DomainError(f"{name} must be a positive integer (got {n})")


@dataclasses.dataclass(frozen=True)
class Factorization:
    """
    The prime-power decomposition of a positive integer.

    Attributes
    ----------
    n : int
        The factored integer.
    factors : tuple[tuple[int, int], ...]
        Pairs ``(prime, exponent)`` with strictly increasing primes and
        positive exponents. Empty for ``n == 1``.
    """

    n: int
    factors: tuple[tuple[int, int], ...]

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.factors)

    @property
    def primes(self) -> tuple[int, ...]:
        """The distinct prime divisors, in increasing order."""
        return tuple(p for p, _ in self.factors)

    def exponent(self, p: int) -> int:
        """Return the exponent of `p` in `n` (0 if `p` does not divide)."""
        for q, k in self.factors:
            if q == p:
                return k
        return 0

    def product(self) -> int:
        """Multiply the prime powers back together."""
        return math.prod(p**k for p, k in self.factors)


@functools.cache
def factorize(n: int) -> Factorization:
    """
    Factor a positive integer by trial division.

    Parameters
    ----------
    n : int
        The integer to factor; must be at least 1.

    Returns
    -------
    Factorization
        The prime-power decomposition of `n`.

    Raises
    ------
    DomainError
        If `n` is not positive.
    """
    _require_positive(n)
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            k = 0
            while m % p == 0:
                m //= p
                k += 1
            factors.append((p, k))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def divisors(n: int) -> list[int]:
    """Return the positive divisors of `n` in increasing order."""
    divs = [1]
    for p, k in factorize(n):
        divs = [d * p**e for d in divs for e in range(k + 1)]
    return sorted(divs)


def euler_phi(n: int) -> int:
    """Return Euler's totient of `n`."""
    result = n
    for p, _ in factorize(n):
        result -= result // p
    return result


def is_squarefree(n: int) -> bool:
    """Return whether no square of a prime divides `n` (``n != 0``)."""
    return all(k == 1 for _, k in factorize(abs(n)))


def squarefree_decomposition(n: int) -> tuple[int, int]:
    """
    Split a nonzero integer as ``n == f**2 * m`` with `m` squarefree.

    The sign of `n` is carried by `m`.

    Returns
    -------
    tuple[int, int]
        The pair ``(f, m)`` with ``f > 0``.
    """
    if n == 0:
        raise DomainError("Cannot take the squarefree part of 0")
    f = 1
    m = -1 if n < 0 else 1
    for p, k in factorize(abs(n)):
        f *= p ** (k // 2)
        m *= p ** (k % 2)
    return f, m


def _kronecker_at_two(a: int) -> int:
    # The character of discriminant a (or 4a when a is not a
    # discriminant) evaluated at 2.
    if a % 2 == 0 or a % 4 == 3:
        return 0
    return 1 if a % 8 == 1 else -1


def _jacobi(a: int, m: int) -> int:
    # m odd and positive.
    a %= m
    result = 1
    while a:
        while a % 2 == 0:
            a //= 2
            if m % 8 in (3, 5):
                result = -result
        a, m = m, a
        if a % 4 == 3 and m % 4 == 3:
            result = -result
        a %= m
    return result if m == 1 else 0


def kronecker(a: int, m: int) -> int:
    """
    Return the Kronecker symbol ``(a/m)``.

    For odd `m` this is the Jacobi symbol. The factor at 2 is that of the
    quadratic character of discriminant `a` when ``a % 4`` is 0 or 1, and
    of discriminant ``4 * a`` otherwise. In particular ``(-1/2) == 0``
    while ``(-3/2) == -1``, which is the convention the elliptic-point
    counts of Γ₀(n) are written in. The symbol vanishes whenever `a` and
    `m` share a factor.

    Parameters
    ----------
    a : int
        The numerator.
    m : int
        The denominator; must be nonzero.

    Returns
    -------
    int
        One of -1, 0, 1.

    Raises
    ------
    DomainError
        If `m` is zero.
    """
    if m == 0:
        raise DomainError("The Kronecker symbol (a/0) is not supported")
    result = 1
    if m < 0:
        m = -m
        if a < 0:
            result = -result
    while m % 2 == 0:
        m //= 2
        result *= _kronecker_at_two(a)
        if result == 0:
            return 0
    if m == 1:
        return result
    return result * _jacobi(a, m)


@dataclasses.dataclass(frozen=True)
class QuadraticForm:
    """
    The binary quadratic form ``a*X**2 + b*X*Y + c*Y**2``.

    Attributes
    ----------
    a, b, c : int
        The coefficients.
    """

    a: int
    b: int
    c: int

    def __call__(self, x: int, y: int) -> int:
        return self.a * x * x + self.b * x * y + self.c * y * y

    @property
    def discriminant(self) -> int:
        """``b**2 - 4*a*c``."""
        return self.b * self.b - 4 * self.a * self.c

    @property
    def content(self) -> int:
        """The gcd of the coefficients."""
        return math.gcd(self.a, self.b, self.c)

    def is_primitive(self) -> bool:
        """Return whether the coefficients are coprime."""
        return self.content == 1

    def is_positive_definite(self) -> bool:
        """Return whether the form takes only positive nonzero values."""
        return self.discriminant < 0 and self.a > 0

    def is_reduced(self) -> bool:
        """
        Return whether the form is a reduced positive-definite form.

        That is, ``|b| <= a <= c``, with ``b >= 0`` if ``|b| == a`` or
        ``a == c``.
        """
        a, b, c = self.a, self.b, self.c
        if not self.is_positive_definite() or not abs(b) <= a <= c:
            return False
        return b >= 0 or (abs(b) != a and a != c)

    def primitive_part(self) -> "QuadraticForm":
        """Divide out the content (which must be nonzero)."""
        g = self.content
        return QuadraticForm(self.a // g, self.b // g, self.c // g)


def _require_negative_discriminant(D: int) -> None:
    if D >= 0:
        raise DomainError(f"Discriminant must be negative (got {D})")
    if D % 4 not in (0, 1):
        raise DomainError(
            f"Discriminant must be 0 or 1 mod 4 (got {D} = {D % 4} mod 4)"
        )


@functools.cache
def reduced_forms(D: int) -> tuple[QuadraticForm, ...]:
    """
    Enumerate the reduced primitive positive-definite forms of discriminant D.

    The enumeration runs over ``0 < a <= sqrt(|D|/3)`` and ``-a < b <= a``
    with ``b**2 = D (mod 4a)``.

    Parameters
    ----------
    D : int
        A negative discriminant (``D % 4`` is 0 or 1).

    Returns
    -------
    tuple[QuadraticForm, ...]
        The forms, ordered by ``(a, b)``.

    Raises
    ------
    DomainError
        If `D` is not a negative discriminant.
    """
    _require_negative_discriminant(D)
    forms = []
    for a in range(1, math.isqrt(-D // 3) + 1):
        for b in range(-a + 1, a + 1):
            if (b * b - D) % (4 * a) != 0:
                continue
            c = (b * b - D) // (4 * a)
            if c < a or (b < 0 and a == c):
                continue
            if math.gcd(a, b, c) == 1:
                forms.append(QuadraticForm(a, b, c))
    _logger.debug("h(%d) = %d", D, len(forms))
    return tuple(forms)


def class_number(D: int) -> int:
    """
    Return the class number h(D) of primitive forms of discriminant D.

    Parameters
    ----------
    D : int
        A negative discriminant (``D % 4`` is 0 or 1).

    Returns
    -------
    int
        The number of reduced primitive positive-definite forms; at
        least 1 since the principal form is always present.

    Raises
    ------
    DomainError
        If `D` is not a negative discriminant.

    See Also
    --------
    reduced_forms
        The forms being counted.
    """
    return len(reduced_forms(D))
