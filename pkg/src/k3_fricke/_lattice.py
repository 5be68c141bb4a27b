# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

import dataclasses
import math

from ._errors import DomainError


@dataclasses.dataclass(frozen=True)
class MukaiVector:
    """
    A vector ``(r, d, s)`` of the rank-3 lattice N(X) of a degree-2n K3.

    The pairing is ``(r1,d1,s1).(r2,d2,s2) = 2n*d1*d2 - r1*s2 - r2*s1``.

    Attributes
    ----------
    r, d, s : int
        The rank, degree and Euler-characteristic-like coordinates.
    n : int
        Half the degree of the K3 surface; fixes the pairing.
    """

    r: int
    d: int
    s: int
    n: int

    def __post_init__(self) -> None:
        if self.n < 1:
            raise DomainError(f"Degree 2n needs n >= 1 (got n={self.n})")

    def __iter__(self):
        return iter((self.r, self.d, self.s))

    def __neg__(self) -> "MukaiVector":
        return MukaiVector(-self.r, -self.d, -self.s, self.n)

    def as_list(self) -> list[int]:
        return [self.r, self.d, self.s]

    def pairing(self, other: "MukaiVector") -> int:
        """Return the Mukai pairing with another vector of the same lattice."""
        if other.n != self.n:
            raise DomainError(
                f"Cannot pair vectors of degrees {2 * self.n} and "
                f"{2 * other.n}"
            )
        return (
            2 * self.n * self.d * other.d
            - self.r * other.s
            - other.r * self.s
        )

    def square(self) -> int:
        """Return the self-pairing ``2*(n*d**2 - r*s)``."""
        return self.pairing(self)

    def is_zero(self) -> bool:
        return self.r == self.d == self.s == 0

    def content(self) -> int:
        return math.gcd(self.r, self.d, self.s)

    def is_primitive(self) -> bool:
        return self.content() == 1

    def canonical(self) -> "MukaiVector":
        """Return ``±self`` with the first nonzero coordinate positive."""
        for x in self:
            if x != 0:
                return self if x > 0 else -self
        return self

    def primitive_part(self) -> "MukaiVector":
        """Divide out the content and apply the canonical sign."""
        if self.is_zero():
            raise DomainError("The zero vector has no primitive part")
        g = self.content()
        return MukaiVector(
            self.r // g, self.d // g, self.s // g, self.n
        ).canonical()


def pairing(u: MukaiVector, v: MukaiVector) -> int:
    """
    Return the degree-2n Mukai pairing ``2n*d1*d2 - r1*s2 - r2*s1``.

    Raises
    ------
    DomainError
        If the vectors belong to lattices of different degrees.
    """
    return u.pairing(v)
