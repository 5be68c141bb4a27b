# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Invariants of the Fricke quotient X₀⁺(n) = Γ₀⁺(n) \\ H*.

The double cover X₀(n) → X₀⁺(n) (n ≥ 2) is ramified at ξ(n) ordinary
points, with ξ given by class numbers. For n ≥ 5 only ordinary points
ramify and the invariants of X₀⁺(n) follow from those of X₀(n); the
levels n ≤ 4 are special and their invariants are tabulated.

Note that for n = 3 the class-number count ξ(3) = h(-3) + h(-12) = 2
while only one of the two ramification points is ordinary; the formulas
using ξ are therefore applied for n ≥ 5 only.
"""

import dataclasses
import functools
from typing import Any

from ._errors import ConsistencyError, DomainError
from .arith import class_number
from .gamma0 import InvariantTable, gamma0_invariants

__all__ = [
    "FrickeTable",
    "MinusTwoCensus",
    "fricke_invariants",
    "xi",
]


@functools.cache
def xi(n: int) -> int:
    """
    Return ξ(n), the number of ordinary ramification points of X₀(n) → X₀⁺(n).

    ``xi(n) = h(-4n)`` if ``n % 4 != 3``, and ``h(-n) + h(-4n)``
    otherwise, where h is the class number of primitive forms.

    Parameters
    ----------
    n : int
        The level; must be at least 1.

    Returns
    -------
    int
        ξ(n).

    Raises
    ------
    DomainError
        If `n` is not positive.
    """
    if n < 1:
        raise DomainError(f"Level must be a positive integer (got {n})")
    if n % 4 == 3:
        return class_number(-n) + class_number(-4 * n)
    return class_number(-4 * n)


@dataclasses.dataclass(frozen=True)
class MinusTwoCensus:
    """
    The (-2)-points on Y₀⁺(n): points fixed by a reflection in a (-2)-vector.

    Attributes
    ----------
    orders : tuple[int, ...]
        The elliptic order on Y₀⁺(n) of each (-2)-point, in increasing
        order.
    """

    orders: tuple[int, ...]

    @property
    def count(self) -> int:
        """The number of (-2)-points."""
        return len(self.orders)

    def as_dict(self) -> dict[str, Any]:
        return {"count": self.count, "orders": list(self.orders)}


@dataclasses.dataclass(frozen=True)
class FrickeTable:
    """
    Invariants of X₀⁺(n).

    Attributes
    ----------
    n : int
        The level.
    xi : int
        ξ(n), exposed for every n even though the formulas below only use
        it for n ≥ 5.
    nu2p, nu3p, nu4p, nu6p : int
        Numbers of elliptic points of order 2, 3, 4, 6.
    nu_infp : int
        Number of cusps.
    genus_p : int
        Genus.
    minus_two_points : MinusTwoCensus
        The (-2)-points and their elliptic orders.
    ramification_points : int
        Number of ramification points of X₀(n) → X₀⁺(n) (0 for n = 1).
    branch_locus : str
        Description of the branch locus.
    base : InvariantTable
        The invariants of X₀(n) the table was derived from.
    """

    n: int
    xi: int
    nu2p: int
    nu3p: int
    nu4p: int
    nu6p: int
    nu_infp: int
    genus_p: int
    minus_two_points: MinusTwoCensus
    ramification_points: int
    branch_locus: str
    base: InvariantTable

    def as_dict(self) -> dict[str, Any]:
        """Return the JSON form, keyed the way the CLI prints it."""
        return {
            "xi": self.xi,
            "nu2_plus": self.nu2p,
            "nu3_plus": self.nu3p,
            "nu4_plus": self.nu4p,
            "nu6_plus": self.nu6p,
            "nu_inf_plus": self.nu_infp,
            "genus_plus": self.genus_p,
            "minus_two_points": self.minus_two_points.as_dict(),
            "ramification_points": self.ramification_points,
            "branch_locus": self.branch_locus,
        }


# (nu2p, nu3p, nu4p, nu6p, nu_infp, (-2)-point orders, ramification, branch)
_SMALL_LEVELS = {
    1: (1, 1, 0, 0, 1, (2,), 0, "none (X₀⁺(1) = X₀(1))"),
    2: (
        1, 0, 1, 0, 1, (2,), 2,
        "an elliptic point of order 2 (over an ordinary point) and an "
        "elliptic point of order 4 (over the elliptic point of order 2)",
    ),
    3: (
        1, 0, 0, 1, 1, (2, 6), 2,
        "an elliptic point of order 2 (over an ordinary point) and an "
        "elliptic point of order 6 (over the elliptic point of order 3)",
    ),
    4: (
        1, 0, 0, 0, 2, (2,), 2,
        "an elliptic point of order 2 (over an ordinary point) and a "
        "cusp",
    ),
}  # fmt: skip


def _half(count: int, what: str, n: int) -> int:
    if count % 2 != 0:
        raise ConsistencyError(
            f"Cannot halve odd count {what}={count} for level {n}"
        )
    return count // 2


@functools.cache
def fricke_invariants(n: int) -> FrickeTable:
    """
    Compute the invariants of X₀⁺(n) and its (-2)-point census.

    Parameters
    ----------
    n : int
        The level; must be at least 1.

    Returns
    -------
    FrickeTable
        The invariants. For n ≤ 4 these are the tabulated values; for
        n ≥ 5 they are ``nu2p = nu2/2 + xi``, ``nu3p = nu3/2``,
        ``nu_infp = nu_inf/2`` and ``2*genus_p = g + 1 - xi/2``, with
        ξ(n) (-2)-points, all of order 2.

    Raises
    ------
    DomainError
        If `n` is not positive.
    ConsistencyError
        If a count that must be even is odd.
    """
    base = gamma0_invariants(n)
    x = xi(n)
    if n in _SMALL_LEVELS:
        nu2p, nu3p, nu4p, nu6p, nu_infp, orders, ram, branch = _SMALL_LEVELS[
            n
        ]
        return FrickeTable(
            n=n,
            xi=x,
            nu2p=nu2p,
            nu3p=nu3p,
            nu4p=nu4p,
            nu6p=nu6p,
            nu_infp=nu_infp,
            genus_p=0,
            minus_two_points=MinusTwoCensus(orders),
            ramification_points=ram,
            branch_locus=branch,
            base=base,
        )
    twice_genus_p = base.genus + 1 - _half(x, "xi", n)
    if twice_genus_p < 0:
        raise ConsistencyError(
            f"g + 1 - xi/2 = {twice_genus_p} is negative for level {n}"
        )
    return FrickeTable(
        n=n,
        xi=x,
        nu2p=_half(base.nu2, "nu2", n) + x,
        nu3p=_half(base.nu3, "nu3", n),
        nu4p=0,
        nu6p=0,
        nu_infp=_half(base.nu_inf, "nu_inf", n),
        genus_p=_half(twice_genus_p, "g + 1 - xi/2", n),
        minus_two_points=MinusTwoCensus((2,) * x),
        ramification_points=x,
        branch_locus=f"{x} elliptic points of order 2 over ordinary points",
        base=base,
    )
