# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Invariants of the modular curve of the Hecke congruence subgroup Γ₀(n).

The index, elliptic point counts, cusp count and genus are computed from
the classical product formulas. The elliptic counts can also be obtained
by brute-force residue counting (`elliptic_congruence_oracle`), which the
test suite uses to pin the formulas down.

Examples
--------
>>> gamma0_invariants(11)
InvariantTable(n=11, mu=12, nu2=0, nu3=0, nu_inf=2, genus=1)
"""

import dataclasses
import functools
import math
from fractions import Fraction

from ._errors import ConsistencyError, DomainError
from .arith import divisors, euler_phi, factorize, kronecker

__all__ = [
    "InvariantTable",
    "elliptic_congruence_oracle",
    "gamma0_invariants",
]


@dataclasses.dataclass(frozen=True)
class InvariantTable:
    """
    Invariants of the compactified modular curve X₀(n).

    Attributes
    ----------
    n : int
        The level.
    mu : int
        The index of Γ₀(n) in PSL(2, Z).
    nu2, nu3 : int
        The numbers of elliptic points of order 2 and 3.
    nu_inf : int
        The number of cusps.
    genus : int
        The genus.
    """

    n: int
    mu: int
    nu2: int
    nu3: int
    nu_inf: int
    genus: int

    def as_dict(self) -> dict[str, int]:
        """Return the table as a dict in field order."""
        return dataclasses.asdict(self)


def _index(n: int) -> int:
    mu = n
    for p, _ in factorize(n):
        mu = mu // p * (p + 1)
    return mu


def _elliptic_count(n: int, disc: int, square: int) -> int:
    if n % square == 0:
        return 0
    return math.prod(1 + kronecker(disc, p) for p in factorize(n).primes)


def _cusp_count(n: int) -> int:
    return sum(euler_phi(math.gcd(d, n // d)) for d in divisors(n))


@functools.cache
def gamma0_invariants(n: int) -> InvariantTable:
    """
    Compute the invariants of X₀(n).

    Parameters
    ----------
    n : int
        The level; must be at least 1.

    Returns
    -------
    InvariantTable
        The index, elliptic point counts, cusp count and genus.

    Raises
    ------
    DomainError
        If `n` is not positive.
    ConsistencyError
        If the genus formula does not produce a nonnegative integer.
    """
    if n < 1:
        raise DomainError(f"Level must be a positive integer (got {n})")
    mu = _index(n)
    nu2 = _elliptic_count(n, -1, 4)
    nu3 = _elliptic_count(n, -3, 9)
    nu_inf = _cusp_count(n)
    genus = (
        1
        + Fraction(mu, 12)
        - Fraction(nu2, 4)
        - Fraction(nu3, 3)
        - Fraction(nu_inf, 2)
    )
    if genus.denominator != 1 or genus < 0:
        raise ConsistencyError(
            f"Genus formula for Γ₀({n}) gave {genus} "
            f"(mu={mu}, nu2={nu2}, nu3={nu3}, nu_inf={nu_inf})"
        )
    return InvariantTable(n, mu, nu2, nu3, nu_inf, int(genus))


def elliptic_congruence_oracle(n: int, order: int) -> int:
    """
    Count elliptic points of Γ₀(n) by enumerating residues.

    Returns the number of ``x mod n`` with ``x**2 + 1 = 0 (mod n)`` for
    order 2, or with ``x**2 + x + 1 = 0 (mod n)`` for order 3. This is
    independent of the product formulas used by `gamma0_invariants`.

    Parameters
    ----------
    n : int
        The level; must be at least 1.
    order : int
        2 or 3.

    Returns
    -------
    int
        The number of solutions.

    Raises
    ------
    DomainError
        If `n` is not positive or `order` is not 2 or 3.
    """
    if n < 1:
        raise DomainError(f"Level must be a positive integer (got {n})")
    if order == 2:
        return sum(1 for x in range(n) if (x * x + 1) % n == 0)
    if order == 3:
        return sum(1 for x in range(n) if (x * x + x + 1) % n == 0)
    raise DomainError(f"Elliptic order must be 2 or 3 (got {order})")
