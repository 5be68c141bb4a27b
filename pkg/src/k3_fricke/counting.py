# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Counts of finite subgroups of autoequivalences and group presentations.

The piecewise closed formulas in the degree are evaluated from the
factorization of n and, for n ≥ 5, checked against the halved elliptic
point counts of Γ₀(n) on every call.

Examples
--------
>>> [count_involution_classes(d) for d in (2, 4, 6, 8, 10, 130)]
[1, 1, 0, 0, 1, 2]
>>> str(presentation(3, PresentationKind.FRICKE_GROUP))
'Z2 * Z6'
"""

import dataclasses
import enum
import logging
from typing import Any

from ._errors import ConsistencyError, DomainError
from .arith import factorize
from .fricke import fricke_invariants
from .gamma0 import gamma0_invariants

__all__ = [
    "FactorKind",
    "FreeProductPresentation",
    "PresentationKind",
    "SubgroupCount",
    "count_involution_classes",
    "count_subgroups_mod2",
    "presentation",
]

_logger = logging.getLogger(__name__)


def _level_of_degree(two_n: int) -> int:
    if two_n < 2 or two_n % 2 != 0:
        raise DomainError(
            f"Degree must be a positive even integer (got {two_n})"
        )
    return two_n // 2


def _prime_power_count(n: int, special: int, modulus: int) -> int:
    # 2^(a-1) for n = special^l * prod p_i^k_i (l <= 1, p_i = 1 mod
    # modulus, a >= 1); 0 when special^2 divides n or a prime p = -1 mod
    # modulus does.
    f = factorize(n)
    if f.exponent(special) >= 2:
        return 0
    others = [p for p in f.primes if p != special]
    if any(p % modulus == modulus - 1 for p in others) or not others:
        return 0
    return 2 ** (len(others) - 1)


def count_involution_classes(two_n: int) -> int:
    """
    Count conjugacy classes of nontrivial finite subgroups of autoequivalences.

    Every such subgroup is generated by an anti-symplectic involution.

    Parameters
    ----------
    two_n : int
        The degree 2n of the K3 surface.

    Returns
    -------
    int
        1 for n = 1, 2; 0 when 4 or a prime ≡ 3 (mod 4) divides n;
        ``2**(a - 1)`` when ``n = 2**l * p_1**k_1 ... p_a**k_a`` with
        ``l <= 1`` and all ``p_i ≡ 1 (mod 4)``.

    Raises
    ------
    DomainError
        If `two_n` is not a positive even integer.
    ConsistencyError
        If, for n ≥ 5, the count differs from ν₂(n)/2.
    """
    n = _level_of_degree(two_n)
    if n <= 2:
        return 1
    count = _prime_power_count(n, 2, 4)
    if n >= 5:
        nu2 = gamma0_invariants(n).nu2
        if 2 * count != nu2:
            raise ConsistencyError(
                f"Involution classes {count} for degree {two_n} differ "
                f"from nu2/2 = {nu2}/2"
            )
    return count


def _count_z3_classes(n: int) -> int:
    if n <= 4:
        return 0
    count = _prime_power_count(n, 3, 3)
    nu3 = gamma0_invariants(n).nu3
    if 2 * count != nu3:
        raise ConsistencyError(
            f"Z3 classes {count} for level {n} differ from nu3/2 = {nu3}/2"
        )
    return count


@dataclasses.dataclass(frozen=True)
class SubgroupCount:
    """
    Classes of maximal finite subgroups of Aut(D^b(X))/Z[2].

    Every maximal finite subgroup is ``G_s × Z2[1]`` with G_s symplectic.

    Attributes
    ----------
    degree : int
        The degree 2n.
    involution_classes : int
        Classes of nontrivial finite subgroups of Aut(D^b(X)).
    z2_mod2_classes, z3_mod2_classes : int
        Classes of maximal subgroups with G_s ≅ Z2, resp. Z3. Both are 0
        for n = 1, 2, where the unique maximal G_s is Z6, resp. Z4.
    maximal_shape : tuple[str, ...]
        The shapes G_s takes among maximal finite subgroups: ``("Z6",)``
        for n = 1, ``("Z4",)`` for n = 2, otherwise those of "Z2", "Z3"
        that occur, or ``("0",)`` when neither does.
    times_shift : bool
        Always True: every maximal subgroup carries the factor Z2[1].
    realized_by : str or None
        For n = 1, 2, the autoequivalences realizing the classes.
    """

    degree: int
    involution_classes: int
    z2_mod2_classes: int
    z3_mod2_classes: int
    maximal_shape: tuple[str, ...]
    times_shift: bool = True
    realized_by: str | None = None

    def as_dict(self) -> dict[str, Any]:
        d = dataclasses.asdict(self)
        d["maximal_shape"] = list(self.maximal_shape)
        return d


_SMALL_DEGREE_NOTES = {
    1: (
        ("Z6",),
        "the involution class is the covering involution iota of X -> P^2; "
        "Theta generates the maximal Z6, with Theta^3 = iota[1] mod Z[2]",
    ),
    2: (
        ("Z4",),
        "the involution class is Theta^2[-1]; Theta generates the "
        "maximal Z4, with Theta^4 = [2]",
    ),
}


def count_subgroups_mod2(two_n: int) -> SubgroupCount:
    """
    Classify maximal finite subgroups of Aut(D^b(X))/Z[2] up to conjugacy.

    Parameters
    ----------
    two_n : int
        The degree 2n of the K3 surface.

    Returns
    -------
    SubgroupCount
        For n ≥ 3, `z2_mod2_classes` equals `involution_classes` and
        `z3_mod2_classes` is ``2**(a - 1)`` when
        ``n = 3**l * p_1**k_1 ... p_a**k_a`` with ``l <= 1`` and all
        ``p_i ≡ 1 (mod 3)``, and 0 otherwise (including n = 3, 4).

    Raises
    ------
    DomainError
        If `two_n` is not a positive even integer.
    ConsistencyError
        If, for n ≥ 5, a count differs from the halved elliptic count.
    """
    n = _level_of_degree(two_n)
    involutions = count_involution_classes(two_n)
    if n in _SMALL_DEGREE_NOTES:
        shape, note = _SMALL_DEGREE_NOTES[n]
        return SubgroupCount(two_n, involutions, 0, 0, shape, True, note)
    z3 = _count_z3_classes(n)
    shape = tuple(
        name for name, c in (("Z2", involutions), ("Z3", z3)) if c > 0
    ) or ("0",)
    return SubgroupCount(two_n, involutions, involutions, z3, shape)


class FactorKind(enum.Enum):
    """A free factor of a presentation."""

    Z2 = "Z2"
    Z3 = "Z3"
    Z4 = "Z4"
    Z6 = "Z6"
    Z_RING = "Z_ring"
    "A loop around a (-2)-point."

    Z_CHECK = "Z_check"
    "A loop around a real cusp."

    Z_PLAIN = "Z_plain"

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def torsion_order(self) -> int | None:
        return _TORSION.get(self)


_SYMBOLS = {
    FactorKind.Z2: "Z2",
    FactorKind.Z3: "Z3",
    FactorKind.Z4: "Z4",
    FactorKind.Z6: "Z6",
    FactorKind.Z_RING: "Zo",
    FactorKind.Z_CHECK: "Zv",
    FactorKind.Z_PLAIN: "Z",
}

_TORSION = {
    FactorKind.Z2: 2,
    FactorKind.Z3: 3,
    FactorKind.Z4: 4,
    FactorKind.Z6: 6,
}

_KIND_ORDER = list(FactorKind)


class PresentationKind(enum.Enum):
    PI1ORB_Q0 = "pi1orb_Q0"
    "The orbifold fundamental group of the period domain quotient."

    FRICKE_GROUP = "fricke_group"
    "Γ₀⁺(n) itself."

    AUTS_MOD2 = "auts_mod2"
    "Symplectic autoequivalences modulo Z[2] (modulo Z(iota[1]) if n = 1)."


@dataclasses.dataclass(frozen=True)
class FreeProductPresentation:
    """
    A free product of cyclic groups, as a multiset of factors.

    Attributes
    ----------
    group : PresentationKind
        The group presented.
    factors : tuple[tuple[FactorKind, int], ...]
        ``(kind, multiplicity)`` pairs, merged, without zero
        multiplicities, in the order of `FactorKind`.
    hole_orders : tuple[int, ...]
        For each `FactorKind.Z_RING` factor, the elliptic order of its
        (-2)-point in Γ₀⁺(n).
    quotient_by_iota_shift : bool
        True when the group is taken modulo Z(iota[1]) instead of Z[2]
        (degree 2).
    """

    group: PresentationKind
    factors: tuple[tuple[FactorKind, int], ...]
    hole_orders: tuple[int, ...] = ()
    quotient_by_iota_shift: bool = False

    def __post_init__(self) -> None:
        counts = dict.fromkeys(_KIND_ORDER, 0)
        for kind, mult in self.factors:
            if mult < 0:
                raise ConsistencyError(
                    f"Negative multiplicity {mult} of {kind.symbol}"
                )
            counts[kind] += mult
        object.__setattr__(
            self,
            "factors",
            tuple((k, m) for k, m in counts.items() if m > 0),
        )

    def multiplicity(self, kind: FactorKind) -> int:
        return dict(self.factors).get(kind, 0)

    @property
    def free_rank(self) -> int:
        """The number of infinite cyclic factors, decorated or not."""
        return sum(m for k, m in self.factors if k.torsion_order is None)

    @property
    def torsion_orders(self) -> tuple[int, ...]:
        """The orders of the finite factors, with repetition."""
        return tuple(
            k.torsion_order
            for k, m in self.factors
            if k.torsion_order is not None
            for _ in range(m)
        )

    def has_torsion(self) -> bool:
        return bool(self.torsion_orders)

    def fill_holes(self) -> "FreeProductPresentation":
        """Replace each (-2)-point loop by the cyclic group of its order."""
        ring = self.multiplicity(FactorKind.Z_RING)
        if ring != len(self.hole_orders):
            raise ConsistencyError(
                f"{ring} (-2)-point loops but {len(self.hole_orders)} "
                f"recorded orders"
            )
        by_order = {k.torsion_order: k for k in _TORSION}
        filled = [
            (k, m) for k, m in self.factors if k is not FactorKind.Z_RING
        ]
        filled += [(by_order[order], 1) for order in self.hole_orders]
        return FreeProductPresentation(
            self.group, tuple(filled), (), self.quotient_by_iota_shift
        )

    def forget_decorations(self) -> "FreeProductPresentation":
        """Make every decorated copy of Z plain."""
        plain = [
            (FactorKind.Z_PLAIN if k.torsion_order is None else k, m)
            for k, m in self.factors
        ]
        return FreeProductPresentation(
            self.group, tuple(plain), (), self.quotient_by_iota_shift
        )

    def same_factors(self, other: "FreeProductPresentation") -> bool:
        return self.factors == other.factors

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(
            k.symbol if m == 1 else f"{k.symbol}^*{m}"
            for k, m in self.factors
        )

    def as_dict(self) -> dict[str, Any]:
        return {
            "group": self.group.value,
            "factors": [
                {"kind": k.value, "mult": m} for k, m in self.factors
            ],
            "quotient_by_iota_shift": self.quotient_by_iota_shift,
            "text": str(self),
        }


Z2, Z3, Z4, Z6 = FactorKind.Z2, FactorKind.Z3, FactorKind.Z4, FactorKind.Z6
ZO, ZV, Z = FactorKind.Z_RING, FactorKind.Z_CHECK, FactorKind.Z_PLAIN

# Levels 1 to 4, keyed by presentation kind.
_SMALL_PRESENTATIONS = {
    PresentationKind.PI1ORB_Q0: {
        1: ((ZO, 1), (Z3, 1)),
        2: ((ZO, 1), (Z4, 1)),
        3: ((ZO, 2),),
        4: ((ZO, 1), (ZV, 1)),
    },
    PresentationKind.FRICKE_GROUP: {
        1: ((Z2, 1), (Z3, 1)),
        2: ((Z2, 1), (Z4, 1)),
        3: ((Z2, 1), (Z6, 1)),
        4: ((Z2, 1), (Z, 1)),
    },
    PresentationKind.AUTS_MOD2: {
        1: ((Z, 1), (Z3, 1)),
        2: ((Z, 1), (Z4, 1)),
        3: ((Z, 2),),
        4: ((Z, 2),),
    },
}


def presentation(
    n: int, which: PresentationKind | str
) -> FreeProductPresentation:
    """
    Return a free-product presentation at level n.

    Parameters
    ----------
    n : int
        The level (half the degree).
    which : PresentationKind or str
        `PresentationKind.PI1ORB_Q0` for the orbifold fundamental group of
        Γ₀⁺(n) acting on the period domain with (-2)-points removed,
        `PresentationKind.FRICKE_GROUP` for Γ₀⁺(n), and
        `PresentationKind.AUTS_MOD2` for symplectic autoequivalences
        modulo even shifts.

    Returns
    -------
    FreeProductPresentation
        For n ≥ 5, with ν, g from Γ₀(n) and ξ = ξ(n):
        ``Z2^(ν₂/2) * Z3^(ν₃/2) * Zo^ξ * Zv^(ν∞/2 - 1) * Z^(g + 1 - ξ/2)``,
        ``Z2^(ν₂/2 + ξ) * Z3^(ν₃/2) * Z^(g + (ν∞ - ξ)/2)`` and
        ``Z2^(ν₂/2) * Z3^(ν₃/2) * Z^(g + (ν∞ + ξ)/2)`` respectively.

    Raises
    ------
    DomainError
        If `n` is not positive.
    """
    try:
        which = PresentationKind(which)
    except ValueError as e:
        raise DomainError(f"Unknown presentation {which!r}") from e
    table = fricke_invariants(n)
    hole_orders = (
        table.minus_two_points.orders
        if which is PresentationKind.PI1ORB_Q0
        else ()
    )
    iota = n == 1 and which is PresentationKind.AUTS_MOD2
    if n in _SMALL_PRESENTATIONS[which]:
        return FreeProductPresentation(
            which, _SMALL_PRESENTATIONS[which][n], hole_orders, iota
        )
    x, g = table.xi, table.base.genus
    half_nu2 = table.nu2p - x
    half_nu3 = table.nu3p
    half_nu_inf = table.nu_infp
    if which is PresentationKind.PI1ORB_Q0:
        factors = (
            (Z2, half_nu2),
            (Z3, half_nu3),
            (ZO, x),
            (ZV, half_nu_inf - 1),
            (Z, 2 * table.genus_p),
        )
    elif which is PresentationKind.FRICKE_GROUP:
        factors = (
            (Z2, half_nu2 + x),
            (Z3, half_nu3),
            (Z, g + half_nu_inf - x // 2),
        )
    else:
        factors = (
            (Z2, half_nu2),
            (Z3, half_nu3),
            (Z, g + half_nu_inf + x // 2),
        )
    result = FreeProductPresentation(which, factors, hole_orders)
    _logger.debug("%s(%d) = %s", which.value, n, result)
    return result
