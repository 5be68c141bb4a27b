# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Existence of cubic fourfolds associated with a degree-2n K3 surface.

For degree 2n ≥ 4, an associated cubic fourfold exists exactly when
n ≥ 7 and Γ₀(n) has elliptic points of order 3. Equivalently, d = 2n
satisfies both of Hassett's conditions: the divisor of special cubic
fourfolds of discriminant d is nonempty, and d admits an associated K3.
Both sides are evaluated and compared on every call.
"""

import dataclasses
import logging
from typing import Any, NamedTuple

from ._errors import ConsistencyError, DomainError
from .arith import factorize
from .gamma0 import gamma0_invariants

__all__ = [
    "CubicVerdict",
    "HassettConditions",
    "has_associated_cubic",
    "hassett_conditions",
]

_logger = logging.getLogger(__name__)


class HassettConditions(NamedTuple):
    nonempty: bool
    """d ≥ 8 and d ≡ 0, 2 (mod 6)."""

    has_k3: bool
    """d is not divisible by 4, 9, or any odd prime p ≡ 2 (mod 3)."""


def hassett_conditions(d: int) -> HassettConditions:
    """
    Evaluate Hassett's conditions on a discriminant.

    Parameters
    ----------
    d : int
        The discriminant; must be positive.

    Returns
    -------
    HassettConditions
        The pair ``(nonempty, has_k3)``.

    Examples
    --------
    >>> hassett_conditions(14)
    HassettConditions(nonempty=True, has_k3=True)
    >>> hassett_conditions(8)
    HassettConditions(nonempty=True, has_k3=False)
    """
    if d < 1:
        raise DomainError(f"Discriminant must be positive (got {d})")
    nonempty = d >= 8 and d % 6 in (0, 2)
    has_k3 = (
        d % 4 != 0
        and d % 9 != 0
        and not any(p % 3 == 2 for p in factorize(d).primes if p != 2)
    )
    return HassettConditions(nonempty, has_k3)


@dataclasses.dataclass(frozen=True)
class CubicVerdict:
    """
    The verdict on associated cubic fourfolds for one degree.

    Attributes
    ----------
    degree : int
        The degree 2n.
    has_associated_cubic : bool
        The verdict (False for degree 2; see `special_case`).
    nu3 : int
        ν₃(n), the number of order-3 elliptic points of Γ₀(n).
    via_nu3 : bool
        ``n >= 7 and nu3 > 0``.
    hassett_nonempty, hassett_has_k3 : bool
        Hassett's conditions at d = 2n.
    special_case : str or None
        For degree 2, the note that such surfaces are associated with
        nodal cubic fourfolds instead.
    """

    degree: int
    has_associated_cubic: bool
    nu3: int
    via_nu3: bool
    hassett_nonempty: bool
    hassett_has_k3: bool
    special_case: str | None = None

    def as_dict(self) -> dict[str, Any]:
        return dataclasses.asdict(self)


_DEGREE_TWO_NOTE = (
    "degree-2 nodal cubic: associated with cubic fourfolds with an "
    "ordinary double point; the order-3 elements are induced by Theta^2"
)


def has_associated_cubic(two_n: int) -> CubicVerdict:
    """
    Decide whether a cubic fourfold is associated with a degree-2n K3.

    Parameters
    ----------
    two_n : int
        The degree; must be a positive even integer.

    Returns
    -------
    CubicVerdict

    Raises
    ------
    DomainError
        If `two_n` is not a positive even integer.
    ConsistencyError
        If, for n ≥ 7, the ν₃ criterion and Hassett's conditions disagree.
    """
    if two_n < 2 or two_n % 2 != 0:
        raise DomainError(
            f"Degree must be a positive even integer (got {two_n})"
        )
    n = two_n // 2
    nu3 = gamma0_invariants(n).nu3
    hassett = hassett_conditions(two_n)
    via_nu3 = n >= 7 and nu3 > 0
    if n >= 7 and via_nu3 != (hassett.nonempty and hassett.has_k3):
        raise ConsistencyError(
            f"Degree {two_n}: nu3 = {nu3} but Hassett conditions are "
            f"{tuple(hassett)}"
        )
    special = _DEGREE_TWO_NOTE if n == 1 else None
    _logger.debug("degree %d: nu3=%d, hassett=%s", two_n, nu3, hassett)
    return CubicVerdict(
        degree=two_n,
        has_associated_cubic=via_nu3,
        nu3=nu3,
        via_nu3=via_nu3,
        hassett_nonempty=hassett.nonempty,
        hassett_has_k3=hassett.has_k3,
        special_case=special,
    )
