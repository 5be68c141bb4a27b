# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
The lattice N(X) ≅ Z³ of a degree-2n K3 surface with its Mukai pairing.

Vectors are ``(r, d, s)`` and the Gram matrix is
``[[0, 0, -1], [0, 2n, 0], [-1, 0, 0]]``. Isometries act on column
vectors. An element of Γ₀⁺(n) induces an isometry of N(X) that is defined
up to sign; `induced_isometry` returns the representative of determinant
+1.

Examples
--------
>>> pairing(MukaiVector(1, 1, 1, 2), MukaiVector(1, 1, 1, 2))
2
>>> reflection(MukaiVector(1, 0, 1, 5)).rows
((0, 0, -1), (0, 1, 0), (-1, 0, 0))
"""

import dataclasses
import logging
from collections.abc import Sequence
from fractions import Fraction
from typing import Any

from ._errors import ConsistencyError, DomainError
from ._lattice import MukaiVector, pairing
from ._surd import Surd, fraction_as_dict
from .fricke_group import (
    DetTag,
    FrickeElement,
    compose,
    fricke_involution,
    translation,
)

__all__ = [
    "EigenData",
    "LatticeIsometry",
    "MukaiVector",
    "det_disc",
    "discriminant_action",
    "eigen_data",
    "gram_matrix",
    "induced_isometry",
    "is_isometry",
    "pairing",
    "reflection",
    "tensor_matrix",
    "theta_element",
    "twist_matrix",
    "unipotency_index",
]

_logger = logging.getLogger(__name__)

Rows = tuple[tuple[int, int, int], ...]


def gram_matrix(n: int) -> Rows:
    """Return the Gram matrix of the degree-2n Mukai pairing."""
    if n < 1:
        raise DomainError(f"Degree 2n needs n >= 1 (got n={n})")
    return ((0, 0, -1), (0, 2 * n, 0), (-1, 0, 0))


def _matmul(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Rows:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3))
        for i in range(3)
    )


def _transpose(a: Sequence[Sequence[int]]) -> Rows:
    return tuple(tuple(a[i][j] for i in range(3)) for j in range(3))


def _det3(m: Sequence[Sequence[int]]) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def is_isometry(matrix: Sequence[Sequence[int]], n: int) -> bool:
    """Return whether ``M.T @ G @ M == G`` for the degree-2n Gram matrix."""
    g = gram_matrix(n)
    return _matmul(_matmul(_transpose(matrix), g), matrix) == g


_IDENTITY: Rows = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclasses.dataclass(frozen=True)
class LatticeIsometry:
    """
    An isometry of N(X), as a 3×3 integer matrix acting on columns.

    Attributes
    ----------
    rows : tuple[tuple[int, int, int], ...]
        The matrix rows.
    n : int
        Half the degree; fixes the pairing preserved.
    """

    rows: Rows
    n: int

    def __post_init__(self) -> None:
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        if len(rows) != 3 or any(len(row) != 3 for row in rows):
            raise DomainError(f"Expected a 3×3 matrix (got {self.rows})")
        object.__setattr__(self, "rows", rows)
        if not is_isometry(rows, self.n):
            raise DomainError(
                f"{rows} does not preserve the degree-{2 * self.n} pairing"
            )

    @classmethod
    def identity(cls, n: int) -> "LatticeIsometry":
        return cls(_IDENTITY, n)

    @property
    def det(self) -> int:
        """The determinant, +1 or -1."""
        return _det3(self.rows)

    def is_identity(self) -> bool:
        return self.rows == _IDENTITY

    def __neg__(self) -> "LatticeIsometry":
        return LatticeIsometry(
            tuple(tuple(-x for x in row) for row in self.rows), self.n
        )

    def __matmul__(self, other: "LatticeIsometry") -> "LatticeIsometry":
        if other.n != self.n:
            raise DomainError(
                f"Cannot compose isometries of degrees {2 * self.n} and "
                f"{2 * other.n}"
            )
        return LatticeIsometry(_matmul(self.rows, other.rows), self.n)

    @property
    def representatives(self) -> tuple["LatticeIsometry", "LatticeIsometry"]:
        """The pair ``(M, -M)`` of matrices inducing the same action."""
        return (self, -self)

    def same_up_to_sign(self, other: "LatticeIsometry") -> bool:
        return self.n == other.n and other.rows in (self.rows, (-self).rows)

    def apply(self, v: MukaiVector) -> MukaiVector:
        """Return ``M @ v``."""
        if v.n != self.n:
            raise DomainError(
                f"Vector of degree {2 * v.n} given to an isometry of "
                f"degree {2 * self.n}"
            )
        x = tuple(v)
        return MukaiVector(
            *(sum(row[j] * x[j] for j in range(3)) for row in self.rows),
            self.n,
        )

    def as_list(self) -> list[list[int]]:
        return [list(row) for row in self.rows]


def _induced_entries(p: int, q: int, r: int, s: int, n: int) -> list:
    # Quadratic in the entries; for the integer model of the Fricke coset
    # every entry is then divided by det = n.
    return [
        [s * s, 2 * r * s, Fraction(r * r, n)],
        [q * s, p * s + q * r, Fraction(p * r, n)],
        [n * q * q, 2 * n * p * q, p * p],
    ]


def induced_isometry(g: FrickeElement) -> LatticeIsometry:
    """
    Return the isometry of N(X) induced by an element of Γ₀⁺(n).

    For ``g = (p q; r s)`` of determinant 1 this is
    ``[[s², 2rs, r²/n], [qs, ps+qr, pr/n], [nq², 2npq, p²]]``. For the
    integer model of a Fricke-coset element the same expressions in the
    true entries are used, which amounts to dividing by n.

    Returns
    -------
    LatticeIsometry
        The representative of determinant +1; its negative is available
        as ``-M`` or through `LatticeIsometry.representatives`.

    Raises
    ------
    ConsistencyError
        If an entry is not integral or the result is not an isometry of
        determinant 1.
    """
    n, det = g.n, g.det
    entries = [
        [Fraction(x, det) for x in row]
        for row in _induced_entries(g.p, g.q, g.r, g.s, n)
    ]
    if any(x.denominator != 1 for row in entries for x in row):
        raise ConsistencyError(
            f"Induced isometry of {g.entries} (level {n}) is not integral: "
            f"{entries}"
        )
    rows = tuple(tuple(int(x) for x in row) for row in entries)
    if not is_isometry(rows, n) or _det3(rows) != 1:
        raise ConsistencyError(
            f"Induced matrix {rows} of {g.entries} is not an isometry of "
            f"determinant 1"
        )
    return LatticeIsometry(rows, n)


def reflection(delta: MukaiVector) -> LatticeIsometry:
    """
    Return the reflection ``x -> x + (x.δ) δ`` in a (-2)-vector.

    Raises
    ------
    DomainError
        If δ is not a (-2)-vector.
    """
    if delta.square() != -2:
        raise DomainError(
            f"{tuple(delta)} has square {delta.square()}, not -2"
        )
    n = delta.n
    d = tuple(delta)
    g = gram_matrix(n)
    gd = tuple(sum(g[i][j] * d[j] for j in range(3)) for i in range(3))
    rows = tuple(
        tuple(_IDENTITY[i][j] + d[i] * gd[j] for j in range(3))
        for i in range(3)
    )
    return LatticeIsometry(rows, n)


def tensor_matrix(n: int) -> LatticeIsometry:
    """
    Return the action of tensoring with O_X(1).

    This is ``(r, d, s) -> (r, r + d, nr + 2nd + s)``.
    """
    return induced_isometry(translation(n))


def twist_matrix(n: int) -> LatticeIsometry:
    """Return the action of the spherical twist in O_X."""
    return reflection(MukaiVector(1, 0, 1, n))


def theta_element(n: int) -> FrickeElement:
    """
    Return the image in Γ₀⁺(n) of tensoring with O_X(1) after T_{O_X}.

    Its order in PSL(2, R) is 3, 4, 6 for n = 1, 2, 3; it is parabolic for
    n = 4 and hyperbolic beyond.
    """
    return compose(translation(n), fricke_involution(n))


def discriminant_action(m: LatticeIsometry) -> int:
    """
    Return the multiplier of `m` on the discriminant group Z/2n.

    The group is generated by the class of ``(0, 1/(2n), 0)``, whose image
    has middle coordinate ``m[1][1] / (2n)``.

    Returns
    -------
    int
        The multiplier as a residue in ``range(2n)``.
    """
    n = m.n
    column = (m.rows[0][1], m.rows[1][1], m.rows[2][1])
    if column[0] % (2 * n) != 0 or column[2] % (2 * n) != 0:
        raise ConsistencyError(
            f"{m.rows} does not preserve the dual lattice of degree {2 * n}"
        )
    return column[1] % (2 * n)


def det_disc(g: FrickeElement) -> int:
    """
    Return ``det(M) * disc(M)`` for the isometry induced by `g`.

    The product does not depend on the sign of M, and is +1 exactly on
    Γ₀(n).

    Raises
    ------
    DomainError
        If n < 2.
    ConsistencyError
        If the computed value disagrees with the coset of `g`.
    """
    n = g.n
    if n < 2:
        raise DomainError(f"det·disc needs level n >= 2 (got {n})")
    m = induced_isometry(g)
    mult = discriminant_action(m)
    if mult == 1:
        disc = 1
    elif mult == 2 * n - 1:
        disc = -1
    else:
        raise ConsistencyError(
            f"Discriminant multiplier of {g.entries} is {mult}, not ±1 "
            f"mod {2 * n}"
        )
    value = m.det * disc
    expected = 1 if g.det_tag is DetTag.UNIT else -1
    if value != expected:
        raise ConsistencyError(
            f"det·disc of {g.entries} is {value} but its tag is "
            f"{g.det_tag.value}"
        )
    return value


def unipotency_index(m: LatticeIsometry) -> int | None:
    """
    Return the least k with ``(M - I)**k == 0``, or None.

    None means M is not unipotent; index 3 means M is a single Jordan
    block of size 3.
    """
    nil = tuple(
        tuple(m.rows[i][j] - _IDENTITY[i][j] for j in range(3))
        for i in range(3)
    )
    zero = ((0, 0, 0),) * 3
    acc = nil
    for k in range(1, 4):
        if acc == zero:
            return k
        acc = _matmul(acc, nil)
    return None


@dataclasses.dataclass(frozen=True)
class EigenData:
    """
    Spectral data of the isometry induced by a non-identity element.

    Attributes
    ----------
    trace_squared : Fraction
        t², the squared trace of the true element.
    eigen_one_vector : MukaiVector
        A primitive generator of the 1-eigenspace.
    eigen_one_square : int
        ``2n(t² - 4)``, the square of the unscaled fixed vector
        ``(2γ, α - δ, -2nβ)`` of the true matrix (α β; γ δ).
    other_eigenvalues : tuple[Surd, Surd]
        ``(t² - 2 ± sqrt(t²(t² - 4)))/2``; complex conjugates for
        elliptic, both 1 for parabolic, real for hyperbolic elements.
    jordan_block_3 : bool
        Whether M is a single Jordan block of size 3 (t² = 4).
    spectral_radius : Surd
        The largest absolute value of an eigenvalue.
    """

    trace_squared: Fraction
    eigen_one_vector: MukaiVector
    eigen_one_square: int
    other_eigenvalues: tuple[Surd, Surd]
    jordan_block_3: bool
    spectral_radius: Surd

    def as_dict(self) -> dict[str, Any]:
        return {
            "trace_squared": fraction_as_dict(self.trace_squared),
            "eigen_one_vector": self.eigen_one_vector.as_list(),
            "eigen_one_square": self.eigen_one_square,
            "other_eigenvalues": [
                mu.as_dict() for mu in self.other_eigenvalues
            ],
            "jordan_block_3": self.jordan_block_3,
            "spectral_radius": self.spectral_radius.as_dict(),
        }


def eigen_data(m: LatticeIsometry, g: FrickeElement) -> EigenData:
    """
    Compute the spectral data of ``m = induced_isometry(g)``.

    Parameters
    ----------
    m : LatticeIsometry
        The induced isometry (either sign representative is accepted for
        the fixed-vector check).
    g : FrickeElement
        The element; must not be the identity.

    Returns
    -------
    EigenData

    Raises
    ------
    DomainError
        If `g` is the identity.
    ConsistencyError
        If the fixed vector is not fixed, its square disagrees with
        ``2n(t² - 4)``, or a parabolic M is not a single Jordan block.
    """
    if g.is_identity():
        raise DomainError("The identity has no distinguished eigenvector")
    n = g.n
    t2 = g.trace_squared
    raw = MukaiVector(2 * g.r, g.p - g.s, -2 * n * g.q, n)
    v = raw.primitive_part()
    if m.apply(v) != v and (-m).apply(v) != v:
        raise ConsistencyError(
            f"{tuple(v)} is not fixed by the isometry {m.rows} of "
            f"{g.entries}"
        )
    square = 2 * n * (t2 - 4)
    # The integer model scales the fixed vector by sqrt(det).
    if raw.square() != g.det * square:
        raise ConsistencyError(
            f"Fixed vector {tuple(raw)} of {g.entries} has square "
            f"{raw.square()}, expected {g.det * square}"
        )
    root = Surd.sqrt(t2 * (t2 - 4))
    mu_plus = (Surd(t2 - 2) + root) / 2
    mu_minus = (Surd(t2 - 2) - root) / 2
    radius = mu_plus if t2 > 4 else Surd(1)
    jordan = t2 == 4 and unipotency_index(m if m.det == 1 else -m) == 3
    if t2 == 4 and not jordan:
        raise ConsistencyError(
            f"Parabolic {g.entries} induces {m.rows}, which is not a single "
            f"unipotent Jordan block"
        )
    _logger.debug(
        "%s: t² = %s, v = %s, ρ = %s", g.entries, t2, tuple(v), radius
    )
    return EigenData(
        trace_squared=t2,
        eigen_one_vector=v,
        eigen_one_square=int(square),
        other_eigenvalues=(mu_plus, mu_minus),
        jordan_block_3=jordan,
        spectral_radius=radius,
    )
