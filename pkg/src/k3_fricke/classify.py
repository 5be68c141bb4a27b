# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Dynamical type of autoequivalence classes, read off from Γ₀⁺(n).

Every non-identity element of Γ₀⁺(n) is of finite order, (-2)-reducible
(an involution about a (-2)-point, induced by a spherical twist),
0-reducible (parabolic, fixing an isotropic class) or pseudo-Anosov
(hyperbolic, with spectral radius > 1). Elliptic elements of order > 2
whose fixed point is nevertheless a (-2)-point are reported separately
as `EllipticAtMinusTwoPoint`; this happens for the elements of order 3
and 6 of Γ₀⁺(3).

Examples
--------
>>> from k3_fricke.fricke_group import fricke_involution, translation
>>> classify_element(fricke_involution(7)).delta
MukaiVector(r=1, d=0, s=1, n=7)
>>> classify_element(translation(7)).w
MukaiVector(r=0, d=0, s=1, n=7)
"""

import dataclasses
import logging
import math
from fractions import Fraction
from typing import Any, ClassVar

from ._errors import ConsistencyError, DomainError
from ._lattice import MukaiVector
from ._surd import Surd, fraction_as_dict
from .fricke_group import (
    Cusp,
    DetTag,
    FrickeElement,
    HPoint,
    TraceClass,
    fixed_point,
    involution_from_vector,
    is_minus_two_point,
    make_element,
    trace_class,
)
from .mukai import eigen_data, induced_isometry

__all__ = [
    "CuspStabilizer",
    "EllipticAtMinusTwoPoint",
    "FiniteOrder",
    "MinusTwoReducible",
    "PolychotomyResult",
    "PseudoAnosov",
    "ZeroReducible",
    "classify_element",
    "cusp_stabilizer",
]

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class _Classified:
    element: FrickeElement
    trace_class: TraceClass

    type_name: ClassVar[str] = ""

    def payload(self) -> dict[str, Any]:
        raise NotImplementedError

    def approx(self) -> dict[str, Any]:
        return {}

    def as_dict(self) -> dict[str, Any]:
        """
        Return the JSON form printed by ``k3-fricke classify``.

        The variant's own fields sit next to ``type``; the classified
        element and its trace class go under ``data`` and float
        approximations under ``approx``.
        """
        return {
            "type": self.type_name,
            **self.payload(),
            "data": {
                "element": self.element.as_dict(),
                "trace_class": self.trace_class.as_dict(),
            },
            "approx": self.approx(),
        }


@dataclasses.dataclass(frozen=True)
class FiniteOrder(_Classified):
    """An elliptic element whose fixed point is not a (-2)-point."""

    order: int
    fixed_point: HPoint

    type_name: ClassVar[str] = "FiniteOrder"

    def payload(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "fixed_point": self.fixed_point.as_dict(),
        }

    def approx(self) -> dict[str, Any]:
        z = complex(self.fixed_point.as_surd())
        return {"fixed_point": [z.real, z.imag]}


@dataclasses.dataclass(frozen=True)
class MinusTwoReducible(_Classified):
    """An involution induced by the reflection in a (-2)-vector."""

    delta: MukaiVector

    type_name: ClassVar[str] = "MinusTwoReducible"

    def payload(self) -> dict[str, Any]:
        return {"delta": self.delta.as_list()}


@dataclasses.dataclass(frozen=True)
class ZeroReducible(_Classified):
    """A parabolic element fixing the primitive isotropic vector `w`."""

    w: MukaiVector

    type_name: ClassVar[str] = "ZeroReducible"

    def payload(self) -> dict[str, Any]:
        return {"w": self.w.as_list()}


@dataclasses.dataclass(frozen=True)
class PseudoAnosov(_Classified):
    """A hyperbolic element; the spectral radius exceeds 1."""

    spectral_radius: Surd

    type_name: ClassVar[str] = "PseudoAnosov"

    def payload(self) -> dict[str, Any]:
        return {"spectral_radius": self.spectral_radius.as_dict()}

    def approx(self) -> dict[str, Any]:
        return {"spectral_radius": float(self.spectral_radius)}


@dataclasses.dataclass(frozen=True)
class EllipticAtMinusTwoPoint(_Classified):
    """
    An elliptic element of order > 2 fixing a (-2)-point.

    Attributes
    ----------
    order : int
        The order of the element.
    delta : MukaiVector
        The (-2)-vector whose reflection induces the involution in the
        stabilizer of the fixed point.
    """

    order: int
    delta: MukaiVector

    type_name: ClassVar[str] = "EllipticAtMinusTwoPoint"

    def payload(self) -> dict[str, Any]:
        return {
            "order": self.order,
            "delta_of_stabilizing_involution": self.delta.as_list(),
        }


PolychotomyResult = (
    FiniteOrder
    | MinusTwoReducible
    | ZeroReducible
    | PseudoAnosov
    | EllipticAtMinusTwoPoint
)


def _fixed_isotropic_vector(g: FrickeElement) -> MukaiVector:
    n = g.n
    w = MukaiVector(2 * g.r, g.p - g.s, -2 * n * g.q, n).primitive_part()
    if w.square() != 0 or induced_isometry(g).apply(w) != w:
        raise ConsistencyError(
            f"Parabolic element {g.entries} gave {tuple(w)}, which is not "
            f"a fixed isotropic vector"
        )
    return w


def classify_element(g: FrickeElement) -> PolychotomyResult:
    """
    Classify a non-identity element of Γ₀⁺(n).

    Parameters
    ----------
    g : FrickeElement
        The element.

    Returns
    -------
    PolychotomyResult
        `PseudoAnosov` for hyperbolic, `ZeroReducible` for parabolic
        elements. Elliptic elements are `MinusTwoReducible` when they are
        involutions in Γ₀(n)w_n about a (-2)-point, `FiniteOrder` when the
        fixed point is not a (-2)-point, and `EllipticAtMinusTwoPoint`
        otherwise.

    Raises
    ------
    DomainError
        If `g` is the identity.
    """
    if g.is_identity():
        raise DomainError("The identity has no dynamical type")
    tc = trace_class(g)
    if tc.is_hyperbolic:
        radius = eigen_data(induced_isometry(g), g).spectral_radius
        if radius <= 1:
            raise ConsistencyError(
                f"Hyperbolic {g.entries} has spectral radius {radius}"
            )
        result: PolychotomyResult = PseudoAnosov(g, tc, radius)
    elif tc.is_parabolic:
        result = ZeroReducible(g, tc, _fixed_isotropic_vector(g))
    else:
        assert tc.order is not None
        cert = is_minus_two_point(g)
        if cert is None:
            result = FiniteOrder(g, tc, tc.order, fixed_point(g))
        elif tc.order > 2:
            result = EllipticAtMinusTwoPoint(g, tc, tc.order, cert.delta)
        elif not g.in_fricke_coset():
            # A cyclic stabilizer holds a single involution.
            raise ConsistencyError(
                f"Involution {g.entries} of Γ₀({g.n}) fixes the (-2)-point "
                f"of {tuple(cert.delta)}"
            )
        elif involution_from_vector(g.n, cert.delta) != g:
            raise ConsistencyError(
                f"{tuple(cert.delta)} does not reproduce {g.entries}"
            )
        else:
            result = MinusTwoReducible(g, tc, cert.delta)
    _logger.debug("%s (n=%d): %s", g.entries, g.n, result.type_name)
    return result


@dataclasses.dataclass(frozen=True)
class CuspStabilizer:
    """
    The infinite cyclic image in Γ₀⁺(n) of the autoequivalences fixing `w`.

    Attributes
    ----------
    w : MukaiVector
        The primitive isotropic vector.
    cusp : Cusp
        The cusp determined by `w`.
    generator : FrickeElement
        The parabolic generator of the stabilizer of `cusp`.
    width : Fraction
        The translation length of `generator`, conjugated to ∞.
    kernel : str
        The kernel of the map to Z, as a symbolic label.
    """

    w: MukaiVector
    cusp: Cusp
    generator: FrickeElement
    width: Fraction
    kernel: str

    def as_dict(self) -> dict[str, Any]:
        return {
            "w": self.w.as_list(),
            "cusp": self.cusp.as_dict()["cusp"],
            "generator": self.generator.as_dict(),
            "width": fraction_as_dict(self.width),
            "kernel": self.kernel,
        }


def _cusp_of(w: MukaiVector) -> tuple[int, int]:
    # Isotropic w is proportional to (c², ac, n a²) for the cusp a/c.
    if w.r == 0:
        return 1, 0
    x = Fraction(w.d, w.r)
    return x.numerator, x.denominator


def _fricke_width(n: int, a: int, c: int, bound: int) -> int | None:
    # Fricke-coset parabolics fixing a/c are k(I + (j/k)N), n = k².
    k = math.isqrt(n)
    if n == 1 or k * k != n:
        return None
    for j in range(1, bound):
        if (
            (j * c * c) % n == 0
            and (k - j * a * c) % n == 0
            and (k + j * a * c) % n == 0
        ):
            return j
    return None


def cusp_stabilizer(n: int, w: MukaiVector) -> CuspStabilizer:
    """
    Return the generator of the stabilizer in Γ₀⁺(n) of the cusp of `w`.

    The cusp of ``w = (r, d, s)`` is ``d/r`` (∞ when ``r == 0``). If
    ``A = (a b; c d')`` moves ∞ to the cusp, the parabolic elements fixing
    it are ``A (1 h; 0 1) A⁻¹``. The smallest positive width h is found
    among elements of Γ₀(n) and, when n is a square, of Γ₀(n)w_n. The
    generator returned is ``A (1 h; 0 1) A⁻¹`` with h > 0, except at the
    cusp 0 where it is ``(1 0; h 1)`` with h > 0. Sign normalization by
    `make_element` may negate the stored entries.

    Parameters
    ----------
    n : int
        The level.
    w : MukaiVector
        A nonzero primitive isotropic vector of the degree-2n lattice.

    Returns
    -------
    CuspStabilizer

    Raises
    ------
    DomainError
        If `w` is zero, not isotropic, or not primitive.
    """
    if w.n != n:
        raise DomainError(f"Vector of degree {2 * w.n} used at level {n}")
    if w.is_zero():
        raise DomainError("w must be nonzero")
    if w.square() != 0:
        raise DomainError(f"{tuple(w)} has square {w.square()}, not 0")
    if not w.is_primitive():
        raise DomainError(f"{tuple(w)} is not primitive")
    a, c = _cusp_of(w)
    h_unit = n // math.gcd(n, c * c)
    k = math.isqrt(n)
    j = _fricke_width(n, a, c, k * h_unit)
    sign = 1 if a != 0 else -1
    if j is None:
        h = sign * h_unit
        gen = make_element(
            n, 1 - h * a * c, h * a * a, -h * c * c, 1 + h * a * c,
            DetTag.UNIT,
        )  # fmt: skip
        width = Fraction(h_unit)
    else:
        j *= sign
        gen = make_element(
            n, k - j * a * c, j * a * a, -j * c * c, k + j * a * c,
            DetTag.FRICKE,
        )  # fmt: skip
        width = Fraction(abs(j), k)
    if induced_isometry(gen).apply(w) != w:
        raise ConsistencyError(
            f"Stabilizer generator {gen.entries} does not fix {tuple(w)}"
        )
    cusp = Cusp(None) if c == 0 else Cusp(Fraction(a, c))
    _logger.debug("cusp %s of %s: generator %s", cusp, tuple(w), gen.entries)
    kernel = "<I(D^b(X)), iota>" if n == 1 else "I(D^b(X))"
    return CuspStabilizer(w, cusp, gen, width, kernel)
