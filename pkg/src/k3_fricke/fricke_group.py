# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: TRY003  # Avoid specifying long messages outside exception class

"""
Exact algebra of the Fricke group Γ₀⁺(n) = ⟨Γ₀(n), w_n⟩.

Elements are stored in an integer model: an element of Γ₀(n) is an
integer matrix of determinant 1 (tag `DetTag.UNIT`), and an element
``(1/sqrt(n)) * (p q; r s)`` of the coset Γ₀(n)w_n is stored as the
integer matrix ``(p q; r s)`` of determinant n (tag `DetTag.FRICKE`).
Matrices are taken up to sign, normalized so that the first nonzero entry
is positive.

Examples
--------
>>> w = fricke_involution(3)
>>> w
FrickeElement(n=3, p=0, q=1, r=-3, s=0, det_tag=<DetTag.FRICKE: 'fricke'>)
>>> compose(w, w) == FrickeElement.identity(3)
True
>>> trace_class(make_element(2, 2, -1, 2, 0, DetTag.FRICKE)).order
4
"""

import dataclasses
import enum
import logging
import math
from collections.abc import Iterator
from fractions import Fraction
from typing import Any

from ._errors import ConsistencyError, DomainError
from ._lattice import MukaiVector
from ._surd import Surd, fraction_as_dict
from .arith import QuadraticForm, is_squarefree, squarefree_decomposition

__all__ = [
    "Cusp",
    "DetTag",
    "FrickeElement",
    "HPoint",
    "HyperbolicAxis",
    "Interior",
    "MinusTwoCertificate",
    "TraceClass",
    "TraceKind",
    "act",
    "compose",
    "enumerate_elements",
    "fixed_point",
    "fricke_involution",
    "involution_from_vector",
    "is_minus_two_point",
    "make_element",
    "order",
    "power",
    "trace_class",
    "translation",
    "vector_from_involution",
]

_logger = logging.getLogger(__name__)


class DetTag(enum.Enum):
    """Which coset of Γ₀(n) an element lies in."""

    UNIT = "unit"
    "Determinant 1: an element of Γ₀(n)."

    FRICKE = "fricke"
    "Determinant n: an element of the coset Γ₀(n)w_n (integer model)."


@dataclasses.dataclass(frozen=True)
class FrickeElement:
    """
    An element of Γ₀⁺(n) in the integer model, up to sign.

    Use `make_element` to construct validated, normalized elements.

    Attributes
    ----------
    n : int
        The level.
    p, q, r, s : int
        The integer matrix ``(p q; r s)``.
    det_tag : DetTag
        `DetTag.UNIT` (determinant 1) or `DetTag.FRICKE` (determinant n).
    """

    n: int
    p: int
    q: int
    r: int
    s: int
    det_tag: DetTag

    @classmethod
    def identity(cls, n: int) -> "FrickeElement":
        """Return the identity of Γ₀⁺(n)."""
        return make_element(n, 1, 0, 0, 1, DetTag.UNIT)

    @property
    def det(self) -> int:
        """The determinant of the integer model (1 or n)."""
        return self.n if self.det_tag is DetTag.FRICKE else 1

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.p, self.q, self.r, self.s)

    @property
    def trace(self) -> int:
        """The trace of the integer model (``sqrt(n)`` times the true one)."""
        return self.p + self.s

    @property
    def trace_squared(self) -> Fraction:
        """The squared trace of the true element, ``(p + s)**2 / det``."""
        return Fraction(self.trace**2, self.det)

    def is_identity(self) -> bool:
        return self.entries == (1, 0, 0, 1)

    def in_fricke_coset(self) -> bool:
        """
        Return whether the element lies in Γ₀(n)w_n.

        At level 1 the coset is all of PSL(2, Z).
        """
        return self.n == 1 or self.det_tag is DetTag.FRICKE

    def inverse(self) -> "FrickeElement":
        """Return the inverse (the adjugate matrix, same coset)."""
        return make_element(
            self.n, self.s, -self.q, -self.r, self.p, self.det_tag
        )

    def as_dict(self) -> dict[str, Any]:
        return {
            "n": self.n,
            "matrix": list(self.entries),
            "det": self.det,
        }


def _canonical_sign(
    p: int, q: int, r: int, s: int
) -> tuple[int, int, int, int]:
    for x in (p, q, r, s):
        if x != 0:
            return (p, q, r, s) if x > 0 else (-p, -q, -r, -s)
    return (p, q, r, s)


def make_element(
    n: int, p: int, q: int, r: int, s: int, det_tag: DetTag
) -> FrickeElement:
    """
    Validate and normalize an element of Γ₀⁺(n).

    Parameters
    ----------
    n : int
        The level; must be at least 1.
    p, q, r, s : int
        The integer matrix ``(p q; r s)``.
    det_tag : DetTag
        The expected determinant: `DetTag.UNIT` for 1, `DetTag.FRICKE`
        for n. At level 1 both mean determinant 1 and the element is
        tagged `DetTag.UNIT`.

    Returns
    -------
    FrickeElement
        The element with the first nonzero entry made positive.

    Raises
    ------
    DomainError
        If `n` is not positive, the determinant does not match the tag,
        n does not divide r, or (for the Fricke coset) n does not divide p
        and s.
    """
    if n < 1:
        raise DomainError(f"Level must be a positive integer (got {n})")
    det_tag = DetTag(det_tag)
    if n == 1:
        det_tag = DetTag.UNIT
    det = n if det_tag is DetTag.FRICKE else 1
    if p * s - q * r != det:
        raise DomainError(
            f"Matrix ({p} {q}; {r} {s}) has determinant {p * s - q * r}, "
            f"but tag {det_tag.value} needs {det}"
        )
    if r % n != 0:
        raise DomainError(
            f"Level {n} does not divide the lower-left entry r={r}"
        )
    if det_tag is DetTag.FRICKE and (p % n != 0 or s % n != 0):
        raise DomainError(
            f"Fricke-coset matrix ({p} {q}; {r} {s}) needs {n} to divide "
            f"p and s"
        )
    return FrickeElement(n, *_canonical_sign(p, q, r, s), det_tag)


def _same_level(g: FrickeElement, h: FrickeElement) -> int:
    if g.n != h.n:
        raise DomainError(
            f"Cannot combine elements of levels {g.n} and {h.n}"
        )
    return g.n


def compose(g: FrickeElement, h: FrickeElement) -> FrickeElement:
    """
    Return the product ``g * h`` (apply `h` first, then `g`).

    The integer matrices are multiplied; a product of two Fricke-coset
    elements has determinant n**2 and every entry divisible by n, so it is
    divided by n to land back in Γ₀(n).

    Raises
    ------
    DomainError
        If the levels differ.
    ConsistencyError
        If the product does not reduce to determinant 1 or n.
    """
    n = _same_level(g, h)
    p = g.p * h.p + g.q * h.r
    q = g.p * h.q + g.q * h.s
    r = g.r * h.p + g.s * h.r
    s = g.r * h.q + g.s * h.s
    if g.det_tag is DetTag.FRICKE and h.det_tag is DetTag.FRICKE:
        if any(x % n != 0 for x in (p, q, r, s)):
            raise ConsistencyError(
                f"Product ({p} {q}; {r} {s}) of two Fricke-coset elements "
                f"is not divisible by {n}"
            )
        p, q, r, s = p // n, q // n, r // n, s // n
    det = p * s - q * r
    if det == 1:
        tag = DetTag.UNIT
    elif det == n:
        tag = DetTag.FRICKE
    else:
        raise ConsistencyError(
            f"Product ({p} {q}; {r} {s}) has determinant {det}, "
            f"expected 1 or {n}"
        )
    try:
        return make_element(n, p, q, r, s, tag)
    except DomainError as e:
        raise ConsistencyError(f"Product left Γ₀⁺({n}): {e}") from e


def power(g: FrickeElement, k: int) -> FrickeElement:
    """Return ``g**k``; negative `k` uses the inverse."""
    if k < 0:
        return power(g.inverse(), -k)
    result = FrickeElement.identity(g.n)
    base = g
    while k:
        if k & 1:
            result = compose(result, base)
        base = compose(base, base)
        k >>= 1
    return result


def _unit_candidates(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    for q in range(-bound, bound + 1):
        yield (1, q, 0, 1)
    for r in range(n, bound + 1, n):
        for r_signed in (r, -r):
            for p in range(-bound, bound + 1):
                for s in range(-bound, bound + 1):
                    num = p * s - 1
                    if num % r_signed == 0 and abs(num // r_signed) <= bound:
                        yield (p, num // r_signed, r_signed, s)


def _fricke_candidates(n: int, bound: int) -> Iterator[tuple[int, ...]]:
    # (n p', q; n r', n s') with n p' s' - q r' = 1; r' = 0 is impossible.
    k = bound // n
    for r1 in (*range(-k, 0), *range(1, k + 1)):
        for p1 in range(-k, k + 1):
            for s1 in range(-k, k + 1):
                num = n * p1 * s1 - 1
                if num % r1 == 0 and abs(num // r1) <= bound:
                    yield (n * p1, num // r1, n * r1, n * s1)


def enumerate_elements(n: int, bound: int) -> Iterator[FrickeElement]:
    """
    Yield the elements of Γ₀⁺(n) with entries bounded by `bound`.

    The bound applies to the integer model, in absolute value; the
    identity is included.

    Each element is yielded once, in normalized form. Γ₀(n) comes first,
    then (for n ≥ 2) the coset Γ₀(n)w_n.
    """
    if n < 1:
        raise DomainError(f"Level must be a positive integer (got {n})")
    if bound < 1:
        raise DomainError(f"Entry bound must be positive (got {bound})")
    sources = [(DetTag.UNIT, _unit_candidates(n, bound))]
    if n > 1:
        sources.append((DetTag.FRICKE, _fricke_candidates(n, bound)))
    for tag, candidates in sources:
        for entries in candidates:
            if _canonical_sign(*entries) == entries:
                yield make_element(n, *entries, tag)


def translation(n: int, h: int = 1) -> FrickeElement:
    """Return the translation ``z -> z + h``."""
    return make_element(n, 1, h, 0, 1, DetTag.UNIT)


def fricke_involution(n: int) -> FrickeElement:
    """Return the Fricke involution ``w_n: z -> -1/(n z)``."""
    return make_element(n, 0, -1, n, 0, DetTag.FRICKE)


class TraceKind(enum.Enum):
    ELLIPTIC = "elliptic"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"


_ELLIPTIC_ORDERS = {0: 2, 1: 3, 2: 4, 3: 6}


@dataclasses.dataclass(frozen=True)
class TraceClass:
    """
    The elliptic/parabolic/hyperbolic type of an element.

    Attributes
    ----------
    kind : TraceKind
        The type, decided by comparing `trace_squared` with 4.
    trace_squared : Fraction
        The squared trace of the true (determinant-1) element.
    order : int or None
        The order in PSL(2, R) for elliptic elements, None otherwise.
    """

    kind: TraceKind
    trace_squared: Fraction
    order: int | None = None

    @property
    def is_elliptic(self) -> bool:
        return self.kind is TraceKind.ELLIPTIC

    @property
    def is_parabolic(self) -> bool:
        return self.kind is TraceKind.PARABOLIC

    @property
    def is_hyperbolic(self) -> bool:
        return self.kind is TraceKind.HYPERBOLIC

    def as_dict(self) -> dict[str, Any]:
        d: dict[str, Any] = {
            "kind": self.kind.value,
            "trace_squared": fraction_as_dict(self.trace_squared),
        }
        if self.order is not None:
            d["order"] = self.order
        return d


def trace_class(g: FrickeElement) -> TraceClass:
    """
    Classify an element by its squared trace.

    Elliptic elements have ``t**2`` in {0, 1, 2, 3}, of order 2, 3, 4, 6
    respectively. The identity is reported as parabolic (``t**2 == 4``).
    """
    t2 = g.trace_squared
    if t2 > 4:
        return TraceClass(TraceKind.HYPERBOLIC, t2)
    if t2 == 4:
        return TraceClass(TraceKind.PARABOLIC, t2)
    if t2.denominator != 1 or int(t2) not in _ELLIPTIC_ORDERS:
        raise ConsistencyError(
            f"Elliptic element {g.entries} has squared trace {t2}, "
            f"not one of 0, 1, 2, 3"
        )
    return TraceClass(TraceKind.ELLIPTIC, t2, _ELLIPTIC_ORDERS[int(t2)])


def order(g: FrickeElement) -> int | None:
    """Return the order of `g` in PSL(2, R), or None if it is infinite."""
    if g.is_identity():
        return 1
    return trace_class(g).order


@dataclasses.dataclass(frozen=True)
class Cusp:
    """
    A point of the boundary Q ∪ {∞}.

    Attributes
    ----------
    value : Fraction or None
        The rational cusp, or None for ∞.
    """

    value: Fraction | None

    def __post_init__(self) -> None:
        if self.value is not None:
            object.__setattr__(self, "value", Fraction(self.value))

    @property
    def is_infinity(self) -> bool:
        return self.value is None

    def __str__(self) -> str:
        return "oo" if self.value is None else str(self.value)

    def as_dict(self) -> dict[str, Any]:
        if self.value is None:
            return {"cusp": "infinity"}
        return {"cusp": fraction_as_dict(self.value)}


@dataclasses.dataclass(frozen=True)
class Interior:
    """
    A point ``re + im_coeff * sqrt(im_radicand) * i`` of the upper half plane.

    Attributes
    ----------
    re : Fraction
        The real part.
    im_coeff : Fraction
        A positive rational.
    im_radicand : int
        A squarefree positive integer.
    """

    re: Fraction
    im_coeff: Fraction
    im_radicand: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "re", Fraction(self.re))
        object.__setattr__(self, "im_coeff", Fraction(self.im_coeff))
        if self.im_coeff <= 0:
            raise DomainError(
                f"Interior point needs a positive imaginary part "
                f"(got coefficient {self.im_coeff})"
            )
        if self.im_radicand < 1 or not is_squarefree(self.im_radicand):
            raise DomainError(
                f"Imaginary radicand must be squarefree and positive "
                f"(got {self.im_radicand})"
            )

    @classmethod
    def from_surd(cls, z: Surd) -> "Interior":
        """Convert an imaginary surd ``a + b*sqrt(-m)`` with ``b > 0``."""
        if z.is_real():
            raise DomainError(f"{z} is not in the upper half plane")
        return cls(z.a, z.b, -z.radicand)

    def as_surd(self) -> Surd:
        return Surd(self.re, self.im_coeff, -self.im_radicand)

    def __str__(self) -> str:
        return str(self.as_surd())

    def as_dict(self) -> dict[str, Any]:
        return {"point": self.as_surd().as_dict()}


HPoint = Cusp | Interior


@dataclasses.dataclass(frozen=True)
class HyperbolicAxis:
    """
    The two boundary fixed points of a hyperbolic element.

    The points are in increasing order; None stands for ∞.
    """

    ends: tuple[Surd | None, Surd | None]

    def as_dict(self) -> dict[str, Any]:
        return {
            "ends": [
                "infinity" if e is None else e.as_dict() for e in self.ends
            ]
        }


def act(g: FrickeElement, point: HPoint) -> HPoint:
    """
    Apply the Möbius transformation of `g` to a point, exactly.

    The scalar ``1/sqrt(n)`` of Fricke-coset elements cancels.
    """
    p, q, r, s = g.entries
    if isinstance(point, Interior):
        z = point.as_surd()
        return Interior.from_surd((p * z + q) / (r * z + s))
    if point.value is None:
        return Cusp(None) if r == 0 else Cusp(Fraction(p, r))
    x = point.value
    den = r * x + s
    if den == 0:
        return Cusp(None)
    return Cusp((p * x + q) / den)


def fixed_point(g: FrickeElement) -> HPoint | HyperbolicAxis:
    """
    Return the fixed point(s) of `g` in the closed upper half plane.

    Returns
    -------
    Interior, Cusp or HyperbolicAxis
        The interior fixed point of an elliptic element, the cusp fixed by
        a parabolic element, or the two real fixed points of a hyperbolic
        element.

    Raises
    ------
    DomainError
        If `g` is the identity.
    """
    if g.is_identity():
        raise DomainError("The identity fixes every point")
    p, q, r, s = g.entries
    disc = g.trace**2 - 4 * g.det
    tc = trace_class(g)
    if tc.is_elliptic:
        f, m = squarefree_decomposition(-disc)
        return Interior(Fraction(p - s, 2 * r), Fraction(f, 2 * abs(r)), m)
    if tc.is_parabolic:
        if r == 0:
            return Cusp(None)
        return Cusp(Fraction(p - s, 2 * r))
    if r == 0:
        # z -> (p z + q)/s fixes ∞ and q/(s - p).
        return HyperbolicAxis((Surd(Fraction(q, s - p)), None))
    root = Surd.sqrt(disc)
    a, b = (Surd(p - s) + root) / (2 * r), (Surd(p - s) - root) / (2 * r)
    return HyperbolicAxis((a, b) if a < b else (b, a))


def involution_from_vector(n: int, delta: MukaiVector) -> FrickeElement:
    """
    Return the involution of Γ₀(n)w_n induced by the reflection in δ.

    For ``δ = (r, d, s)`` this is the integer model ``(nd, -s; nr, -nd)``.

    Raises
    ------
    DomainError
        If δ is not a (-2)-vector of the degree-2n lattice.
    """
    if delta.n != n:
        raise DomainError(
            f"Vector of degree {2 * delta.n} used at level {n}"
        )
    if delta.square() != -2:
        raise DomainError(
            f"{tuple(delta)} has square {delta.square()}, not -2"
        )
    r, d, s = delta
    return make_element(n, n * d, -s, n * r, -n * d, DetTag.FRICKE)


def vector_from_involution(g: FrickeElement) -> MukaiVector:
    """
    Return the (-2)-vector of a trace-0 element of Γ₀(n)w_n.

    The vector is ``(r/n, p/n, -q)`` with the first nonzero coordinate made
    positive.

    Raises
    ------
    DomainError
        If `g` is not in the Fricke coset or has nonzero trace.
    """
    if not g.in_fricke_coset():
        raise DomainError(f"{g.entries} is not in the coset Γ₀({g.n})w_n")
    if g.trace != 0:
        raise DomainError(f"{g.entries} has trace {g.trace}, not 0")
    n = g.n
    delta = MukaiVector(g.r // n, g.p // n, -g.q, n).canonical()
    if delta.square() != -2:
        raise ConsistencyError(
            f"Involution {g.entries} gave {tuple(delta)} of square "
            f"{delta.square()}"
        )
    return delta


@dataclasses.dataclass(frozen=True)
class MinusTwoCertificate:
    """
    Proof that an elliptic fixed point is a (-2)-point.

    Attributes
    ----------
    lam : Fraction
        The positive scale with ``δ = (λa/n, -λb/(2n), λc)``.
    delta : MukaiVector
        The (-2)-vector whose reflection fixes the point.
    """

    lam: Fraction
    delta: MukaiVector


def _rational_sqrt(q: Fraction) -> Fraction | None:
    num, den = math.isqrt(q.numerator), math.isqrt(q.denominator)
    if num * num != q.numerator or den * den != q.denominator:
        return None
    return Fraction(num, den)


def is_minus_two_point(g: FrickeElement) -> MinusTwoCertificate | None:
    """
    Decide whether the fixed point of an elliptic element is a (-2)-point.

    The fixed point τ is a root of the primitive form ``(a, b, c)``
    proportional to ``(r, s - p, -q)``. It is a (-2)-point exactly when
    ``λ = sqrt(4n/|b**2 - 4ac|)`` is rational and
    ``δ = (λa/n, -λb/(2n), λc)`` is integral.

    Returns
    -------
    MinusTwoCertificate or None
        The certificate, or None when the point is not a (-2)-point.

    Raises
    ------
    DomainError
        If `g` is not elliptic.
    ConsistencyError
        If the certified δ does not have square -2.
    """
    if not trace_class(g).is_elliptic:
        raise DomainError(f"{g.entries} is not elliptic")
    n = g.n
    form = QuadraticForm(g.r, g.s - g.p, -g.q).primitive_part()
    lam_squared = Fraction(4 * n, -form.discriminant)
    lam = _rational_sqrt(lam_squared)
    if lam is None:
        _logger.debug("%s: λ² = %s is not a square", g.entries, lam_squared)
        return None
    coords = (
        lam * form.a / n,
        -lam * form.b / (2 * n),
        lam * form.c,
    )
    if any(x.denominator != 1 for x in coords):
        _logger.debug("%s: δ = %s is not integral", g.entries, coords)
        return None
    delta = MukaiVector(*(int(x) for x in coords), n).canonical()
    if delta.square() != -2:
        raise ConsistencyError(
            f"Certificate for {g.entries} gave {tuple(delta)} of square "
            f"{delta.square()}"
        )
    return MinusTwoCertificate(lam, delta)
