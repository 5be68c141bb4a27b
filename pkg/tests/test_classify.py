# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

from fractions import Fraction

import pytest
from k3_fricke import DomainError
from k3_fricke._lattice import MukaiVector
from k3_fricke._surd import Surd
from k3_fricke.classify import (
    EllipticAtMinusTwoPoint,
    FiniteOrder,
    MinusTwoReducible,
    PseudoAnosov,
    ZeroReducible,
    classify_element,
    cusp_stabilizer,
)
from k3_fricke.fricke_group import (
    Cusp,
    DetTag,
    FrickeElement,
    Interior,
    enumerate_elements,
    fixed_point,
    fricke_involution,
    make_element,
    power,
    trace_class,
    translation,
)
from k3_fricke.mukai import induced_isometry, reflection, theta_element


def test_spherical_twist_at_degree_two():
    result = classify_element(fricke_involution(1))
    assert isinstance(result, MinusTwoReducible)
    assert result.delta == MukaiVector(1, 0, 1, 1)
    assert result.as_dict()["delta"] == [1, 0, 1]


def test_fricke_involutions_are_minus_two_reducible():
    for n in range(2, 20):
        result = classify_element(fricke_involution(n))
        assert isinstance(result, MinusTwoReducible)
        assert result.delta == MukaiVector(1, 0, 1, n)


def test_theta_at_small_degrees():
    result = classify_element(theta_element(1))
    assert isinstance(result, FiniteOrder)
    assert result.order == 3

    result = classify_element(theta_element(2))
    assert isinstance(result, FiniteOrder)
    assert result.order == 4
    assert result.fixed_point == Interior(Fraction(1, 2), Fraction(1, 2), 1)
    assert result.as_dict()["approx"]["fixed_point"] == [0.5, 0.5]

    result = classify_element(theta_element(3))
    assert isinstance(result, EllipticAtMinusTwoPoint)
    assert result.order == 6
    assert result.delta == MukaiVector(2, 1, 2, 3)

    result = classify_element(theta_element(4))
    assert isinstance(result, ZeroReducible)

    result = classify_element(theta_element(5))
    assert isinstance(result, PseudoAnosov)
    assert result.spectral_radius == Surd(Fraction(3, 2), Fraction(1, 2), 5)
    assert result.as_dict()["approx"]["spectral_radius"] == pytest.approx(
        2.618033988749895
    )


def test_theta_squared_at_degree_six():
    g = power(theta_element(3), 2)
    assert g == make_element(3, 2, -1, 3, -1, DetTag.UNIT)
    result = classify_element(g)
    assert isinstance(result, EllipticAtMinusTwoPoint)
    assert result.order == 3
    assert result.delta == MukaiVector(2, 1, 2, 3)


def test_tensor_with_line_bundle_is_zero_reducible():
    for n in range(1, 12):
        result = classify_element(translation(n))
        assert isinstance(result, ZeroReducible)
        assert result.w == MukaiVector(0, 0, 1, n)


def test_as_dict_layout():
    d = classify_element(translation(3)).as_dict()
    assert d == {
        "type": "ZeroReducible",
        "w": [0, 0, 1],
        "data": {
            "element": {"n": 3, "matrix": [1, 1, 0, 1], "det": 1},
            "trace_class": {
                "kind": "parabolic",
                "trace_squared": {"num": 4, "den": 1},
            },
        },
        "approx": {},
    }
    d = classify_element(theta_element(3)).as_dict()
    assert d["type"] == "EllipticAtMinusTwoPoint"
    assert d["order"] == 6
    assert d["delta_of_stabilizing_involution"] == [2, 1, 2]
    assert trace_class(theta_element(3)).as_dict()["order"] == 6
    assert "order" not in trace_class(translation(3)).as_dict()


def test_identity_has_no_type():
    with pytest.raises(DomainError, match="identity"):
        classify_element(FrickeElement.identity(5))


def _check_result(g, result):
    tc = result.trace_class
    if isinstance(result, PseudoAnosov):
        assert tc.is_hyperbolic
        assert result.spectral_radius > 1
        assert result.spectral_radius * result.spectral_radius.conjugate() == 1
    elif isinstance(result, ZeroReducible):
        assert tc.is_parabolic
        assert result.w.square() == 0
        assert induced_isometry(g).apply(result.w) == result.w
    elif isinstance(result, MinusTwoReducible):
        assert tc.order == 2
        assert g.in_fricke_coset()
        assert reflection(result.delta).rows == (-induced_isometry(g)).rows
    elif isinstance(result, EllipticAtMinusTwoPoint):
        assert g.n == 3
        assert result.order in (3, 6)
        assert result.delta.square() == -2
    else:
        assert isinstance(result, FiniteOrder)
        assert result.order in (2, 3, 4, 6)
        if result.order == 2:
            assert not g.in_fricke_coset()


def test_every_small_element_has_one_type():
    for n in range(1, 13):
        for g in enumerate_elements(n, 10):
            if g.is_identity():
                continue
            _check_result(g, classify_element(g))


def test_cusp_stabilizer_square_level():
    stab = cusp_stabilizer(4, MukaiVector(2, 1, 2, 4))
    assert stab.cusp == Cusp(Fraction(1, 2))
    assert stab.generator == make_element(4, 0, 1, -4, 4, DetTag.FRICKE)
    assert stab.width == Fraction(1, 2)
    assert stab.kernel == "I(D^b(X))"


def test_cusp_stabilizer_at_zero():
    stab = cusp_stabilizer(2, MukaiVector(1, 0, 0, 2))
    assert stab.cusp == Cusp(Fraction(0))
    assert stab.generator.entries == (1, 0, 2, 1)
    assert stab.width == 2


def test_cusp_stabilizer_direction():
    # Conjugate of z -> z + 2 by (1 0; 2 1), stored with the opposite sign.
    stab = cusp_stabilizer(8, MukaiVector(2, 1, 4, 8))
    assert stab.cusp == Cusp(Fraction(1, 2))
    assert stab.generator == make_element(8, -3, 2, -8, 5, DetTag.UNIT)
    assert stab.generator.entries == (3, -2, 8, -5)
    assert stab.width == 2


def test_cusp_stabilizer_at_infinity():
    stab = cusp_stabilizer(1, MukaiVector(0, 0, 1, 1))
    assert stab.cusp == Cusp(None)
    assert stab.generator == translation(1)
    assert stab.kernel == "<I(D^b(X)), iota>"
    assert stab.as_dict()["cusp"] == "infinity"
    stab = cusp_stabilizer(6, MukaiVector(0, 0, 1, 6))
    assert stab.generator == translation(6)
    assert stab.width == 1


def test_cusp_stabilizer_fixes_its_vector():
    for n in range(1, 20):
        for c in range(1, 8):
            for a in range(-4, 5):
                w = MukaiVector(c * c, a * c, n * a * a, n).primitive_part()
                stab = cusp_stabilizer(n, w)
                assert induced_isometry(stab.generator).apply(w) == w
                assert stab.width > 0


def test_cusp_stabilizer_rejects():
    with pytest.raises(DomainError, match="nonzero"):
        cusp_stabilizer(3, MukaiVector(0, 0, 0, 3))
    with pytest.raises(DomainError, match="not 0"):
        cusp_stabilizer(3, MukaiVector(1, 0, 1, 3))
    with pytest.raises(DomainError, match="primitive"):
        cusp_stabilizer(3, MukaiVector(0, 0, 2, 3))
    with pytest.raises(DomainError, match="level"):
        cusp_stabilizer(3, MukaiVector(0, 0, 1, 2))


def test_finite_orders_beyond_level_four():
    for n in range(5, 61):
        for g in enumerate_elements(n, 6):
            if g.is_identity():
                continue
            result = classify_element(g)
            if isinstance(result, FiniteOrder):
                assert result.order in (2, 3), (n, g)


def test_zero_reducible_matches_cusp_stabilizer():
    for n in range(1, 9):
        for g in enumerate_elements(n, 8):
            if g.is_identity():
                continue
            result = classify_element(g)
            if not isinstance(result, ZeroReducible):
                continue
            stab = cusp_stabilizer(n, result.w)
            assert trace_class(stab.generator).is_parabolic
            assert fixed_point(stab.generator) == fixed_point(g)
