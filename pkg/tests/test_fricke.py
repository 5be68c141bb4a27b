# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

import pytest
from k3_fricke import DomainError
from k3_fricke.fricke import fricke_invariants, xi
from k3_fricke.fricke_group import (
    DetTag,
    is_minus_two_point,
    trace_class,
    vector_from_involution,
)


def _plus_counts(n):
    t = fricke_invariants(n)
    return (t.nu2p, t.nu3p, t.nu4p, t.nu6p, t.nu_infp, t.genus_p)


def test_small_levels():
    assert _plus_counts(1) == (1, 1, 0, 0, 1, 0)
    assert _plus_counts(2) == (1, 0, 1, 0, 1, 0)
    assert _plus_counts(3) == (1, 0, 0, 1, 1, 0)
    assert _plus_counts(4) == (1, 0, 0, 0, 2, 0)


def test_small_level_minus_two_points():
    assert fricke_invariants(1).minus_two_points.orders == (2,)
    assert fricke_invariants(2).minus_two_points.orders == (2,)
    assert fricke_invariants(3).minus_two_points.orders == (2, 6)
    assert fricke_invariants(4).minus_two_points.orders == (2,)
    assert fricke_invariants(1).ramification_points == 0
    for n in (2, 3, 4):
        assert fricke_invariants(n).ramification_points == 2
        assert "order 2" in fricke_invariants(n).branch_locus
    assert "cusp" in fricke_invariants(4).branch_locus


def test_xi():
    assert [xi(n) for n in range(1, 8)] == [1, 1, 2, 1, 2, 2, 2]
    assert xi(11) == 1 + 3  # h(-11) + h(-44)
    with pytest.raises(DomainError):
        xi(0)


def test_level_five():
    t = fricke_invariants(5)
    assert t.xi == 2
    assert _plus_counts(5) == (3, 0, 0, 0, 1, 0)
    assert t.minus_two_points.count == 2
    assert t.ramification_points == 2
    d = t.as_dict()
    assert d["nu2_plus"] == 3
    assert d["xi"] == 2
    assert d["minus_two_points"] == {"count": 2, "orders": [2, 2]}


def test_class_number_coupling():
    for n in range(5, 2001):
        t = fricke_invariants(n)
        twice_genus_p = t.base.genus + 1 - t.xi // 2
        assert t.xi % 2 == 0, n
        assert twice_genus_p >= 0
        assert twice_genus_p % 2 == 0
        assert t.genus_p == twice_genus_p // 2


def test_riemann_hurwitz():
    for n in range(2, 2001):
        t = fricke_invariants(n)
        assert (
            2 * t.base.genus - 2
            == 2 * (2 * t.genus_p - 2) + t.ramification_points
        ), n


def test_halved_counts():
    for n in range(5, 300):
        t = fricke_invariants(n)
        assert t.nu2p == t.base.nu2 // 2 + t.xi
        assert t.nu3p == t.base.nu3 // 2
        assert t.nu_infp == t.base.nu_inf // 2


def test_minus_two_points_of_involutions(small_elements):
    # Every trace-0 element of the Fricke coset fixes a (-2)-point, and the
    # λ-test finds the same vector as the direct construction.
    for g in small_elements:
        if g.det_tag is not DetTag.FRICKE or g.trace != 0:
            continue
        assert trace_class(g).order == 2
        cert = is_minus_two_point(g)
        assert cert is not None
        assert cert.delta == vector_from_involution(g)


def test_invalid_level():
    with pytest.raises(DomainError):
        fricke_invariants(0)
