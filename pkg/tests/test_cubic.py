# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

import pytest
from k3_fricke import DomainError
from k3_fricke.counting import (
    FactorKind,
    PresentationKind,
    count_subgroups_mod2,
    presentation,
)
from k3_fricke.cubic import has_associated_cubic, hassett_conditions


def test_known_degrees():
    assert has_associated_cubic(14).has_associated_cubic
    assert has_associated_cubic(26).has_associated_cubic
    assert has_associated_cubic(38).has_associated_cubic
    assert has_associated_cubic(42).has_associated_cubic
    assert not has_associated_cubic(12).has_associated_cubic
    assert not has_associated_cubic(20).has_associated_cubic
    # Γ₀(3) has an order-3 point, but degree 6 is below the range.
    verdict = has_associated_cubic(6)
    assert verdict.nu3 == 1
    assert not verdict.has_associated_cubic


def test_degree_two_is_special():
    verdict = has_associated_cubic(2)
    assert not verdict.has_associated_cubic
    assert "nodal" in verdict.special_case
    assert has_associated_cubic(4).special_case is None


def test_nu3_agrees_with_hassett():
    for n in range(7, 1001):
        verdict = has_associated_cubic(2 * n)
        nonempty, has_k3 = hassett_conditions(2 * n)
        assert verdict.has_associated_cubic == (nonempty and has_k3), n
        assert verdict.via_nu3 == (verdict.nu3 > 0)


def test_hassett_conditions():
    assert hassett_conditions(6) == (False, True)
    assert hassett_conditions(18) == (True, False)
    assert hassett_conditions(20) == (True, False)
    assert hassett_conditions(62) == (True, True)
    with pytest.raises(DomainError):
        hassett_conditions(0)


def test_as_dict():
    assert has_associated_cubic(14).as_dict() == {
        "degree": 14,
        "has_associated_cubic": True,
        "nu3": 2,
        "via_nu3": True,
        "hassett_nonempty": True,
        "hassett_has_k3": True,
        "special_case": None,
    }


def test_rejects_odd_degrees():
    for degree in (0, 7, -14):
        with pytest.raises(DomainError, match="even"):
            has_associated_cubic(degree)


def test_cubic_matches_z3_classes():
    for n in range(2, 1001):
        verdict = has_associated_cubic(2 * n)
        z3 = count_subgroups_mod2(2 * n).z3_mod2_classes
        assert verdict.has_associated_cubic == (z3 > 0 and n >= 7), n
        if verdict.has_associated_cubic:
            auts = presentation(n, PresentationKind.AUTS_MOD2)
            assert auts.multiplicity(FactorKind.Z3) > 0
