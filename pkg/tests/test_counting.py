# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

import pytest
from k3_fricke import DomainError
from k3_fricke.counting import (
    FactorKind,
    PresentationKind,
    count_involution_classes,
    count_subgroups_mod2,
    presentation,
)
from k3_fricke.fricke import fricke_invariants
from k3_fricke.gamma0 import gamma0_invariants


def test_involution_classes_small_degrees():
    counts = [count_involution_classes(d) for d in (2, 4, 6, 8, 10, 12)]
    assert counts == [1, 1, 0, 0, 1, 0]
    assert count_involution_classes(130) == 2
    assert count_involution_classes(2 * 5 * 13 * 17) == 4
    assert count_involution_classes(2 * 2 * 5) == 1
    assert count_involution_classes(2 * 4 * 5) == 0


def test_z3_classes():
    expected = {14: 1, 42: 1, 18: 0, 10: 0, 6: 0, 8: 0, 2 * 7 * 13: 2}
    for degree, z3 in expected.items():
        assert count_subgroups_mod2(degree).z3_mod2_classes == z3, degree


def test_counts_match_halved_elliptic_points():
    for n in range(5, 1001):
        table = gamma0_invariants(n)
        counts = count_subgroups_mod2(2 * n)
        assert 2 * counts.involution_classes == table.nu2
        assert 2 * counts.z2_mod2_classes == table.nu2
        assert 2 * counts.z3_mod2_classes == table.nu3


def test_small_degree_subgroups():
    c = count_subgroups_mod2(2)
    assert c.maximal_shape == ("Z6",)
    assert (c.z2_mod2_classes, c.z3_mod2_classes) == (0, 0)
    assert "iota" in c.realized_by
    c = count_subgroups_mod2(4)
    assert c.maximal_shape == ("Z4",)
    assert c.involution_classes == 1
    assert count_subgroups_mod2(6).maximal_shape == ("0",)
    assert count_subgroups_mod2(10).maximal_shape == ("Z2",)
    assert count_subgroups_mod2(14).maximal_shape == ("Z3",)
    assert count_subgroups_mod2(26).maximal_shape == ("Z2", "Z3")


def test_subgroup_count_as_dict():
    assert count_subgroups_mod2(26).as_dict() == {
        "degree": 26,
        "involution_classes": 1,
        "z2_mod2_classes": 1,
        "z3_mod2_classes": 1,
        "maximal_shape": ["Z2", "Z3"],
        "times_shift": True,
        "realized_by": None,
    }


def test_degree_must_be_positive_even():
    for degree in (0, -2, 3):
        with pytest.raises(DomainError, match="even"):
            count_involution_classes(degree)
        with pytest.raises(DomainError, match="even"):
            count_subgroups_mod2(degree)


def test_small_level_presentations():
    fricke = PresentationKind.FRICKE_GROUP
    assert str(presentation(1, fricke)) == "Z2 * Z3"
    assert str(presentation(2, fricke)) == "Z2 * Z4"
    assert str(presentation(3, fricke)) == "Z2 * Z6"
    assert str(presentation(4, fricke)) == "Z2 * Z"
    assert str(presentation(3, PresentationKind.PI1ORB_Q0)) == "Zo^*2"
    assert str(presentation(4, PresentationKind.PI1ORB_Q0)) == "Zo * Zv"
    auts = presentation(1, PresentationKind.AUTS_MOD2)
    assert str(auts) == "Z3 * Z"
    assert auts.quotient_by_iota_shift
    auts = presentation(2, PresentationKind.AUTS_MOD2)
    assert not auts.quotient_by_iota_shift


def test_level_five_presentations():
    assert str(presentation(5, "fricke_group")) == "Z2^*3"
    assert str(presentation(5, "pi1orb_Q0")) == "Z2 * Zo^*2"
    assert str(presentation(5, "auts_mod2")) == "Z2 * Z^*2"


def test_presentation_identities():
    for n in range(1, 301):
        pi1 = presentation(n, PresentationKind.PI1ORB_Q0)
        fricke = presentation(n, PresentationKind.FRICKE_GROUP)
        auts = presentation(n, PresentationKind.AUTS_MOD2)
        filled = pi1.fill_holes().forget_decorations()
        assert filled.same_factors(fricke.forget_decorations()), n
        assert pi1.forget_decorations().same_factors(auts), n
        assert len(pi1.hole_orders) == pi1.multiplicity(FactorKind.Z_RING)


def test_fricke_group_free_rank_matches_genus():
    for n in range(5, 200):
        table = gamma0_invariants(n)
        fricke = presentation(n, PresentationKind.FRICKE_GROUP)
        auts = presentation(n, PresentationKind.AUTS_MOD2)
        # Filling the holes trades ξ free generators for involutions.
        assert auts.free_rank - fricke.free_rank == fricke.multiplicity(
            FactorKind.Z2
        ) - table.nu2 // 2
        assert fricke.multiplicity(FactorKind.Z3) == table.nu3 // 2


def test_presentation_as_dict():
    assert presentation(5, "fricke_group").as_dict() == {
        "group": "fricke_group",
        "factors": [{"kind": "Z2", "mult": 3}],
        "quotient_by_iota_shift": False,
        "text": "Z2^*3",
    }


def test_presentation_rejects():
    with pytest.raises(DomainError, match="Unknown"):
        presentation(5, "bogus")
    with pytest.raises(DomainError):
        presentation(0, PresentationKind.FRICKE_GROUP)


def test_minus_two_loops_match_census():
    for n in range(5, 301):
        pi1 = presentation(n, PresentationKind.PI1ORB_Q0)
        census = fricke_invariants(n).minus_two_points
        assert pi1.multiplicity(FactorKind.Z_RING) == census.count
        assert set(pi1.hole_orders) <= {2}


def test_torsion_matches_maximal_shape():
    for n in range(1, 301):
        auts = presentation(n, PresentationKind.AUTS_MOD2)
        shape = count_subgroups_mod2(2 * n).maximal_shape
        assert auts.has_torsion() == (shape != ("0",)), n
