# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

from fractions import Fraction

import pytest
from k3_fricke import ConsistencyError, DomainError
from k3_fricke._lattice import MukaiVector
from k3_fricke._surd import Surd
from k3_fricke.fricke_group import (
    Cusp,
    DetTag,
    FrickeElement,
    HyperbolicAxis,
    Interior,
    TraceKind,
    act,
    compose,
    enumerate_elements,
    fixed_point,
    fricke_involution,
    involution_from_vector,
    is_minus_two_point,
    make_element,
    order,
    power,
    trace_class,
    translation,
    vector_from_involution,
)
from k3_fricke.mukai import theta_element


def test_make_element_normalizes_sign():
    g = make_element(5, -1, 0, -5, -1, DetTag.UNIT)
    assert g.entries == (1, 0, 5, 1)
    assert make_element(3, 0, -1, 3, 0, DetTag.FRICKE).entries == (0, 1, -3, 0)


def test_make_element_level_one_is_unit():
    g = make_element(1, 0, -1, 1, 0, DetTag.FRICKE)
    assert g.det_tag is DetTag.UNIT
    assert g.det == 1
    assert g.in_fricke_coset()


def test_make_element_rejects():
    with pytest.raises(DomainError, match="determinant"):
        make_element(5, 1, 1, 0, 2, DetTag.UNIT)
    with pytest.raises(DomainError, match="lower-left"):
        make_element(5, 1, 0, 1, 1, DetTag.UNIT)
    with pytest.raises(DomainError, match="divide"):
        make_element(2, 1, -1, 2, 0, DetTag.FRICKE)
    with pytest.raises(DomainError, match="positive"):
        make_element(0, 1, 0, 0, 1, DetTag.UNIT)
    with pytest.raises(ValueError):
        make_element(5, 1, 0, 0, 1, "bogus")


def test_fricke_involution_squares_to_identity():
    for n in range(1, 30):
        w = fricke_involution(n)
        assert compose(w, w).is_identity()
        assert w.in_fricke_coset()


def test_compose_tags():
    n = 6
    t = translation(n)
    w = fricke_involution(n)
    assert compose(t, t).det_tag is DetTag.UNIT
    assert compose(t, w).det_tag is DetTag.FRICKE
    assert compose(w, t).det_tag is DetTag.FRICKE
    assert compose(w, compose(t, w)).det_tag is DetTag.UNIT
    assert compose(w, compose(t, w)).entries == (1, 0, -6, 1)


def test_compose_levels_must_match():
    with pytest.raises(DomainError, match="levels"):
        compose(translation(2), translation(3))


def test_group_laws(small_elements, rng):
    for g in small_elements:
        assert compose(g, g.inverse()).is_identity()
        assert compose(g.inverse(), g).is_identity()
        assert compose(g, FrickeElement.identity(g.n)) == g
    for _ in range(200):
        n = rng.randint(1, 6)
        pool = [e for e in small_elements if e.n == n]
        g, h, k = rng.sample(pool, 3)
        assert compose(compose(g, h), k) == compose(g, compose(h, k))


def test_power():
    g = make_element(7, 2, 1, 7, 4, DetTag.UNIT)
    assert power(g, 0).is_identity()
    assert power(g, 1) == g
    assert power(g, 3) == compose(g, compose(g, g))
    assert power(g, -2) == compose(g.inverse(), g.inverse())
    assert translation(5, 4) == power(translation(5), 4)


def test_theta_orders():
    assert order(theta_element(1)) == 3
    assert order(theta_element(2)) == 4
    assert order(theta_element(3)) == 6
    assert order(theta_element(4)) is None
    assert trace_class(theta_element(4)).kind is TraceKind.PARABOLIC
    assert trace_class(theta_element(5)).kind is TraceKind.HYPERBOLIC
    assert power(theta_element(1), 3).is_identity()
    assert power(theta_element(2), 4).is_identity()
    assert power(theta_element(3), 6).is_identity()
    assert not power(theta_element(3), 3).is_identity()


def test_trace_class():
    tc = trace_class(make_element(1, 2, 1, 1, 1, DetTag.UNIT))
    assert tc.is_hyperbolic
    assert tc.trace_squared == 9
    assert tc.order is None
    assert trace_class(translation(3)).is_parabolic
    assert trace_class(FrickeElement.identity(3)).is_parabolic
    assert order(FrickeElement.identity(3)) == 1
    tc = trace_class(fricke_involution(5))
    assert tc.is_elliptic
    assert tc.order == 2
    assert tc.as_dict() == {
        "kind": "elliptic",
        "trace_squared": {"num": 0, "den": 1},
        "order": 2,
    }


def test_fixed_points():
    assert fixed_point(fricke_involution(3)) == Interior(0, Fraction(1, 3), 3)
    assert fixed_point(theta_element(2)) == Interior(
        Fraction(1, 2), Fraction(1, 2), 1
    )
    assert fixed_point(translation(7)) == Cusp(None)
    parabolic_at_zero = make_element(5, 1, 0, 5, 1, DetTag.UNIT)
    assert fixed_point(parabolic_at_zero) == Cusp(Fraction(0))
    axis = fixed_point(make_element(1, 2, 1, 1, 1, DetTag.UNIT))
    assert axis == HyperbolicAxis(
        (
            Surd(Fraction(1, 2), Fraction(-1, 2), 5),
            Surd(Fraction(1, 2), Fraction(1, 2), 5),
        )
    )
    with pytest.raises(DomainError, match="identity"):
        fixed_point(FrickeElement.identity(4))


def test_elliptic_fixed_points_are_fixed(small_elements):
    for g in small_elements:
        if trace_class(g).is_elliptic:
            z = fixed_point(g)
            assert isinstance(z, Interior)
            assert act(g, z) == z


def test_act_on_cusps():
    w = fricke_involution(2)
    assert act(w, Cusp(Fraction(0))) == Cusp(None)
    assert act(w, Cusp(None)) == Cusp(Fraction(0))
    assert act(translation(2), Cusp(Fraction(1, 3))) == Cusp(Fraction(4, 3))
    assert str(Cusp(None)) == "oo"
    assert Cusp(None).as_dict() == {"cusp": "infinity"}


def test_interior_validation():
    with pytest.raises(DomainError, match="positive"):
        Interior(0, 0, 1)
    with pytest.raises(DomainError, match="squarefree"):
        Interior(0, 1, 4)


def test_involution_vector_correspondence():
    for n in range(1, 11):
        for d in range(-3, 4):
            delta = MukaiVector(1, d, n * d * d + 1, n)
            assert delta.square() == -2
            g = involution_from_vector(n, delta)
            assert g.trace == 0
            assert g.in_fricke_coset()
            assert compose(g, g).is_identity()
            assert vector_from_involution(g) == delta


def test_involution_from_vector_rejects():
    with pytest.raises(DomainError, match="not -2"):
        involution_from_vector(3, MukaiVector(1, 0, 0, 3))
    with pytest.raises(DomainError, match="level"):
        involution_from_vector(3, MukaiVector(1, 0, 1, 2))
    with pytest.raises(DomainError, match="trace"):
        vector_from_involution(compose(translation(3), fricke_involution(3)))
    with pytest.raises(DomainError, match="coset"):
        vector_from_involution(make_element(2, 1, -1, 2, -1, DetTag.UNIT))


def test_minus_two_point_test():
    cert = is_minus_two_point(theta_element(3))
    assert cert is not None
    assert cert.lam == 2
    assert cert.delta == MukaiVector(2, 1, 2, 3)
    assert is_minus_two_point(theta_element(2)) is None
    assert is_minus_two_point(theta_element(1)) is None
    cert = is_minus_two_point(fricke_involution(1))
    assert cert is not None
    assert cert.delta == MukaiVector(1, 0, 1, 1)
    with pytest.raises(DomainError, match="not elliptic"):
        is_minus_two_point(translation(3))


def test_minus_two_points_up_to_level_thirty():
    # Elliptic points of order > 2 are (-2)-points only at level 3, where
    # the order-3 and order-6 elements share their fixed points.
    for n in range(1, 31):
        for g in enumerate_elements(n, 8):
            tc = trace_class(g)
            if not tc.is_elliptic or tc.order == 2:
                continue
            cert = is_minus_two_point(g)
            assert (cert is not None) == (n == 3), g


def test_enumerate_elements():
    elements = list(enumerate_elements(1, 1))
    assert len(elements) == 10
    assert len(set(elements)) == len(elements)
    for n in range(1, 8):
        elements = list(enumerate_elements(n, 10))
        assert len(set(elements)) == len(elements)
        assert FrickeElement.identity(n) in elements
        if n > 1:
            assert fricke_involution(n) in elements
        for g in elements:
            assert max(abs(x) for x in g.entries) <= 10
            assert make_element(n, *g.entries, g.det_tag) == g
    with pytest.raises(DomainError):
        list(enumerate_elements(3, 0))


def test_as_dict():
    assert fricke_involution(4).as_dict() == {
        "n": 4,
        "matrix": [0, 1, -4, 0],
        "det": 4,
    }


def test_compose_consistency_error_is_arithmetic():
    assert issubclass(ConsistencyError, ArithmeticError)


def test_elliptic_orders_of_the_fricke_coset():
    # Orders above 3 occur at one level each; order 3 in the coset only at
    # level 1, where the coset is everything.
    seen = {}
    for n in range(1, 31):
        for g in enumerate_elements(n, 16):
            if not g.in_fricke_coset() or g.is_identity():
                continue
            tc = trace_class(g)
            if tc.is_elliptic:
                seen.setdefault(tc.order, set()).add(n)
    assert seen[4] == {2}
    assert seen[6] == {3}
    assert seen[3] == {1}
    # The lower-left entry is a nonzero multiple of n, so only levels up to
    # the bound show up.
    assert seen[2] == set(range(1, 17))
