# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

import random

import pytest
from k3_fricke.fricke_group import enumerate_elements


@pytest.fixture
def rng():
    return random.Random(20260917)


@pytest.fixture(scope="session")
def small_elements():
    # Non-identity elements of Γ₀⁺(n), n <= 6, with entries bounded by 12.
    return [
        g
        for n in range(1, 7)
        for g in enumerate_elements(n, 12)
        if not g.is_identity()
    ]
