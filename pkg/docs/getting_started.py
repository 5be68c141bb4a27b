# %% [md]
# <!--
# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT
#
# ruff: noqa: D100, I001
# -->
#
# # Getting Started
#
# Here we walk through the invariants pyk3fricke computes for a K3 surface
# X of degree 2n and Picard number one.

# %% [md]
# ## Modular curves
#
# First, import the package:

# %%
import k3_fricke
from k3_fricke.fricke_group import DetTag

# %% [md]
# The invariants of X₀(n) and of its Fricke quotient X₀⁺(n) are exact
# integers. ξ(n) counts the ramification points of X₀(n) → X₀⁺(n) that are
# not cusps:

# %%
for n in (5, 11, 37):
    table = k3_fricke.fricke_invariants(n)
    print(n, table.base.genus, table.genus_p, table.xi)

# %% [md]
# ## Autoequivalences
#
# Tensoring with O_X(1) and the spherical twist in O_X act on Γ₀⁺(n) as a
# translation and the Fricke involution. Their product has finite order for
# n ≤ 3, is parabolic for n = 4, and hyperbolic beyond:

# %%
from k3_fricke.mukai import theta_element

for n in range(1, 7):
    result = k3_fricke.classify_element(theta_element(n))
    print(n, result.type_name, result.as_dict()["approx"])

# %% [md]
# Elements can also be given by matrix. Here is an element of the Fricke
# coset at level 3, in the integer model with determinant n:

# %%
g = k3_fricke.make_element(3, 3, -1, 3, 0, DetTag.FRICKE)
k3_fricke.classify_element(g)

# %% [md]
# ## Finite subgroups and cubic fourfolds

# %%
for degree in (2, 4, 10, 14, 26, 130):
    counts = k3_fricke.count_subgroups_mod2(degree)
    cubic = k3_fricke.has_associated_cubic(degree)
    print(degree, counts.maximal_shape, cubic.has_associated_cubic)

# %% [md]
# ## Checking the build
#
# `verify` runs every consistency sweep; a correct build reports no
# failures. Smaller limits keep this quick:

# %%
report = k3_fricke.verify(k3_fricke.SweepLimits(max_n=100, cubic_max_n=100))
report.ok
