# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

# ruff: noqa: E402  # Module level import not at top of file

"""
The root package of pyk3fricke.

The computations live in the submodules: `arith` (class numbers and
characters), `gamma0` and `fricke` (modular curve invariants),
`fricke_group` and `mukai` (group elements and their lattice action),
`classify`, `counting` and `cubic`. The most used operations and the
exception types are re-exported here.
"""

__all__ = [
    "ConsistencyError",
    "DomainError",
    "ErrorKind",
    "K3FrickeError",
    "SweepLimits",
    "arith",
    "class_number",
    "classify",
    "classify_element",
    "count_involution_classes",
    "count_subgroups_mod2",
    "counting",
    "cubic",
    "fricke",
    "fricke_group",
    "fricke_invariants",
    "gamma0",
    "gamma0_invariants",
    "has_associated_cubic",
    "make_element",
    "mukai",
    "presentation",
    "verify",
    "xi",
]

from . import (
    arith,
    classify,
    counting,
    cubic,
    fricke,
    fricke_group,
    gamma0,
    mukai,
)
from ._errors import ConsistencyError, DomainError, ErrorKind, K3FrickeError
from ._verify import SweepLimits, verify
from ._version import __version__  # noqa: F401
from .arith import class_number
from .classify import classify_element
from .counting import (
    count_involution_classes,
    count_subgroups_mod2,
    presentation,
)
from .cubic import has_associated_cubic
from .fricke import fricke_invariants, xi
from .fricke_group import make_element
from .gamma0 import gamma0_invariants
