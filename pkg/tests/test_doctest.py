# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

import doctest

from k3_fricke import (
    arith,
    classify,
    counting,
    cubic,
    fricke_group,
    gamma0,
    mukai,
)


def test_doctest():
    modules = (arith, gamma0, fricke_group, mukai, classify, counting, cubic)
    for module in modules:
        fails, tests = doctest.testmod(module, optionflags=doctest.ELLIPSIS)
        assert tests > 0, module.__name__
        assert fails == 0, module.__name__
