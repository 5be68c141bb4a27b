# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

from ._cli import main

main()
