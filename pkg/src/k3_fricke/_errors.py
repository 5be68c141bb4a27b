# This file is part of pyk3fricke
# Copyright 2026 The pyk3fricke authors
# SPDX-License-Identifier: MIT

import enum


class ErrorKind(enum.Enum):
    """
    The category of a `K3FrickeError`.

    Attributes
    ----------
    DOMAIN
        The input is outside the domain of the operation.
    CONSISTENCY
        An identity that holds for every valid input was violated. This
        indicates a bug in pyk3fricke, never a problem with the input.
    """

    DOMAIN = "domain"
    CONSISTENCY = "consistency"


class K3FrickeError(Exception):
    """
    Base class of the errors raised by pyk3fricke.

    Attributes
    ----------
    kind : ErrorKind
        The category of the error.
    """

    kind: ErrorKind

    def __init__(self, message: str, kind: ErrorKind) -> None:
        super().__init__(message)
        self.kind = kind


class DomainError(K3FrickeError, ValueError):
    """Raised when an operation is given input outside its domain."""

    def __init__(self, message: str) -> None:
        super().__init__(message, ErrorKind.DOMAIN)


class ConsistencyError(K3FrickeError, ArithmeticError):
    """
    Raised when an internal consistency check fails.

    These checks pin together independent computations of the same
    quantity (for example, a genus formula that must produce an integer).
    They never fail in a correct build.
    """

    def __init__(self, message: str) -> None:
        super().__init__(message, ErrorKind.CONSISTENCY)
