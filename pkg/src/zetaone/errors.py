"""Exception hierarchy shared by all zetaone modules.

The CLI maps :class:`DomainError` (and subclasses) to exit status 1 and
:class:`NumericError` (and subclasses) to exit status 2.
"""

from __future__ import annotations


class ZetaOneError(Exception):
    """Base class for every error raised by this package."""


class DomainError(ZetaOneError, ValueError):
    """An argument violates an operation's precondition."""


class UnsupportedError(DomainError):
    """The requested variant exists only for a fixed set of arguments."""


class PoleError(DomainError):
    """Evaluation requested at (or within tolerance of) a pole."""

    def __init__(self, message: str, pole: complex):
        super().__init__(message)
        self.pole = pole


class WrongPoleError(DomainError):
    """A residue formula was asked for a pole it does not cover."""


class NumericError(ZetaOneError, ArithmeticError):
    """A numerical procedure failed to meet its accuracy contract."""


class CapacityError(NumericError):
    """A configured size cap (term count, table size) would be exceeded."""


class QuadratureError(NumericError):
    """Adaptive quadrature did not converge on one side of a contour."""

    def __init__(self, message: str, side: str):
        super().__init__(message)
        self.side = side
