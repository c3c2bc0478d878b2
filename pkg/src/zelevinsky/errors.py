"""Exception hierarchy.

Everything raised on bad input derives from :class:`InputError` (CLI exit
code 2).  :class:`InvariantFailure` signals a cross-check disagreement and is
always a bug (CLI exit code 3).
"""

from __future__ import annotations


class ZelevinskyError(Exception):
    """Base class for every error raised by this package."""


class InputError(ZelevinskyError):
    pass


class InvariantFailure(ZelevinskyError):
    pass


# line table validation


class LineTableError(InputError):
    def __init__(self, message: str, line: str | None = None):
        super().__init__(message)
        self.line = line


class DanglingPartner(LineTableError):
    pass


class AsymmetricPartner(LineTableError):
    pass


class SignOnPairedLine(LineTableError):
    pass


class MissingSignOnSelfDualLine(LineTableError):
    pass


class DegreeMismatch(LineTableError):
    pass


class InvalidLine(LineTableError):
    """Non-positive degree, bad sign value, or a duplicate name."""


class InvalidSegment(InputError):
    pass


class UnknownLine(InputError):
    pass


# operation preconditions


class PartitionMismatch(InputError):
    pass


class OddTotalDegree(InputError):
    pass


class OddDimension(InputError):
    pass


class NotGeneric(InputError):
    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness


class InstanceTooLarge(InputError):
    pass


class NotConjugateSelfDual(InputError):
    pass


class ConditionAFails(InputError):
    pass


class CaseCoverageFailure(InvariantFailure):
    def __init__(self, message: str, position: int | None = None, matches=()):
        super().__init__(message)
        self.position = position
        self.matches = tuple(matches)


class InvalidSMatrix(InputError):
    pass
