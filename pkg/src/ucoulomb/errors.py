"""Exception types raised across the package."""

from __future__ import annotations


class UCoulombError(ValueError):
    """Base class for all domain errors."""


class PoleAtNonPositiveInteger(UCoulombError):
    def __init__(self, z: complex):
        super().__init__(f"Gamma pole: argument {z!r} is a non-positive integer")
        self.z = z


class BNonPositiveInteger(UCoulombError):
    def __init__(self, b: complex):
        super().__init__(f"1F1 undefined: b = {b!r} is a non-positive integer")
        self.b = b


class NoConvergence(UCoulombError):
    def __init__(self, max_terms: int):
        super().__init__(f"series did not converge within {max_terms} terms")
        self.max_terms = max_terms


class NonPositiveEpsilon(UCoulombError):
    pass


class IntegerTwoL(UCoulombError):
    pass


class ZeroWavenumber(UCoulombError):
    pass


class AtBoundStatePole(UCoulombError):
    pass


class WrongSide(UCoulombError):
    pass


class EmptyFamily(UCoulombError):
    pass


class StepUnderflow(UCoulombError, RuntimeError):
    pass


class IllConditionedMatching(UCoulombError, RuntimeError):
    pass
