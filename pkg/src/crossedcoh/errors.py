"""Exception types shared across the package."""

from __future__ import annotations

from typing import Any


class CrossedCohError(Exception):
    """Base class for every error raised by this package."""


class _WitnessError(CrossedCohError):
    def __init__(self, reason: str, witness: Any = None) -> None:
        self.reason = reason
        self.witness = witness
        msg = reason if witness is None else f"{reason} (witness: {witness!r})"
        super().__init__(msg)


class NotAGroup(_WitnessError):
    pass


class NotAnAction(_WitnessError):
    pass


class NotAHomomorphism(_WitnessError):
    pass


class NotSurjective(_WitnessError):
    pass


class KernelNotCentral(_WitnessError):
    pass


class NotACocycle(_WitnessError):
    pass


class NonNormalImage(_WitnessError):
    pass


class NotExact(_WitnessError):
    pass


class NotFixed(_WitnessError):
    pass


class ExactnessFailure(CrossedCohError):
    def __init__(self, junction: str, witness: Any) -> None:
        self.junction = junction
        self.witness = witness
        super().__init__(f"sequence not exact at {junction} (witness: {witness!r})")


class BoundExceeded(CrossedCohError):
    def __init__(self, what: str, size: int, budget: int) -> None:
        self.what = what
        self.size = size
        self.budget = budget
        super().__init__(f"{what}: search size {size} exceeds budget {budget}")


class UnknownScenario(CrossedCohError):
    pass


class SchemaError(CrossedCohError):
    def __init__(self, location: str, message: str) -> None:
        self.location = location
        super().__init__(f"{location}: {message}")
