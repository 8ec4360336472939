"""Exception hierarchy shared by all pcii modules."""

from __future__ import annotations


class PcError(Exception):
    """Base class for every error raised by this package."""


# --- matrix validation ------------------------------------------------------


class NonSquareError(PcError):
    pass


class NonPositiveEntryError(PcError):
    def __init__(self, i: int, j: int, value: float):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) = {value!r} is not strictly positive")


class EntryOutOfRangeError(PcError):
    def __init__(self, i: int, j: int, value: float):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"entry ({i},{j}) = {value!r} is outside the accepted range")


class NonUnitDiagonalError(PcError):
    def __init__(self, i: int, value: float):
        self.i, self.value = i, value
        super().__init__(f"diagonal entry ({i},{i}) = {value!r} differs from 1")


class ReciprocityViolationError(PcError):
    def __init__(self, i: int, j: int, product: float):
        self.i, self.j, self.product = i, j, product
        super().__init__(f"entries ({i},{j}) and ({j},{i}) multiply to {product!r}, not 1")


# --- combinatorics ----------------------------------------------------------


class OrderTooSmallError(PcError):
    pass


class IndexOutOfRangeError(PcError):
    pass


class SelectorOutOfRangeError(PcError):
    pass


class NonInjectiveSelectorError(PcError):
    pass


class InvalidPermutationError(PcError):
    pass


class NonPositiveScalingError(PcError):
    pass


# --- indicators -------------------------------------------------------------


class EigenvalueNonconvergenceError(PcError):
    pass


class ShapeFunctionViolationError(PcError):
    def __init__(self, condition: str, point: float, detail: str = ""):
        self.condition, self.point = condition, point
        msg = f"shape function violates {condition} at {point!r}"
        super().__init__(msg + (f": {detail}" if detail else ""))


class ZeroTrueValueError(PcError):
    pass


class UnknownIndicatorError(PcError):
    pass


# --- harness ----------------------------------------------------------------


class UnknownAxiomError(PcError):
    pass


class SuiteViolationError(PcError):
    def __init__(self, indicator: str, axiom: str, expected: str, got: str):
        self.indicator, self.axiom = indicator, axiom
        self.expected, self.got = expected, got
        super().__init__(
            f"suite deviation at ({indicator}, {axiom}): expected {expected}, got {got}"
        )


# --- elicitation service ----------------------------------------------------


class TooFewEntitiesError(PcError):
    pass


class DuplicateLabelError(PcError):
    pass


class NonConformingIndicatorError(PcError):
    pass


class UnknownSessionError(PcError):
    pass


class UnknownLabelError(PcError):
    pass


class NonPositiveRatioError(PcError):
    pass


class IncompleteSessionError(PcError):
    pass
