"""Exception types shared across the library."""


class GeoFissionError(Exception):
    """Base class for all library errors."""


class SingularMatrix(GeoFissionError):
    pass


class DegenerateSegment(GeoFissionError):
    pass


class EpsilonTooLarge(GeoFissionError):
    pass


class OddPointCount(GeoFissionError):
    pass


class NotGeneralPosition(GeoFissionError):
    """Raised when a configuration has coincident or collinear points.

    ``witness`` holds the offending point indices (a pair for duplicates,
    a triple for collinearity) when known.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class DuplicateParam(GeoFissionError):
    pass


class ConstructionFailed(GeoFissionError):
    pass


class SearchExhausted(GeoFissionError):
    pass


class InvariantViolation(GeoFissionError):
    """A property that should hold by theory failed on a concrete instance."""

    def __init__(self, prop, message=""):
        super().__init__(f"{prop}: {message}" if message else prop)
        self.prop = prop


class PlanInvariantViolation(GeoFissionError):
    pass


class NotOneForest(GeoFissionError):
    pass


class TooLarge(GeoFissionError):
    pass


class NoCommonFrame(GeoFissionError):
    pass


class ArithmeticMismatch(GeoFissionError):
    pass


class ParseError(GeoFissionError):
    pass
