"""Exception hierarchy shared by every model."""


class FuzzyMatError(Exception):
    """Base class for model errors (CLI exit status 1)."""


class DimensionError(FuzzyMatError, ValueError):
    """Operand shapes are incompatible."""


class DomainError(FuzzyMatError, ValueError):
    """A parameter or entry lies outside its admissible range."""


class NonTerminationError(FuzzyMatError, RuntimeError):
    """An iterated system hit its step guard without a recurrence."""


class InfeasibleFitError(FuzzyMatError, ValueError):
    """A closed-form fit cannot reach the requested output."""


class ParseError(Exception):
    """Malformed input text (CLI exit status 2)."""
