"""Exception types shared across the package."""


class EcslabError(Exception):
    """Base class for all package errors."""


class TruncationInsufficient(EcslabError):
    """Population reached the top of the retained Fock space."""


class ShapeMismatch(EcslabError):
    """Two states live on different truncated spaces."""


class DegenerateState(EcslabError):
    """A superposition has (numerically) vanishing norm."""


class RegimeViolation(EcslabError):
    """A first-order approximation was asked to run outside its regime."""


class UnsupportedAsymptote(EcslabError):
    """No weak-field expansion is available for the requested state."""
