"""Two-mode excited entangled coherent states: construction, concurrence, preparation."""

__version__ = "0.1.0"

from .errors import (  # noqa: E402
    DegenerateState,
    EcslabError,
    RegimeViolation,
    ShapeMismatch,
    TruncationInsufficient,
    UnsupportedAsymptote,
)
from .states import StateSpec  # noqa: E402
from .entanglement import analyze  # noqa: E402
