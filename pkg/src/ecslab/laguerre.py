"""Laguerre polynomials and the photon-added coherent-state scalars built on them.

Everything here depends on the coherent amplitude only through ``|alpha|**2``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

__all__ = [
    "OverlapPair",
    "laguerre",
    "laguerre_neg",
    "overlap_p",
    "photon_added_norm",
]

# |p| may exceed 1 by rounding only
_OVERLAP_SLACK = 1e-12


@dataclass(frozen=True)
class OverlapPair:
    """Overlaps <eta|xi> and <delta|gamma> of a two-component state."""

    p1: float
    p2: float

    def __post_init__(self):
        for name in ("p1", "p2"):
            if abs(getattr(self, name)) > 1 + _OVERLAP_SLACK:
                raise ValueError(f"{name}={getattr(self, name)!r} outside [-1, 1]")


def laguerre(m, x):
    """Evaluate the Laguerre polynomial L_m(x) by upward recurrence.

    ``x`` may be a scalar or an array; the result has the same shape.
    """
    if m < 0:
        raise ValueError("Laguerre order must be non-negative")
    x = np.asarray(x, dtype=float)
    prev = np.ones_like(x)
    if m == 0:
        return prev[()]
    cur = 1.0 - x
    for k in range(1, m):
        prev, cur = cur, ((2 * k + 1 - x) * cur - k * prev) / (k + 1)
    return cur[()]


def laguerre_neg(m, x):
    """Return L_m(-x) for x >= 0.

    For a negative argument every recurrence term is positive, so the
    result is free of cancellation and never smaller than one.
    """
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("laguerre_neg expects x >= 0")
    return laguerre(m, -x)


def overlap_p(alpha, k):
    """Overlap between the photon-added states built on +alpha and -alpha.

    Equals ``exp(-2|alpha|^2) L_k(|alpha|^2) / L_k(-|alpha|^2)``.  The sign is
    kept: past the first root of L_k the overlap is negative.
    """
    x = np.abs(alpha) ** 2
    p = np.exp(-2.0 * x) * laguerre(k, x) / laguerre_neg(k, x)
    if np.any(np.abs(p) > 1 + _OVERLAP_SLACK):
        raise ArithmeticError(f"overlap {p} escaped [-1, 1]")
    return p


def photon_added_norm(alpha, k):
    """Normalization N(alpha, k) of (a^dagger)^k |alpha>, i.e. (k! L_k(-|alpha|^2))^(-1/2)."""
    x = np.abs(alpha) ** 2
    return 1.0 / np.sqrt(math.factorial(k) * laguerre_neg(k, x))
