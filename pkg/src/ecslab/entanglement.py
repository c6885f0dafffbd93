"""Concurrence of two-component entangled states.

Two independent routes are provided.  The closed forms work from the
component overlaps alone; :func:`concurrence_oracle` builds the state on a
truncated Fock space and uses ``C = sqrt(2 (1 - Tr rho_a^2))``, which is the
concurrence of any pure state of Schmidt rank two.
"""
from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from . import fock, states
from .errors import DegenerateState, UnsupportedAsymptote
from .laguerre import laguerre, laguerre_neg, overlap_p
from .states import ECS, SMEECS, TMEECS, StateSpec, parse_sign

__all__ = [
    "ConcurrenceReport",
    "Asymptote",
    "concurrence_general",
    "concurrence_ecs",
    "concurrence_tmeecs",
    "concurrence_smeecs",
    "closed_form",
    "weak_field_asymptote",
    "concurrence_oracle",
    "analyze",
]

_DEGENERATE = 1e-14
_CLAMP_WARN = 1e-9


class ClampWarning(RuntimeWarning):
    """The oracle concurrence left [0, 1] by more than rounding."""


@dataclass(frozen=True)
class ConcurrenceReport:
    spec: StateSpec
    closed_form: float
    oracle: float
    p1: float
    p2: float
    truncation_used: fock.TruncationConfig

    @property
    def abs_diff(self):
        return abs(self.closed_form - self.oracle)


@dataclass(frozen=True)
class Asymptote:
    """Leading weak-field behaviour: ``C ~ coefficient * |alpha|^2`` or ``C ~ coefficient``."""

    coefficient: float
    kind: str  # "linear" or "constant"

    def __call__(self, alpha_sq):
        return self.coefficient * alpha_sq if self.kind == "linear" else self.coefficient


def concurrence_general(mu, nu, p1, p2):
    """Concurrence of ``mu|eta>|gamma> + nu|xi>|delta>`` with p1=<eta|xi>, p2=<delta|gamma>.

    The state need not be normalized; the denominator is its norm squared.
    """
    mu, nu, p1, p2 = complex(mu), complex(nu), complex(p1), complex(p2)
    if abs(p1) > 1 + 1e-12 or abs(p2) > 1 + 1e-12:
        raise ValueError("overlaps must satisfy |p| <= 1")
    denom = abs(mu) ** 2 + abs(nu) ** 2 + 2 * (mu.conjugate() * nu * p1 * p2.conjugate()).real
    if denom <= _DEGENERATE:
        raise DegenerateState(f"two-component state has norm^2 {denom:.2e}")
    num = 2 * abs(mu) * abs(nu) * math.sqrt(max(0.0, (1 - abs(p1) ** 2) * (1 - abs(p2) ** 2)))
    return num / denom


def concurrence_ecs(sign, alpha):
    """1 for the minus branch, tanh(2|alpha|^2) for the plus branch."""
    sign = parse_sign(sign)
    x = abs(alpha) ** 2
    if sign < 0:
        if -math.expm1(-4 * x) * 2 < _DEGENERATE:
            raise DegenerateState("minus ECS vanishes at alpha = 0")
        return 1.0
    # (1 - e^{-4x}) / (1 + e^{-4x})
    return math.tanh(2 * x)


def _pair_concurrence(sign, p1, p2):
    denom = 1 + sign * p1 * p2
    if denom <= _DEGENERATE:
        raise DegenerateState(f"1 {'+' if sign > 0 else '-'} p1 p2 = {denom:.2e}")
    return math.sqrt((1 - p1 * p1) * (1 - p2 * p2)) / denom


def concurrence_tmeecs(sign, alpha, m, n):
    """Closed-form concurrence of the two-mode excited ECS with (m, n) added photons."""
    if m < 1 or n < 1:
        raise ValueError("TMEECS needs m >= 1 and n >= 1")
    p1 = float(overlap_p(alpha, m))
    p2 = float(overlap_p(alpha, n))
    return _pair_concurrence(parse_sign(sign), p1, p2)


def concurrence_smeecs(sign, alpha, k):
    """Closed-form concurrence of the single-mode excited ECS with k photons on mode a.

    Written with Laguerre polynomials; with ``q = exp(-4|alpha|^2)``:
    ``sqrt((1 - q)(L_k(-x)^2 - q L_k(x)^2)) / (L_k(-x) +/- q L_k(x))``.
    """
    if k < 1:
        raise ValueError("SMEECS needs k >= 1")
    sign = parse_sign(sign)
    x = abs(alpha) ** 2
    q = math.exp(-4 * x)
    lneg = float(laguerre_neg(k, x))
    lpos = float(laguerre(k, x))
    denom = lneg + sign * q * lpos
    if denom / lneg <= _DEGENERATE:
        raise DegenerateState(f"SMEECS {'plus' if sign > 0 else 'minus'} degenerate at |alpha|^2={x:g}")
    num = math.sqrt(max(0.0, -math.expm1(-4 * x) * (lneg * lneg - q * lpos * lpos)))
    return num / denom


def closed_form(spec):
    """Closed-form concurrence for any two-mode family in ``spec``."""
    if spec.family == ECS:
        return concurrence_ecs(spec.sign, spec.alpha)
    if spec.family == TMEECS:
        return concurrence_tmeecs(spec.sign, spec.alpha, spec.m, spec.n)
    if spec.family == SMEECS:
        return concurrence_smeecs(spec.sign, spec.alpha, spec.m)
    raise ValueError(f"no concurrence for family {spec.family!r}")


def weak_field_asymptote(family, sign, m=0, n=0):
    """Leading-order concurrence for |alpha|^2 -> 0.

    With m photons on mode a and n on mode b (n = 0 for SMEECS, m = n = 0 for
    ECS) the overlaps behave as ``1 - 2(1 + k)|alpha|^2``, which gives

    * plus:  ``C ~ 2 sqrt((1+m)(1+n)) |alpha|^2``
    * minus: ``C -> 2 sqrt((1+m)(1+n)) / (2 + m + n)``
    """
    family = {f.lower(): f for f in (ECS, TMEECS, SMEECS)}.get(str(family).lower())
    if family is None:
        raise UnsupportedAsymptote("weak-field forms exist for ECS, TMEECS and SMEECS only")
    if family == ECS:
        m = n = 0
    elif family == SMEECS:
        n = 0
    root = 2.0 * math.sqrt((1 + m) * (1 + n))
    if parse_sign(sign) > 0:
        return Asymptote(root, "linear")
    return Asymptote(root / (2 + m + n), "constant")


def concurrence_oracle(state):
    """Concurrence of a normalized two-mode pure state from its reduced purity."""
    rho = fock.reduced_density(state, "a")
    c2 = 2.0 * (1.0 - fock.purity(rho))
    if c2 < -_CLAMP_WARN or c2 > 1 + _CLAMP_WARN:
        warnings.warn(f"oracle concurrence^2 = {c2!r} clamped to [0, 1]", ClampWarning, stacklevel=2)
    return float(np.clip(math.sqrt(max(c2, 0.0)), 0.0, 1.0))


def analyze(spec, trunc=None):
    """Build ``spec`` and report both concurrence routes side by side."""
    trunc = trunc or states.default_truncation(spec)
    built = states.build(spec, trunc)
    return ConcurrenceReport(
        spec=spec,
        closed_form=closed_form(spec),
        oracle=concurrence_oracle(built.state),
        p1=built.component_overlaps.p1,
        p2=built.component_overlaps.p2,
        truncation_used=trunc,
    )
