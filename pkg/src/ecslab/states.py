"""Entangled coherent states and their photon-added relatives.

Every builder constructs the state numerically on a truncated Fock space and
also reports the closed-form normalization constant, so the two can be
compared.  Families:

* ``ECS``     A (|a,a> +/- |-a,-a>)
* ``TMEECS``  N a^dag^m b^dag^n (|a,a> +/- |-a,-a>),  m, n >= 1
* ``SMEECS``  N a^dag^m (|a,a> +/- |-a,-a>),         m >= 1
* ``component``  single-mode photon-added coherent state N(a,k) a^dag^k |+/-a>
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import fock
from .errors import DegenerateState
from .laguerre import OverlapPair, laguerre, laguerre_neg, overlap_p, photon_added_norm

__all__ = [
    "ECS",
    "TMEECS",
    "SMEECS",
    "COMPONENT",
    "StateSpec",
    "BuiltState",
    "TwoComponent",
    "parse_sign",
    "build",
    "build_ecs",
    "build_tmeecs",
    "build_smeecs",
    "build_component",
    "decompose_two_component",
    "default_truncation",
]

ECS = "ECS"
TMEECS = "TMEECS"
SMEECS = "SMEECS"
COMPONENT = "component"
FAMILIES = (ECS, TMEECS, SMEECS, COMPONENT)

DEGENERATE_NORM2 = 1e-14

_SIGNS = {"plus": 1, "+": 1, "minus": -1, "-": -1, 1: 1, -1: -1}


def parse_sign(sign):
    """Map ``'plus'``/``'minus'``/``'+'``/``'-'``/``+-1`` to +1 or -1."""
    try:
        return _SIGNS[sign.lower() if isinstance(sign, str) else sign]
    except (KeyError, TypeError):
        raise ValueError(f"unknown sign {sign!r}") from None


def sign_name(sign):
    return "plus" if parse_sign(sign) > 0 else "minus"


@dataclass(frozen=True)
class StateSpec:
    """Which family member to build.

    For ``SMEECS`` the excitation count is ``m`` and ``n`` is ignored;
    for ``component`` the excitation count is ``m`` and ``sign`` picks +alpha or -alpha.
    """

    family: str
    sign: int
    alpha: complex
    m: int = 0
    n: int = 0

    def __post_init__(self):
        family = {f.lower(): f for f in FAMILIES}.get(str(self.family).lower())
        if family is None:
            raise ValueError(f"unknown family {self.family!r}")
        object.__setattr__(self, "family", family)
        object.__setattr__(self, "sign", parse_sign(self.sign))
        object.__setattr__(self, "alpha", complex(self.alpha))
        if self.m < 0 or self.n < 0:
            raise ValueError("excitation counts must be non-negative")
        if family == ECS and (self.m or self.n):
            raise ValueError("ECS carries no photon excitations")
        if family == TMEECS and (self.m < 1 or self.n < 1):
            raise ValueError("TMEECS needs m >= 1 and n >= 1")
        if family == SMEECS:
            if self.m < 1:
                raise ValueError("SMEECS needs m >= 1")
            object.__setattr__(self, "n", 0)

    @property
    def alpha_sq(self):
        return abs(self.alpha) ** 2

    @property
    def excitations(self):
        """Creation operators applied to modes a and b."""
        return self.m, self.n


@dataclass(frozen=True, eq=False)
class BuiltState:
    """A normalized numeric state together with its closed-form normalization.

    ``oracle_norm2`` is the Fock-space norm squared of the state before
    normalization; ``analytic_norm**2 * oracle_norm2`` should be one.
    """

    spec: StateSpec
    state: fock.TwoModeState
    analytic_norm: float
    oracle_norm2: float
    component_overlaps: OverlapPair

    @property
    def norm_mismatch(self):
        return self.analytic_norm**2 * self.oracle_norm2 - 1.0


@dataclass(frozen=True, eq=False)
class TwoComponent:
    """``mu |eta>|gamma> + nu |xi>|delta>`` with all four kets normalized."""

    mu: complex
    nu: complex
    eta: fock.ModeVector
    xi: fock.ModeVector
    gamma: fock.ModeVector
    delta: fock.ModeVector

    @property
    def p1(self):
        return fock.inner_mode(self.eta, self.xi)

    @property
    def p2(self):
        return fock.inner_mode(self.delta, self.gamma)

    def assemble(self):
        return fock.tensor(self.eta, self.gamma).scaled(self.mu) + fock.tensor(self.xi, self.delta).scaled(
            self.nu
        )


def default_truncation(spec):
    return fock.auto_truncation(spec.alpha, max(spec.m, spec.n))


def _ecs_core(sign, alpha, trunc):
    plus = fock.coherent(alpha, trunc)
    minus = fock.coherent(-alpha, trunc)
    return fock.tensor(plus, plus) + fock.tensor(minus, minus).scaled(sign)


def _finish(spec, raw, inv_norm2, overlaps):
    norm2 = raw.norm2()
    if norm2 < DEGENERATE_NORM2:
        raise DegenerateState(f"{spec.family} {sign_name(spec.sign)} at |alpha|^2={spec.alpha_sq:g} has norm^2 {norm2:.2e}")
    state = raw.normalize()
    state.check_tail()
    return BuiltState(spec, state, 1.0 / math.sqrt(inv_norm2), norm2, overlaps)


def build_ecs(sign, alpha, trunc=None):
    """Two-mode entangled coherent state; inverse norm squared 2[1 +/- exp(-4|a|^2)]."""
    spec = StateSpec(ECS, sign, alpha)
    trunc = trunc or default_truncation(spec)
    x = spec.alpha_sq
    e4 = math.exp(-4 * x)
    inv = 2 * (1 + e4) if spec.sign > 0 else -2 * math.expm1(-4 * x)
    q = math.exp(-2 * x)
    return _finish(spec, _ecs_core(spec.sign, spec.alpha, trunc), inv, OverlapPair(q, q))


def _excited_inverse_norm2(sign, x, m, n):
    # 2 m! n! [L_m(-x) L_n(-x) +/- e^{-4x} L_m(x) L_n(x)]
    lead = laguerre_neg(m, x) * laguerre_neg(n, x)
    cross = math.exp(-4 * x) * laguerre(m, x) * laguerre(n, x)
    return 2.0 * math.factorial(m) * math.factorial(n) * float(lead + sign * cross)


def build_tmeecs(sign, alpha, m, n, trunc=None):
    """Two-mode excited ECS with m photons added to mode a and n to mode b."""
    spec = StateSpec(TMEECS, sign, alpha, m, n)
    trunc = trunc or default_truncation(spec)
    raw = fock.apply_creation(fock.apply_creation(_ecs_core(spec.sign, spec.alpha, trunc), "a", m), "b", n)
    inv = _excited_inverse_norm2(spec.sign, spec.alpha_sq, m, n)
    overlaps = OverlapPair(float(overlap_p(spec.alpha, m)), float(overlap_p(spec.alpha, n)))
    return _finish(spec, raw, inv, overlaps)


def build_smeecs(sign, alpha, m, trunc=None):
    """Single-mode excited ECS: m photons added to mode a only.

    Inverse norm squared is 2 m! [L_m(-x) +/- exp(-4x) L_m(x)] with x = |alpha|^2.
    """
    spec = StateSpec(SMEECS, sign, alpha, m)
    trunc = trunc or default_truncation(spec)
    raw = fock.apply_creation(_ecs_core(spec.sign, spec.alpha, trunc), "a", m)
    inv = _excited_inverse_norm2(spec.sign, spec.alpha_sq, m, 0)
    overlaps = OverlapPair(float(overlap_p(spec.alpha, m)), math.exp(-2 * spec.alpha_sq))
    return _finish(spec, raw, inv, overlaps)


def build_component(sign_of_alpha, alpha, k, mode="a", trunc=None):
    """Normalized photon-added coherent state N(alpha, k) (creation)^k |+/-alpha>.

    ``mode`` only labels which field the vector belongs to; the single-mode
    algebra is identical for a and b.
    """
    if mode not in fock.MODES:
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    beta = parse_sign(sign_of_alpha) * complex(alpha)
    trunc = trunc or fock.auto_truncation(alpha, k)
    raw = fock.create(fock.coherent(beta, trunc), k)
    return raw.normalize()


def build(spec, trunc=None):
    """Dispatch on ``spec.family``; returns a :class:`BuiltState`."""
    if spec.family == ECS:
        return build_ecs(spec.sign, spec.alpha, trunc)
    if spec.family == TMEECS:
        return build_tmeecs(spec.sign, spec.alpha, spec.m, spec.n, trunc)
    if spec.family == SMEECS:
        return build_smeecs(spec.sign, spec.alpha, spec.m, trunc)
    raise ValueError("photon-added components are single-mode; use build_component")


def decompose_two_component(spec, trunc=None):
    """Cast an ECS/TMEECS/SMEECS into ``mu |eta>|gamma> + nu |xi>|delta>``.

    The components are the normalized photon-added states on +alpha (eta,
    gamma) and -alpha (xi, delta); the branch sign is carried by ``nu``.
    """
    if spec.family == COMPONENT:
        raise ValueError("a single photon-added component has no two-component form")
    trunc = trunc or default_truncation(spec)
    m, n = spec.excitations
    eta = build_component(+1, spec.alpha, m, "a", trunc)
    xi = build_component(-1, spec.alpha, m, "a", trunc)
    gamma = build_component(+1, spec.alpha, n, "b", trunc)
    delta = build_component(-1, spec.alpha, n, "b", trunc)
    p1p2 = float(overlap_p(spec.alpha, m) * overlap_p(spec.alpha, n))
    if spec.sign < 0 and (m, n) == (0, 0):
        weight = -math.expm1(-4 * spec.alpha_sq)
    else:
        weight = 1 + spec.sign * p1p2
    # unnormalized norm^2 relative to the four component norms
    raw_norm2 = 2 * weight / float(photon_added_norm(spec.alpha, m) * photon_added_norm(spec.alpha, n)) ** 2
    if raw_norm2 < DEGENERATE_NORM2:
        raise DegenerateState(f"{spec.family} {sign_name(spec.sign)} at |alpha|^2={spec.alpha_sq:g} is degenerate")
    mu = 1.0 / math.sqrt(2 * weight)
    return TwoComponent(mu, spec.sign * mu, eta, xi, gamma, delta)
