"""Cavity-QED preparation of two-mode excited ECSs.

A two-level atom enters the cavity excited and couples resonantly to mode b
through ``H = g s+ b + g* s- b^dag``.  Detecting the atom in its ground state
leaves mode b with one extra photon.  Repeating this ``n`` times turns the
single-mode excited state on mode a into the two-mode excited state with n
photons on mode b.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import fock, states
from .errors import DegenerateState, RegimeViolation, TruncationInsufficient
from .states import SMEECS, StateSpec

__all__ = [
    "AtomFieldState",
    "PrepOutcome",
    "FIRST_ORDER",
    "EXACT",
    "FIRST_ORDER_GT_MAX",
    "excite",
    "evolve_first_order",
    "evolve_exact_jc",
    "postselect_ground",
    "infidelity",
    "run_chain",
]

EXCITED, GROUND = 0, 1
FIRST_ORDER = "first-order"
EXACT = "exact"
FIRST_ORDER_GT_MAX = 0.05


@dataclass(frozen=True, eq=False)
class AtomFieldState:
    """Atom (index 0 = e, 1 = g) times two field modes; ``amps[atom, n_a, n_b]``."""

    amps: np.ndarray
    trunc: fock.TruncationConfig

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        d = self.trunc.dim
        if amps.shape != (2, d, d):
            raise ValueError(f"expected shape (2, {d}, {d}), got {amps.shape}")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    def norm2(self):
        return float(np.vdot(self.amps, self.amps).real)

    def branch(self, level):
        return fock.TwoModeState(self.amps[level], self.trunc)


@dataclass(frozen=True, eq=False)
class PrepOutcome:
    post_state: fock.TwoModeState
    success_prob: float
    fidelity_to_target: float
    gt: complex
    atoms_detected: int
    backend: str = FIRST_ORDER
    per_atom_probs: tuple = field(default_factory=tuple)
    infidelity: float = 0.0


def excite(field_state):
    """Attach an excited atom to a two-mode field state."""
    amps = np.zeros((2,) + field_state.amps.shape, dtype=complex)
    amps[EXCITED] = field_state.amps
    return AtomFieldState(amps, field_state.trunc)


def evolve_first_order(field_state, g, t):
    """``|psi>|e> - i g* t b^dag |psi>|g>``: the propagator to first order in g t.

    The result is not normalized.
    """
    gt = complex(g) * t
    if abs(gt) > FIRST_ORDER_GT_MAX:
        raise RegimeViolation(f"|g t| = {abs(gt):.3g} exceeds {FIRST_ORDER_GT_MAX} for the first-order propagator")
    amps = np.zeros((2,) + field_state.amps.shape, dtype=complex)
    amps[EXCITED] = field_state.amps
    if gt != 0:
        amps[GROUND] = -1j * gt.conjugate() * fock.apply_creation(field_state, "b", 1).amps
    return AtomFieldState(amps, field_state.trunc)


def evolve_exact_jc(state, g, t):
    """Exact resonant evolution, block by block.

    At fixed ``n_a`` the pair ``{|e, n>, |g, n+1>}`` rotates by the angle
    ``|g| t sqrt(n+1)``; ``|g, 0>`` does not move.  The top level ``|e, n_max>``
    has no partner inside the truncation and is left alone, which is only
    harmless while it is empty.
    """
    g = complex(g)
    trunc = state.trunc
    ce, cg = state.amps[EXCITED], state.amps[GROUND]
    top = float(np.sum(np.abs(ce[:, -1]) ** 2))
    if top > trunc.tail_tol * max(state.norm2(), 1e-300):
        raise TruncationInsufficient(f"excited atom with n_b = n_max carries weight {top:.2e}")
    theta = abs(g) * t * np.sqrt(np.arange(1, trunc.dim))
    phase = g / abs(g) if g != 0 else 1.0
    cos, sin = np.cos(theta), np.sin(theta)

    new_e = ce.copy()
    new_g = cg.copy()
    e_low, g_high = ce[:, :-1], cg[:, 1:]
    new_e[:, :-1] = cos * e_low - 1j * phase * sin * g_high
    new_g[:, 1:] = -1j * np.conj(phase) * sin * e_low + cos * g_high
    return AtomFieldState(np.stack([new_e, new_g]), trunc)


def postselect_ground(state):
    """Project the atom on |g>.

    Returns ``(field_state, probability)`` where the probability is the
    projected norm squared of the input as given (the input is not
    renormalized first).
    """
    ground = state.branch(GROUND)
    prob = ground.norm2()
    if prob < 1e-20:
        raise DegenerateState(f"ground-state detection probability {prob:.2e}")
    return ground.normalize(), prob


def infidelity(target, state):
    """``1 - |<target|state>|^2`` for normalized inputs, computed from the orthogonal residual."""
    ov = fock.inner(target, state)
    resid = state.amps - ov * target.amps
    return float(np.vdot(resid, resid).real)


def run_chain(initial, g, t, atoms, backend=FIRST_ORDER, trunc=None):
    """Send ``atoms`` atoms through the cavity and keep the all-ground record.

    ``initial`` must be a SMEECS spec; the target is the TMEECS with the same
    sign, alpha and m, and ``n = atoms``.
    """
    if initial.family != SMEECS:
        raise ValueError("the preparation chain starts from a SMEECS")
    if atoms < 1:
        raise ValueError("at least one atom is needed")
    if backend not in (FIRST_ORDER, EXACT):
        raise ValueError(f"backend must be {FIRST_ORDER!r} or {EXACT!r}")
    trunc = trunc or fock.auto_truncation(initial.alpha, max(initial.m, atoms))

    field_state = states.build(initial, trunc).state
    probs = []
    for _ in range(atoms):
        if backend == FIRST_ORDER:
            evolved = evolve_first_order(field_state, g, t)
        else:
            evolved = evolve_exact_jc(excite(field_state), g, t)
        field_state, p = postselect_ground(evolved)
        probs.append(p)

    target = states.build_tmeecs(initial.sign, initial.alpha, initial.m, atoms, trunc).state
    bad = infidelity(target, field_state)
    return PrepOutcome(
        post_state=field_state,
        success_prob=math.prod(probs),
        fidelity_to_target=min(1.0, max(0.0, 1.0 - bad)),
        gt=complex(g) * t,
        atoms_detected=atoms,
        backend=backend,
        per_atom_probs=tuple(probs),
        infidelity=bad,
    )
