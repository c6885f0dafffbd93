"""Dense truncated Fock-space states for one and two bosonic modes.

This is the brute-force side of every cross-check in the package: states are
plain amplitude arrays, operators act by index shifts, and nothing here knows
about Laguerre polynomials.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import ShapeMismatch, TruncationInsufficient

__all__ = [
    "TruncationConfig",
    "ModeVector",
    "TwoModeState",
    "ReducedDensity",
    "auto_truncation",
    "coherent",
    "fock_state",
    "create",
    "apply_creation",
    "tensor",
    "inner",
    "inner_mode",
    "reduced_density",
    "purity",
    "expect_b_bdag",
]

DEFAULT_TAIL_TOL = 1e-12
MODES = ("a", "b")


@dataclass(frozen=True)
class TruncationConfig:
    """Per-mode cutoff ``n_max`` and the tolerated weight in the top two levels."""

    n_max: int
    tail_tol: float = DEFAULT_TAIL_TOL

    def __post_init__(self):
        if int(self.n_max) != self.n_max or self.n_max < 1:
            raise ValueError(f"n_max must be an integer >= 1, got {self.n_max!r}")
        if not 0 < self.tail_tol < 1:
            raise ValueError(f"tail_tol must lie in (0, 1), got {self.tail_tol!r}")

    @property
    def dim(self):
        return self.n_max + 1


def _frozen(amps):
    amps = np.array(amps, dtype=complex)
    amps.setflags(write=False)
    return amps


@dataclass(frozen=True, eq=False)
class ModeVector:
    """Single-mode pure state, amplitudes over Fock levels 0..n_max."""

    amps: np.ndarray
    trunc: TruncationConfig

    def __post_init__(self):
        object.__setattr__(self, "amps", _frozen(self.amps))
        if self.amps.shape != (self.trunc.dim,):
            raise ShapeMismatch(f"amplitudes {self.amps.shape} vs n_max={self.trunc.n_max}")

    def norm2(self):
        return float(np.vdot(self.amps, self.amps).real)

    def normalize(self):
        return ModeVector(self.amps / math.sqrt(self.norm2()), self.trunc)

    def tail_weight(self):
        """Fraction of the weight sitting in the two highest levels."""
        return float(np.sum(np.abs(self.amps[-2:]) ** 2)) / self.norm2()

    def check_tail(self):
        w = self.tail_weight()
        if w > self.trunc.tail_tol:
            raise TruncationInsufficient(
                f"tail weight {w:.3e} exceeds {self.trunc.tail_tol:.1e} at n_max={self.trunc.n_max}"
            )
        return self


@dataclass(frozen=True, eq=False)
class TwoModeState:
    """Two-mode pure state; ``amps[n_a, n_b]``."""

    amps: np.ndarray
    trunc: TruncationConfig

    def __post_init__(self):
        object.__setattr__(self, "amps", _frozen(self.amps))
        d = self.trunc.dim
        if self.amps.shape != (d, d):
            raise ShapeMismatch(f"amplitudes {self.amps.shape} vs n_max={self.trunc.n_max}")

    def norm2(self):
        return float(np.vdot(self.amps, self.amps).real)

    def normalize(self):
        return TwoModeState(self.amps / math.sqrt(self.norm2()), self.trunc)

    def tail_weight(self):
        """Largest per-mode fraction of the weight in the two highest levels."""
        w = np.abs(self.amps) ** 2
        outer = max(w[-2:, :].sum(), w[:, -2:].sum())
        return float(outer) / float(w.sum())

    def check_tail(self):
        w = self.tail_weight()
        if w > self.trunc.tail_tol:
            raise TruncationInsufficient(
                f"tail weight {w:.3e} exceeds {self.trunc.tail_tol:.1e} at n_max={self.trunc.n_max}"
            )
        return self

    def __add__(self, other):
        _same_space(self, other)
        return TwoModeState(self.amps + other.amps, self.trunc)

    def __sub__(self, other):
        _same_space(self, other)
        return TwoModeState(self.amps - other.amps, self.trunc)

    def scaled(self, c):
        return TwoModeState(c * self.amps, self.trunc)


@dataclass(frozen=True, eq=False)
class ReducedDensity:
    """Reduced density matrix of one mode."""

    rho: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "rho", _frozen(self.rho))

    def is_valid(self, herm_tol=1e-12, trace_tol=1e-10, eig_tol=1e-10):
        rho = self.rho
        if np.max(np.abs(rho - rho.conj().T), initial=0.0) > herm_tol:
            return False
        if abs(np.trace(rho).real - 1) > trace_tol:
            return False
        return bool(np.linalg.eigvalsh(rho).min() >= -eig_tol)


def _same_space(u, v):
    if u.trunc.n_max != v.trunc.n_max:
        raise ShapeMismatch(f"n_max {u.trunc.n_max} vs {v.trunc.n_max}")


def _photon_added_tail(x, extra, n_max):
    """Weight of (a^dag)^extra |alpha> in levels n_max - 1 and n_max, relative to its norm."""
    n = np.arange(extra, n_max + 1)
    j = n - extra
    if x == 0:
        logw = np.where(j == 0, 0.0, -np.inf)
    else:
        # Poisson(j; x) * n! / j!
        logw = j * math.log(x) - x - np.array([math.lgamma(v + 1) for v in j])
        logw = logw + np.array([math.lgamma(v + 1) for v in n]) - np.array([math.lgamma(v + 1) for v in j])
    w = np.exp(logw - logw.max())
    return float(w[-2:].sum() / w.sum())


def auto_truncation(alpha, extra_photons=0):
    """Cutoff that holds a coherent state plus ``extra_photons`` creations.

    Starts from ``n_max = ceil(s + 10 sqrt(s + 1))`` with
    ``s = |alpha|^2 + extra_photons`` and raises it until the top two levels
    of ``(a^dag)^extra_photons |alpha>`` carry at most ``DEFAULT_TAIL_TOL``.
    """
    x = abs(alpha) ** 2
    s = x + extra_photons
    n_max = int(math.ceil(s + 10.0 * math.sqrt(s + 1.0)))
    while _photon_added_tail(x, extra_photons, n_max) > DEFAULT_TAIL_TOL / 10:
        n_max += 1
    return TruncationConfig(n_max, DEFAULT_TAIL_TOL)


def coherent(alpha, trunc):
    """Glauber coherent state, renormalized on the truncated space."""
    alpha = complex(alpha)
    k = np.arange(trunc.dim)
    if alpha == 0:
        amps = (k == 0).astype(complex)
    else:
        # log-space avoids overflow of alpha**k / sqrt(k!) at large cutoffs
        log_mag = k * math.log(abs(alpha)) - 0.5 * np.array([math.lgamma(j + 1) for j in k])
        amps = np.exp(log_mag - 0.5 * abs(alpha) ** 2 + 1j * k * np.angle(alpha))
    return ModeVector(amps, trunc).normalize().check_tail()


def fock_state(k, trunc):
    if not 0 <= k <= trunc.n_max:
        raise TruncationInsufficient(f"level {k} outside 0..{trunc.n_max}")
    amps = np.zeros(trunc.dim, dtype=complex)
    amps[k] = 1.0
    return ModeVector(amps, trunc)


def _raise_axis(amps, axis, times, trunc):
    """Apply the creation operator ``times`` times along ``axis``, unnormalized."""
    amps = np.moveaxis(np.array(amps, dtype=complex), axis, 0)
    total = float(np.sum(np.abs(amps) ** 2))
    lost = 0.0
    sqrt_n = np.sqrt(np.arange(1, trunc.dim)).reshape((-1,) + (1,) * (amps.ndim - 1))
    for _ in range(times):
        lost_now = float(np.sum(np.abs(amps[-1]) ** 2)) * trunc.dim
        shifted = np.zeros_like(amps)
        shifted[1:] = sqrt_n * amps[:-1]
        amps = shifted
        kept = float(np.sum(np.abs(amps) ** 2))
        lost += lost_now
        if total > 0 and lost / (kept + lost) > trunc.tail_tol:
            raise TruncationInsufficient(
                f"creation operator spilled {lost / (kept + lost):.3e} of the weight past n_max={trunc.n_max}"
            )
    return np.moveaxis(amps, 0, axis)


def create(vec, times=1):
    """(a^dagger)^times acting on a single-mode vector; result unnormalized."""
    if times < 0:
        raise ValueError("times must be non-negative")
    out = ModeVector(_raise_axis(vec.amps, 0, times, vec.trunc), vec.trunc)
    if times and out.norm2() > 0:
        out.check_tail()
    return out


def apply_creation(state, mode, times=1):
    """Creation operator on mode ``'a'`` or ``'b'`` of a two-mode state; result unnormalized."""
    if mode not in MODES:
        raise ValueError(f"mode must be 'a' or 'b', got {mode!r}")
    if times < 0:
        raise ValueError("times must be non-negative")
    if times == 0:
        return state
    out = TwoModeState(_raise_axis(state.amps, MODES.index(mode), times, state.trunc), state.trunc)
    if out.norm2() > 0:
        out.check_tail()
    return out


def tensor(u, v):
    """Product state |u> (x) |v> with ``u`` on mode a."""
    _same_space(u, v)
    return TwoModeState(np.outer(u.amps, v.amps), u.trunc)


def inner(u, v):
    """<u|v> for two-mode states."""
    _same_space(u, v)
    return complex(np.vdot(u.amps, v.amps))


def inner_mode(u, v):
    """<u|v> for single-mode vectors."""
    _same_space(u, v)
    return complex(np.vdot(u.amps, v.amps))


def reduced_density(state, keep="a"):
    """Partial trace of a normalized two-mode pure state, keeping one mode."""
    if keep not in MODES:
        raise ValueError(f"keep must be 'a' or 'b', got {keep!r}")
    psi = state.amps if keep == "a" else state.amps.T
    rho = psi @ psi.conj().T
    return ReducedDensity(0.5 * (rho + rho.conj().T))


def purity(rho):
    """Tr(rho^2)."""
    r = rho.rho
    return float(np.sum(np.abs(r) ** 2))


def expect_b_bdag(state):
    """<psi| b b^dagger |psi> = <n_b> + 1 for a normalized state."""
    w = np.abs(state.amps) ** 2
    n_b = np.arange(state.trunc.dim)
    return float(np.sum(w * (n_b + 1)[None, :]) / w.sum())
