import math

import numpy as np
import pytest

from ecslab import fock, states
from ecslab.errors import DegenerateState
from ecslab.laguerre import overlap_p
from ecslab.states import StateSpec

GRID_X = [0.25, 1.0, 4.0]
EXC = [1, 2, 3]


def _alpha(x, phase=0.0):
    return math.sqrt(x) * np.exp(1j * phase)


def test_spec_validation():
    with pytest.raises(ValueError):
        StateSpec("TMEECS", "plus", 1.0, 0, 2)
    with pytest.raises(ValueError):
        StateSpec("SMEECS", "minus", 1.0, 0)
    with pytest.raises(ValueError):
        StateSpec("ECS", "plus", 1.0, 1)
    with pytest.raises(ValueError):
        StateSpec("ecs", "sideways", 1.0)
    assert StateSpec("tmeecs", "-", 1.0, 1, 2).family == "TMEECS"
    assert StateSpec("smeecs", "plus", 1.0, 2, 5).n == 0


def test_ecs_at_vacuum():
    built = states.build_ecs("plus", 0)
    assert built.analytic_norm == 0.5
    assert abs(built.state.amps[0, 0]) == pytest.approx(1.0)
    with pytest.raises(DegenerateState):
        states.build_ecs("minus", 0)


def test_ecs_minus_norm_value():
    built = states.build_ecs("minus", 1.0)
    # 2 (1 - e^{-4})
    assert built.analytic_norm ** -2 == pytest.approx(1.963368722222532, rel=1e-12)
    assert built.oracle_norm2 == pytest.approx(1.963368722222532, rel=1e-10)


@pytest.mark.parametrize("sign", ["plus", "minus"])
@pytest.mark.parametrize("x", GRID_X)
def test_ecs_norm_cross_check(sign, x):
    assert abs(states.build_ecs(sign, _alpha(x, 0.4)).norm_mismatch) <= 1e-8


@pytest.mark.parametrize("sign", ["plus", "minus"])
@pytest.mark.parametrize("x", GRID_X)
@pytest.mark.parametrize("m", EXC)
@pytest.mark.parametrize("n", EXC)
def test_tmeecs_norm_cross_check(sign, x, m, n):
    built = states.build_tmeecs(sign, _alpha(x), m, n)
    assert abs(built.norm_mismatch) <= 1e-8
    assert built.component_overlaps.p1 == overlap_p(_alpha(x), m)


def test_tmeecs_norm_point():
    assert abs(states.build_tmeecs("minus", 1.0, 2, 3).norm_mismatch) <= 1e-8


@pytest.mark.parametrize("sign", ["plus", "minus"])
@pytest.mark.parametrize("x", GRID_X)
@pytest.mark.parametrize("k", [1, 2, 3, 4, 6])
def test_smeecs_norm_cross_check(sign, x, k):
    assert abs(states.build_smeecs(sign, _alpha(x), k).norm_mismatch) <= 1e-8


@pytest.mark.parametrize("m,n", [(1, 1), (2, 3)])
def test_alpha_zero_collapse(m, n):
    built = states.build_tmeecs("plus", 0, m, n)
    assert abs(built.state.amps[m, n]) == pytest.approx(1.0, abs=1e-14)
    assert built.analytic_norm == pytest.approx(1 / (2 * math.sqrt(math.factorial(m) * math.factorial(n))))
    assert abs(states.build_smeecs("plus", 0, m).state.amps[m, 0]) == pytest.approx(1.0, abs=1e-14)
    with pytest.raises(DegenerateState):
        states.build_tmeecs("minus", 0, m, n)
    with pytest.raises(DegenerateState):
        states.build_smeecs("minus", 0, m)


def test_component_basics():
    trunc = fock.auto_truncation(1.0, 3)
    vac_added = states.build_component(+1, 0, 3, "a", trunc)
    np.testing.assert_allclose(np.abs(vac_added.amps), np.eye(trunc.dim)[3], atol=1e-15)
    for k in range(4):
        assert states.build_component("-", 1.0, k, "b", trunc).norm2() == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("x", [0.3, 1.0, 2.5])
@pytest.mark.parametrize("m", [0, 1, 2, 5])
def test_component_overlap(x, m):
    a = _alpha(x, 1.1)
    trunc = fock.auto_truncation(a, m)
    u = states.build_component("+", a, m, "a", trunc)
    v = states.build_component("-", a, m, "a", trunc)
    assert fock.inner_mode(u, v).real == pytest.approx(overlap_p(a, m), abs=1e-10)


@pytest.mark.parametrize(
    "spec",
    [
        StateSpec("ECS", "plus", 1.0),
        StateSpec("ECS", "minus", 0.5j),
        StateSpec("TMEECS", "minus", math.sqrt(2), 1, 2),
        StateSpec("TMEECS", "plus", 0.6, 3, 1),
        StateSpec("SMEECS", "minus", 1.3, 2),
    ],
)
def test_decomposition_reassembles(spec):
    trunc = states.default_truncation(spec)
    parts = states.decompose_two_component(spec, trunc)
    target = states.build(spec, trunc).state
    assert np.max(np.abs(parts.assemble().amps - target.amps)) < 1e-10
    # normalization of mu|eta>|gamma> + nu|xi>|delta>
    mu, nu = parts.mu, parts.nu
    norm = abs(mu) ** 2 + abs(nu) ** 2 + 2 * (np.conj(mu) * nu * parts.p1 * np.conj(parts.p2)).real
    assert norm == pytest.approx(1.0, abs=1e-10)


def test_decomposition_ecs_weights():
    parts = states.decompose_two_component(StateSpec("ECS", "plus", 1.0))
    assert parts.mu == parts.nu == pytest.approx(states.build_ecs("plus", 1.0).analytic_norm)


def test_phase_covariance():
    base = states.build_tmeecs("minus", 1.2, 2, 1)
    turned = states.build_tmeecs("minus", 1.2 * np.exp(0.9j), 2, 1)
    assert turned.analytic_norm == pytest.approx(base.analytic_norm, rel=1e-13)
    assert turned.oracle_norm2 == pytest.approx(base.oracle_norm2, rel=1e-10)
    assert turned.component_overlaps.p1 == pytest.approx(base.component_overlaps.p1, abs=1e-14)
