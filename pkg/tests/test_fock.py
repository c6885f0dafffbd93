import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from scipy.stats import poisson

from ecslab import fock
from ecslab.errors import ShapeMismatch, TruncationInsufficient
from ecslab.laguerre import laguerre, laguerre_neg


def test_truncation_config_validation():
    with pytest.raises(ValueError):
        fock.TruncationConfig(0)
    with pytest.raises(ValueError):
        fock.TruncationConfig(5, tail_tol=1.5)


def test_auto_truncation_formula():
    assert fock.auto_truncation(0, 0).n_max == 10
    assert fock.auto_truncation(2.0, 2).n_max == 33  # ceil(6 + 10 sqrt 7)
    assert fock.auto_truncation(0, 0).tail_tol == 1e-12


def test_auto_truncation_poisson_tail():
    trunc = fock.auto_truncation(2.0, 2)
    # weight of a |alpha|^2 = 4 coherent state at or above n_max - 1
    assert poisson.sf(trunc.n_max - 2, 4.0) <= 1e-12
    assert fock.coherent(2.0, trunc).tail_weight() <= 1e-12


@pytest.mark.parametrize("x", [0.0, 1.0, 9.0, 25.0])
def test_auto_truncation_holds_coherent(x):
    for extra in (0, 3):
        trunc = fock.auto_truncation(math.sqrt(x), extra)
        vec = fock.create(fock.coherent(math.sqrt(x), trunc), extra)
        assert vec.tail_weight() <= trunc.tail_tol


def test_coherent_vacuum_and_norm():
    trunc = fock.TruncationConfig(20)
    vac = fock.coherent(0, trunc)
    np.testing.assert_array_equal(vac.amps, np.eye(21)[0])
    vec = fock.coherent(0.7 + 0.4j, trunc)
    assert vec.norm2() == pytest.approx(1.0, abs=1e-12)


def test_coherent_overlap():
    trunc = fock.auto_truncation(1.0)
    u, v = fock.coherent(1.0, trunc), fock.coherent(-1.0, trunc)
    assert fock.inner_mode(u, v) == pytest.approx(math.exp(-2), rel=1e-12)
    assert fock.inner_mode(u, u) == pytest.approx(1.0, abs=1e-14)


def test_coherent_poisson_statistics():
    trunc = fock.auto_truncation(1.5)
    w = np.abs(fock.coherent(1.5, trunc).amps) ** 2
    np.testing.assert_allclose(w, poisson.pmf(np.arange(trunc.dim), 2.25), atol=1e-14)


def test_coherent_rejects_short_cutoff():
    with pytest.raises(TruncationInsufficient):
        fock.coherent(2.0, fock.TruncationConfig(6))


def test_creation_on_vacuum():
    trunc = fock.TruncationConfig(10)
    vac = fock.tensor(fock.fock_state(0, trunc), fock.fock_state(0, trunc))
    out = fock.apply_creation(vac, "a", 1)
    expect = np.zeros((11, 11))
    expect[1, 0] = 1.0
    np.testing.assert_array_equal(out.amps, expect)
    assert fock.apply_creation(vac, "b", 0) is vac


@pytest.mark.parametrize("m", [1, 2, 4, 6])
@pytest.mark.parametrize("x", [0.25, 1.0, 4.0])
def test_photon_added_norm_and_cross_overlap(m, x):
    alpha = math.sqrt(x) * np.exp(0.3j)
    trunc = fock.auto_truncation(alpha, m)
    plus = fock.create(fock.coherent(alpha, trunc), m)
    minus = fock.create(fock.coherent(-alpha, trunc), m)
    diag = math.factorial(m) * laguerre_neg(m, x)
    cross = math.factorial(m) * math.exp(-2 * x) * laguerre(m, x)
    assert plus.norm2() == pytest.approx(diag, rel=1e-8)
    assert fock.inner_mode(plus, minus).real == pytest.approx(cross, rel=1e-8, abs=1e-8 * diag)


def test_spill_detected():
    trunc = fock.TruncationConfig(5)
    top = fock.tensor(fock.fock_state(5, trunc), fock.fock_state(0, trunc))
    with pytest.raises(TruncationInsufficient):
        fock.apply_creation(top, "a", 1)


def test_inner_shape_mismatch():
    u = fock.tensor(fock.fock_state(0, fock.TruncationConfig(3)), fock.fock_state(0, fock.TruncationConfig(3)))
    v = fock.tensor(fock.fock_state(0, fock.TruncationConfig(4)), fock.fock_state(0, fock.TruncationConfig(4)))
    with pytest.raises(ShapeMismatch):
        fock.inner(u, v)


def test_two_mode_inner_product():
    trunc = fock.auto_truncation(1.0)
    plus = fock.coherent(1.0, trunc)
    minus = fock.coherent(-1.0, trunc)
    val = fock.inner(fock.tensor(plus, plus), fock.tensor(minus, minus))
    assert val == pytest.approx(math.exp(-4), rel=1e-12)


def _bell(trunc):
    amps = np.zeros((trunc.dim, trunc.dim), dtype=complex)
    amps[0, 0] = amps[1, 1] = 1 / math.sqrt(2)
    return fock.TwoModeState(amps, trunc)


def test_reduced_density_product_and_bell():
    trunc = fock.auto_truncation(1.0)
    u, v = fock.coherent(0.8, trunc), fock.coherent(-0.3j, trunc)
    rho = fock.reduced_density(fock.tensor(u, v), "a")
    np.testing.assert_allclose(rho.rho, np.outer(u.amps, u.amps.conj()), atol=1e-14)
    assert rho.is_valid()
    assert fock.purity(rho) == pytest.approx(1.0, abs=1e-12)
    assert fock.purity(fock.reduced_density(_bell(trunc), "b")) == pytest.approx(0.5, abs=1e-15)


def test_purity_of_mixed_qubit():
    assert fock.purity(fock.ReducedDensity(np.eye(2) / 2)) == 0.5


def test_normalize_idempotent():
    rng = np.random.default_rng(4)
    trunc = fock.TruncationConfig(6)
    s = fock.TwoModeState(rng.normal(size=(7, 7)) + 1j * rng.normal(size=(7, 7)), trunc).normalize()
    assert np.max(np.abs(s.normalize().amps - s.amps)) < 1e-14
    assert s.norm2() == pytest.approx(1.0, abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 2**32 - 1), st.integers(2, 8))
def test_partial_traces_share_purity(seed, n_max):
    rng = np.random.default_rng(seed)
    d = n_max + 1
    s = fock.TwoModeState(rng.normal(size=(d, d)) + 1j * rng.normal(size=(d, d)), fock.TruncationConfig(n_max))
    s = s.normalize()
    ra, rb = fock.reduced_density(s, "a"), fock.reduced_density(s, "b")
    assert ra.is_valid() and rb.is_valid()
    assert abs(fock.purity(ra) - fock.purity(rb)) <= 1e-10


def test_truncation_monotonicity():
    alpha, m = 1.2, 3
    results = []
    for trunc in (fock.auto_truncation(alpha, m), fock.TruncationConfig(fock.auto_truncation(alpha, m).n_max + 5)):
        u = fock.create(fock.coherent(alpha, trunc), m).normalize()
        v = fock.create(fock.coherent(-alpha, trunc), m).normalize()
        results.append(fock.inner_mode(u, v))
    assert abs(results[0] - results[1]) < math.sqrt(1e-12)


def test_values_are_read_only():
    vec = fock.coherent(0.5, fock.TruncationConfig(15))
    with pytest.raises(ValueError):
        vec.amps[0] = 0


def test_expect_b_bdag():
    trunc = fock.auto_truncation(1.0)
    s = fock.tensor(fock.fock_state(2, trunc), fock.coherent(1.0, trunc))
    assert fock.expect_b_bdag(s) == pytest.approx(2.0, rel=1e-12)
