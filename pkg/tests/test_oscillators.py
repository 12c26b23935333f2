"""Oscillator-chain tests: thermal entropy, two-mode pairs, area law."""

import math

import numpy as np
import pytest

from qilab import oscillators as osc


def _thermal_entropy_oracle(bw, n_terms=400):
    """Oracle: direct -sum p_n ln p_n over the Boltzmann ladder."""
    n = np.arange(n_terms)
    p = (1.0 - math.exp(-bw)) * np.exp(-bw * n)
    p = p[p > 0]
    return float(-(p * np.log(p)).sum())


def test_thermal_entropy_matches_boltzmann_oracle():
    for bw in (0.1, 0.5, 1.0, 2.0, 5.0):
        assert osc.thermal_entropy(bw) == pytest.approx(
            _thermal_entropy_oracle(bw), abs=1e-10)


def test_thermal_entropy_limits():
    # deep cold: entropy vanishes; high temperature: S ~ 1 - ln(bw)
    assert osc.thermal_entropy(40.0) == pytest.approx(0.0, abs=1e-12)
    bw = 1e-4
    assert osc.thermal_entropy(bw) == pytest.approx(
        1.0 - math.log(bw), rel=1e-3)


def test_thermal_entropy_rejects_nonpositive():
    with pytest.raises(ValueError):
        osc.thermal_entropy(0.0)
    with pytest.raises(ValueError):
        osc.thermal_entropy(-1.0)


def test_partition_function_matches_ladder_sum():
    for bw in (0.3, 1.0, 3.0):
        n = np.arange(2000)
        want = float(np.exp(-bw * (n + 0.5)).sum())
        assert osc.partition_function(bw) == pytest.approx(want, rel=1e-12)
        assert osc.partition_function(bw) == pytest.approx(
            1.0 / (2.0 * math.sinh(bw / 2.0)), rel=1e-12)


def test_tfd_pair_identities():
    for theta in (0.2, 0.7, 1.2):
        pair = osc.tfd_pair(theta)
        # the split frequencies multiply back to omega^2
        assert pair.omega_plus * pair.omega_minus == pytest.approx(1.0, abs=1e-12)
        assert pair.a == pytest.approx(-math.tan(theta / 2.0), abs=1e-12)
        bw = -2.0 * math.log(math.tan(theta / 2.0))
        # beta = 1/T, so with omega = 1 the product is bw itself
        assert 1.0 / pair.t_effective == pytest.approx(bw, abs=1e-10)
        assert pair.s_exact == pytest.approx(osc.thermal_entropy(bw), abs=1e-12)
        eps = 1.0 - math.tan(theta / 2.0) ** 2
        assert pair.s_approx == pytest.approx(
            -math.log(eps) + 1.0 - eps / 2.0, abs=1e-12)


def test_tfd_pair_high_entanglement_limit():
    # near theta = pi/2 the approximation converges on the exact entropy
    close = osc.tfd_pair(1.55)
    assert close.s_exact > 2.0
    assert close.s_approx == pytest.approx(close.s_exact, rel=2e-2)
    far = osc.tfd_pair(0.2)
    assert far.s_exact < 0.2


def test_tfd_pair_domain():
    with pytest.raises(ValueError):
        osc.tfd_pair(0.0)
    with pytest.raises(ValueError):
        osc.tfd_pair(math.pi / 2)


def test_coupling_matrix_validation():
    with pytest.raises(ValueError):
        osc.CouplingMatrix(np.array([[1.0, 0.2], [0.3, 1.0]]))  # asymmetric
    with pytest.raises(ValueError):
        osc.CouplingMatrix(np.array([[1.0, 2.0], [2.0, 1.0]]))  # indefinite


def test_correlators_uncertainty_product():
    K = osc.tfd_coupling(0.8)
    X, P = osc.correlators(K)
    # ground-state correlators satisfy X P = 1/4 exactly
    assert np.allclose(X @ P, np.eye(2) / 4.0, atol=1e-12)
    assert np.allclose(X, X.T, atol=1e-12)
    assert np.allclose(P, P.T, atol=1e-12)


def test_two_mode_pipeline_matches_closed_form():
    # correlator-method entropy of one mode == thermal closed form
    for theta in np.linspace(0.05, 1.5, 30):
        pair = osc.tfd_pair(float(theta))
        K = osc.tfd_coupling(float(theta))
        got = osc.subsystem_entropy(K, [0])
        assert got == pytest.approx(pair.s_exact, abs=1e-8)


def test_subsystem_entropy_pure_state_is_zero():
    K = osc.tfd_coupling(0.9)
    assert osc.subsystem_entropy(K, [0, 1]) == pytest.approx(0.0, abs=1e-10)


def test_subsystem_entropy_complement_symmetry():
    # the ground state is pure, so both sides of any cut agree
    for l in (0, 1, 5):
        K = osc.radial_K(l, 10)
        a = osc.subsystem_entropy(K, list(range(0, 4)))
        b = osc.subsystem_entropy(K, list(range(4, 10)))
        assert a == pytest.approx(b, abs=1e-10)


def test_subsystem_entropy_validation():
    K = osc.tfd_coupling(0.5)
    with pytest.raises(ValueError):
        osc.subsystem_entropy(K, [])
    with pytest.raises(ValueError):
        osc.subsystem_entropy(K, [2])


def test_radial_coupling_reference_matrix():
    K = osc.radial_K(0, 2).K
    want = np.array([[2.5, -1.125], [-1.125, 2.125]])
    assert np.allclose(K, want, atol=1e-12)


def test_radial_coupling_properties():
    K = osc.radial_K(3, 12).K
    assert np.allclose(K, K.T, atol=1e-12)
    assert np.linalg.eigvalsh(K)[0] > 0.0
    # tridiagonal bands only
    assert np.allclose(np.triu(K, 2), 0.0, atol=1e-15)


def test_fit_area_coefficient_matches_lstsq_oracle():
    rng = np.random.Generator(np.random.PCG64(8))
    r = np.linspace(0.5, 20.0, 40)
    s = 0.27 * r**2 + rng.normal(0.0, 0.05, size=r.size)
    samples = list(zip(r, s))
    got = osc.fit_area_coefficient(samples, r_max=15.0)
    mask = r < 15.0
    want = float(np.linalg.lstsq(
        (r[mask] ** 2)[:, None], s[mask], rcond=None)[0][0])
    assert got == pytest.approx(want, abs=1e-12)


def test_area_law_scan_small_lattice_regression():
    curve = osc.area_law_scan(12, 150)
    samples = dict(curve.samples)
    assert samples[0.5] == 0.0
    assert samples[12.5] == 0.0  # R = N + 1/2 traces everything
    pins = {
        1.5: 0.5963386774181203,
        4.5: 5.857947105549305,
        8.5: 20.61772834152986,
        11.5: 32.726753621806694,
    }
    for r, want in pins.items():
        assert samples[r] == pytest.approx(want, abs=1e-9)
    assert curve.fit_lambda == pytest.approx(0.2687834003180999, abs=1e-9)


def test_area_law_scan_tracks_area_scaling():
    curve = osc.area_law_scan(12, 150)
    for r, s in curve.samples:
        if 1.0 < r < 11.0:
            # interior samples scale like lambda r^2 within a few percent
            assert s / r**2 == pytest.approx(0.27, abs=0.02)


def test_area_law_scan_validation():
    with pytest.raises(ValueError):
        osc.area_law_scan(4, 100)
    with pytest.raises(ValueError):
        osc.area_law_scan(12, 0)
