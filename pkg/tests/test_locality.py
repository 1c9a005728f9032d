import numpy as np
import pytest

from photonloc import (DetectorVolume, EnergyDensityMap, Grid, LPState,
                       SpectralField, antilocality_witness, detector_energy,
                       energy_density, helicity_vanishing_scan, make_lp_compact,
                       plane_wave, sin2_profile, support_estimate,
                       tail_exponent_fit, to_position,
                       vector_potential_localized_state)
from photonloc.errors import (InsufficientWindowError, NotEigenfieldError,
                              SupportError, VolumeOutOfDomainError,
                              ZeroStateError)


def _odd_profile(grid):
    """sin(2 pi x) cos^2(pi x) on |x| <= 1/2: real, zero-mean, compact."""
    x = grid.axis
    data = np.where(np.abs(x) <= 0.5,
                    np.sin(2.0 * np.pi * x) * np.cos(np.pi * x) ** 2, 0.0)
    return SpectralField(grid, data.astype(complex))


# ----------------------------------------------------------------- support

def test_support_of_compact_profile(grid1):
    est = support_estimate(sin2_profile(grid1, 1.0))
    assert abs(est.radii[0] - 0.5) <= grid1.spacing
    assert est.outside_max <= est.threshold * est.peak
    assert est.region == ((-est.radii[0], est.radii[0]),)


def test_support_threshold_monotonicity(grid1):
    g = SpectralField(grid1, np.exp(-grid1.axis ** 2).astype(complex))
    loose = support_estimate(g, threshold=1e-3)
    tight = support_estimate(g, threshold=1e-12)
    assert loose.radii[0] < tight.radii[0]


def test_support_of_plane_wave_fills_domain(grid1):
    est = support_estimate(plane_wave(grid1, 3))
    assert est.radii[0] == 0.5 * grid1.length


def test_support_3d_and_energy_map_input(grid3):
    est = support_estimate(plane_wave(grid3, (1, 0, 0), +1))
    assert est.radii == (4.0, 4.0, 4.0)
    emap = energy_density(make_lp_compact(Grid(1, 16.0, 2048), 1.0))
    est2 = support_estimate(emap, threshold=1e-3)
    assert est2.radii[0] < 8.0


def test_support_guards(grid1_small):
    zero = SpectralField(grid1_small, np.zeros(grid1_small.n, dtype=complex))
    with pytest.raises(ZeroStateError):
        support_estimate(zero)
    with pytest.raises(TypeError):
        support_estimate(np.ones(grid1_small.n))


# --------------------------------------------------------------- tail fits

def _synthetic_map(grid, values):
    return EnergyDensityMap(grid, values, "both", 0.0)


def test_tail_fit_recovers_power_law():
    g = Grid(1, 64.0, 4096)
    r = g.radius
    vals = np.where(r > 0, np.maximum(r, 1e-9) ** -3.0, 0.0)
    fit = tail_exponent_fit(_synthetic_map(g, vals), (1.0, 25.0))
    assert fit.model == "power"
    assert fit.params["exponent"] == pytest.approx(-3.0, abs=0.02)
    assert fit.r_squared > 0.999
    assert fit.n_points >= 8


def test_tail_fit_recovers_stretched_exponential():
    g = Grid(1, 64.0, 4096)
    r = g.radius
    vals = np.exp(-2.0 * r ** 0.7)
    fit = tail_exponent_fit(_synthetic_map(g, vals), (1.0, 25.0))
    assert fit.model == "stretched"
    assert fit.params["gamma"] == pytest.approx(0.7, abs=0.05)
    assert fit.params["decay_rate"] == pytest.approx(2.0, abs=0.1)
    forced = tail_exponent_fit(_synthetic_map(g, vals), (1.0, 25.0),
                               model="stretched")
    assert forced.params["gamma"] == pytest.approx(0.7, abs=0.05)


def test_tail_fit_compact_pulse_energy():
    grid = Grid(1, 64.0, 8192)
    emap = energy_density(make_lp_compact(grid, 1.0))
    fit = tail_exponent_fit(emap, (2.0, 6.0), model="power")
    assert fit.params["exponent"] == pytest.approx(-3.0, abs=0.3)
    assert fit.r_squared > 0.99


def test_tail_fit_window_guards():
    g = Grid(1, 16.0, 2048)
    vals = np.maximum(g.radius, 1e-9) ** -2.0
    emap = _synthetic_map(g, vals)
    with pytest.raises(InsufficientWindowError):
        tail_exponent_fit(emap, (3.0, 2.0))
    with pytest.raises(InsufficientWindowError):
        tail_exponent_fit(emap, (0.0, 5.0))
    with pytest.raises(InsufficientWindowError):
        tail_exponent_fit(emap, (2.0, 7.9))  # wrap zone starts at 7.2
    with pytest.raises(InsufficientWindowError):
        tail_exponent_fit(emap, (2.0, 2.001))
    with pytest.raises(ValueError):
        tail_exponent_fit(emap, (2.0, 6.0), model="exp")


# ----------------------------------------------------------------- witness

def test_witness_on_profile_zero_zone(grid1):
    p = sin2_profile(grid1, 1.0)
    region = DetectorVolume.interval(2.4, 2.6)
    w = antilocality_witness(p, region)
    assert w.rel_v < 1e-14
    assert w.rel_omega_v > 1e-4
    assert w.passed
    assert w.max_omega_v > 0.0


def test_witness_on_plane_wave(grid1):
    w = antilocality_witness(plane_wave(grid1, 3),
                             DetectorVolume.interval(1.0, 1.5))
    assert w.rel_v == pytest.approx(1.0, rel=1e-10)
    assert w.passed


def test_witness_guards(grid1, grid1_small):
    zero = SpectralField(grid1_small, np.zeros(grid1_small.n, dtype=complex))
    with pytest.raises(ZeroStateError):
        antilocality_witness(zero, DetectorVolume.interval(-1.0, 1.0))
    p = sin2_profile(grid1, 1.0)
    with pytest.raises(VolumeOutOfDomainError):
        antilocality_witness(p, DetectorVolume.interval(-9.0, 1.0))


# -------------------------------------------------------------------- scan

def test_scan_plane_wave_nowhere_vanishing(grid1):
    for mode, eig in ((3, 1), (-5, -1)):
        rep = helicity_vanishing_scan(plane_wave(grid1, mode), 1.0)
        assert rep.eigenvalue == eig
        assert rep.verdict == "nowhere-vanishing"
        assert rep.passed
        assert rep.min_window_max == pytest.approx(rep.peak, rel=1e-10)
        assert rep.n_windows > 1


def test_scan_3d_plane_wave(grid3):
    rep = helicity_vanishing_scan(plane_wave(grid3, (1, 0, 0), +1), 2.0)
    assert rep.eigenvalue == +1
    assert rep.verdict == "nowhere-vanishing"


def test_scan_identically_zero_branch(grid1):
    zero = SpectralField(grid1, np.zeros(grid1.n, dtype=complex))
    rep = helicity_vanishing_scan(zero, 1.0)
    assert rep.identically_zero and rep.passed
    assert rep.verdict == "identically-zero"
    dust = 1e-20 * plane_wave(grid1, 3)
    rep2 = helicity_vanishing_scan(dust, 1.0, reference_peak=1.0)
    assert rep2.verdict == "identically-zero"
    # on its own scale the same field is a fine eigenfield
    rep3 = helicity_vanishing_scan(dust, 1.0)
    assert rep3.verdict == "nowhere-vanishing"


def test_scan_guards(grid1):
    mixed = SpectralField(grid1, np.cos(3.0 * 2.0 * np.pi / 16.0 * grid1.axis)
                          .astype(complex))
    with pytest.raises(NotEigenfieldError):
        helicity_vanishing_scan(mixed, 1.0)
    wave = plane_wave(grid1, 3)
    with pytest.raises(InsufficientWindowError):
        helicity_vanishing_scan(wave, 2.0 * grid1.spacing)
    with pytest.raises(InsufficientWindowError):
        helicity_vanishing_scan(wave, 17.0)


# -------------------------------------------------------- vector potential

def test_vector_potential_construction(grid1):
    region = DetectorVolume.interval(-0.6, 0.6)
    c = vector_potential_localized_state(_odd_profile(grid1), region)
    assert c.recovery_deviation < 1e-10
    assert c.state.norm_lp == pytest.approx(1.0, rel=1e-12)
    assert abs(c.support.radii[0] - 0.5) <= 2.0 * grid1.spacing
    emap = energy_density(c.state)
    outside = detector_energy(emap, DetectorVolume.interval(2.0, 2.5))
    assert outside > 0.0


def test_vector_potential_mean_loss_is_reported(grid1):
    region = DetectorVolume.interval(-0.6, 0.6)
    c = vector_potential_localized_state(sin2_profile(grid1, 1.0), region)
    assert c.recovery_deviation > 1e-3


def test_vector_potential_guards(grid1):
    xi = _odd_profile(grid1)
    with pytest.raises(SupportError):
        vector_potential_localized_state(xi, DetectorVolume.interval(-0.3, 0.3))
    zero = SpectralField(grid1, np.zeros(grid1.n, dtype=complex))
    with pytest.raises(ZeroStateError):
        vector_potential_localized_state(zero, DetectorVolume.interval(-1.0, 1.0))
    cplx = SpectralField(grid1, 1j * to_position(xi).data + to_position(xi).data)
    with pytest.raises(ValueError):
        vector_potential_localized_state(cplx, DetectorVolume.interval(-0.6, 0.6))
    with pytest.raises(VolumeOutOfDomainError):
        vector_potential_localized_state(xi, DetectorVolume.interval(-9.0, 9.0))
