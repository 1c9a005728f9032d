import numpy as np
import pytest

from photonloc import (FREQUENCY, POSITION, Grid, SpectralField,
                       forward_transform, inverse_transform, l2_inner,
                       l2_norm, strip_zero_mode, to_frequency, to_position,
                       zero_mode_amplitude)
from photonloc.errors import DomainError, GridMismatchError


def test_constant_field_concentrates_in_zero_mode(grid1_small):
    f = SpectralField(grid1_small, np.ones(grid1_small.n))
    ft = forward_transform(f)
    expected = grid1_small.length / np.sqrt(2.0 * np.pi)
    assert ft.data[0] == pytest.approx(expected, rel=1e-13)
    assert np.max(np.abs(ft.data[1:])) < 1e-12 * expected


def test_single_mode_purity(grid1_small):
    k5 = 5 * grid1_small.k_spacing
    f = SpectralField(grid1_small, np.exp(1j * k5 * grid1_small.axis))
    ft = forward_transform(f)
    mags = np.abs(ft.data)
    assert np.argmax(mags) == 5
    others = np.delete(mags, 5)
    assert np.max(others) < 1e-12 * mags[5]


def test_single_mode_inverse(grid1_small):
    g = grid1_small
    data = np.zeros(g.n, dtype=np.complex128)
    amp = 2.5 - 0.5j
    data[5] = amp
    back = inverse_transform(SpectralField(g, data, FREQUENCY))
    expected = (amp * g.k_cell_volume / np.sqrt(2.0 * np.pi)
                * np.exp(1j * 5 * g.k_spacing * g.axis))
    assert np.max(np.abs(back.data - expected)) < 1e-13 * np.abs(amp)


def test_round_trip_1d(grid1, rng):
    v = SpectralField(grid1, rng.standard_normal(grid1.n)
                      + 1j * rng.standard_normal(grid1.n))
    w = inverse_transform(forward_transform(v))
    assert np.max(np.abs(w.data - v.data)) < 1e-12 * np.max(np.abs(v.data))


def test_round_trip_3d(grid3, rng):
    shape = (3,) + grid3.spatial_shape
    v = SpectralField(grid3, rng.standard_normal(shape)
                      + 1j * rng.standard_normal(shape))
    w = inverse_transform(forward_transform(v))
    assert np.max(np.abs(w.data - v.data)) < 1e-12 * np.max(np.abs(v.data))


def test_zero_field_round_trip(grid1_small):
    z = SpectralField(grid1_small, np.zeros(grid1_small.n))
    assert np.all(forward_transform(z).data == 0.0)


def test_parseval(grid1, grid3, rng):
    for g in (grid1, grid3):
        shape = g.spatial_shape if g.dim == 1 else (3,) + g.spatial_shape
        v = SpectralField(g, rng.standard_normal(shape)
                          + 1j * rng.standard_normal(shape))
        ft = forward_transform(v)
        a = g.cell_volume * np.sum(np.abs(v.data) ** 2)
        b = g.k_cell_volume * np.sum(np.abs(ft.data) ** 2)
        assert a == pytest.approx(b, rel=1e-12)
        assert l2_norm(v) == pytest.approx(l2_norm(ft), rel=1e-12)


def test_inner_product_conjugate_linear(grid1_small, rng):
    g = grid1_small
    a = SpectralField(g, rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n))
    b = SpectralField(g, rng.standard_normal(g.n) + 1j * rng.standard_normal(g.n))
    ip = l2_inner(a, b)
    assert l2_inner(b, a) == pytest.approx(np.conj(ip), rel=1e-12)
    assert l2_inner(2j * a, b) == pytest.approx(-2j * ip, rel=1e-12)
    assert l2_inner(a, a).real >= 0.0


def test_domain_guards(grid1_small):
    f = SpectralField(grid1_small, np.ones(grid1_small.n))
    with pytest.raises(DomainError):
        inverse_transform(f)
    ft = forward_transform(f)
    with pytest.raises(DomainError):
        forward_transform(ft)
    assert to_frequency(ft) is ft
    assert to_position(f) is f
    with pytest.raises(DomainError):
        zero_mode_amplitude(f)


def test_strip_zero_mode(grid1_small):
    f = SpectralField(grid1_small, np.ones(grid1_small.n) + 0.3)
    stripped = strip_zero_mode(f)
    assert zero_mode_amplitude(stripped) == 0.0
    pos = to_position(stripped)
    assert np.max(np.abs(pos.data)) < 1e-12


def test_grid_mismatch_arithmetic():
    a = SpectralField(Grid(1, 16.0, 64), np.ones(64))
    b = SpectralField(Grid(1, 16.0, 128), np.ones(128))
    with pytest.raises(GridMismatchError):
        _ = a + b
    c = forward_transform(SpectralField(Grid(1, 16.0, 64), np.ones(64)))
    with pytest.raises(DomainError):
        _ = a + c


def test_shape_validation():
    g = Grid(1, 16.0, 64)
    with pytest.raises(ValueError):
        SpectralField(g, np.ones((3, 64)))
    g3 = Grid(3, 8.0, 8)
    with pytest.raises(ValueError):
        SpectralField(g3, np.ones((8, 8, 8, 3)))
