"""Fourier-multiplier operators and the helicity decomposition.

Every operator here acts diagonally in the frequency domain.  Fields may be
passed in either domain; the result comes back in the domain the input was
in.  The dispersion multiplier is w(k) = c|k|, and fractional powers
w(k)**s are the workhorse for moving between the vector-potential,
electric-field and photon wave-function layers.

For vector fields on a three-dimensional grid the helicity operator is
i k^ x (cross product with the unit wavevector); its eigenvalue +-1 splits a
divergence-free field into circularly polarized parts.  On a one-dimensional
grid the reduced model keeps a single scalar component and the helicity
operator degenerates to the multiplier sign(k), so positive and negative
wavevectors play the role of the two polarizations.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (DimensionError, GridMismatchError, TransversalityError,
                     ZeroModeError, ZeroWaveVectorError)
from .fields import (FREQUENCY, POSITION, SpectralField, to_frequency, to_position,
                     zero_mode_amplitude)
from .grid import Grid
from .units import NATURAL, UnitsConfig

ZERO_MODE_TOL = 1e-10
TRANSVERSE_TOL = 1e-10


def omega(grid: Grid, units: UnitsConfig = NATURAL) -> np.ndarray:
    """Angular frequency w(k) = c|k| on the spectral lattice."""
    return units.c * grid.k_magnitude


def _same_domain(field: SpectralField, freq_data: np.ndarray,
                 transverse: bool) -> SpectralField:
    out = SpectralField(field.grid, freq_data, FREQUENCY, transverse)
    return out if field.is_frequency else to_position(out)


def apply_frequency_power(field: SpectralField, s: float,
                          units: UnitsConfig = NATURAL,
                          zero_mode: str = "raise") -> SpectralField:
    """Apply the multiplier (c|k|)**s.

    For s < 0 the zero mode is not invertible; unless the field's amplitude
    there is negligible (below ZERO_MODE_TOL relative to its spectral peak)
    a ZeroModeError is raised.  Passing zero_mode="drop" instead discards
    the zero mode, which regularizes mean-carrying profiles at the price of
    an O(sqrt(dk)) offset that vanishes as the box grows.  In every case the
    output zero mode is exactly zero, so round trips w**-s . w**s restore
    zero-mean fields exactly.
    """
    if zero_mode not in ("raise", "drop"):
        raise ValueError(f"zero_mode must be 'raise' or 'drop', got {zero_mode!r}")
    if s == 0:
        return field.copy_with()
    f = to_frequency(field)
    if s < 0 and zero_mode == "raise":
        peak = float(np.max(np.abs(f.data)))
        if peak > 0.0 and zero_mode_amplitude(f) > ZERO_MODE_TOL * peak:
            raise ZeroModeError(
                "field carries a significant zero-frequency component; "
                "a negative frequency power cannot represent it "
                "(use zero_mode='drop' to discard it)")
    w = omega(f.grid, units)
    mult = np.zeros_like(w)
    nonzero = w > 0.0
    mult[nonzero] = w[nonzero] ** s
    return _same_domain(field, f.data * mult, field.transverse)


def curl(field: SpectralField) -> SpectralField:
    """Curl of a vector field, i k x v~ in the frequency domain."""
    if field.grid.dim != 3:
        raise DimensionError("curl requires a three-dimensional vector field")
    f = to_frequency(field)
    kx, ky, kz = f.grid.k_vectors
    vx, vy, vz = f.data
    out = np.empty_like(f.data)
    out[0] = 1j * (ky * vz - kz * vy)
    out[1] = 1j * (kz * vx - kx * vz)
    out[2] = 1j * (kx * vy - ky * vx)
    return _same_domain(field, out, True)


def _unit_k(grid: Grid) -> tuple:
    kx, ky, kz = grid.k_vectors
    kmag = grid.k_magnitude
    safe = np.where(kmag > 0.0, kmag, 1.0)
    return kx / safe, ky / safe, kz / safe


def transversality_residual(field: SpectralField) -> float:
    """max |k . v~| relative to the spectral peak of |k| |v~|."""
    if field.grid.dim != 3:
        raise DimensionError("transversality is defined for three-dimensional fields")
    f = to_frequency(field)
    kx, ky, kz = f.grid.k_vectors
    vx, vy, vz = f.data
    div = np.abs(kx * vx + ky * vy + kz * vz)
    scale = float(np.max(f.grid.k_magnitude * np.sqrt(
        np.abs(vx) ** 2 + np.abs(vy) ** 2 + np.abs(vz) ** 2)))
    if scale == 0.0:
        return 0.0
    return float(np.max(div)) / scale


def transverse_project(field: SpectralField) -> SpectralField:
    """Remove the longitudinal part: v~ - k^ (k^ . v~).

    The zero mode (where no direction is defined) is left untouched; a
    constant field is divergence-free already.
    """
    if field.grid.dim != 3:
        raise DimensionError("transverse projection requires a three-dimensional field")
    f = to_frequency(field)
    ux, uy, uz = _unit_k(f.grid)
    vx, vy, vz = f.data
    longdot = ux * vx + uy * vy + uz * vz
    out = np.empty_like(f.data)
    out[0] = vx - ux * longdot
    out[1] = vy - uy * longdot
    out[2] = vz - uz * longdot
    idx = (slice(None),) + f.grid.zero_mode_index()
    out[idx] = f.data[idx]
    return _same_domain(field, out, True)


def helicity_apply(field: SpectralField) -> SpectralField:
    """Helicity operator: i k^ x v~ in three dimensions, sign(k) in one.

    The zero mode maps to zero.  Three-dimensional input must be
    divergence-free, otherwise the operator mixes in unphysical content.
    """
    f = to_frequency(field)
    g = f.grid
    if g.dim == 1:
        out = np.sign(g.k_axis) * f.data
        return _same_domain(field, out, field.transverse)
    if transversality_residual(f) > TRANSVERSE_TOL:
        raise TransversalityError(
            "helicity is defined on divergence-free fields; "
            "apply transverse_project first")
    ux, uy, uz = _unit_k(g)
    vx, vy, vz = f.data
    out = np.empty_like(f.data)
    out[0] = 1j * (uy * vz - uz * vy)
    out[1] = 1j * (uz * vx - ux * vz)
    out[2] = 1j * (ux * vy - uy * vx)
    idx = (slice(None),) + g.zero_mode_index()
    out[idx] = 0.0
    return _same_domain(field, out, True)


def helicity_project(field: SpectralField, sign: int) -> SpectralField:
    """Projector onto the helicity-(+1) or (-1) subspace, (1 + sign*L)/2."""
    if sign not in (1, -1):
        raise ValueError(f"helicity sign must be +1 or -1, got {sign}")
    f = to_frequency(field)
    lam = helicity_apply(f)
    out = 0.5 * (f.data + sign * lam.data)
    return _same_domain(field, out, lam.transverse or field.transverse)


@dataclass(frozen=True)
class PolarizationVector:
    """Circular polarization unit vector for one wavevector."""

    k: tuple
    sigma: int
    eps: tuple

    def as_array(self) -> np.ndarray:
        return np.array(self.eps, dtype=np.complex128)


def polarization_vector(k, sigma: int) -> PolarizationVector:
    """Helicity eigenvector of i k^ x with eigenvalue ``sigma``.

    The pair is orthonormal, transverse, and satisfies
    eps(-) = conj(eps(+)).  On the z-axis, where the generic formula
    degenerates, the continuous limit along +x is used.
    """
    if sigma not in (1, -1):
        raise ValueError(f"sigma must be +1 or -1, got {sigma}")
    kx, ky, kz = (float(c) for c in k)
    kmag = np.sqrt(kx * kx + ky * ky + kz * kz)
    if kmag == 0.0:
        raise ZeroWaveVectorError("polarization vectors are undefined at k = 0")
    kperp2 = kx * kx + ky * ky
    if kperp2 == 0.0:
        eps = np.array([-np.sign(kz), -1j, 0.0], dtype=np.complex128) / np.sqrt(2.0)
    else:
        denom = np.sqrt(2.0) * kmag * np.sqrt(kperp2)
        eps = np.array([
            -kx * kz + 1j * kmag * ky,
            -ky * kz - 1j * kmag * kx,
            kperp2,
        ], dtype=np.complex128) / denom
    if sigma == -1:
        eps = np.conj(eps)
    return PolarizationVector((kx, ky, kz), sigma, tuple(eps))


@lru_cache(maxsize=8)
def _polarization_table(grid: Grid) -> np.ndarray:
    """eps_sigma(k) for every lattice mode, shape (2, 3, n, n, n).

    Index 0 holds sigma = +1.  The k = 0 entry is identically zero, so any
    amplitude attached to it is discarded by both analysis and synthesis.
    """
    kx, ky, kz = (np.broadcast_to(c, grid.spatial_shape) for c in grid.k_vectors)
    kmag = grid.k_magnitude
    kperp2 = kx ** 2 + ky ** 2
    generic = kperp2 > 0.0
    axis = (kperp2 == 0.0) & (np.abs(kz) > 0.0)
    denom = np.where(generic, np.sqrt(2.0) * kmag * np.sqrt(kperp2), 1.0)
    plus = np.zeros((3,) + grid.spatial_shape, dtype=np.complex128)
    plus[0] = np.where(generic, (-kx * kz + 1j * kmag * ky) / denom, 0.0)
    plus[1] = np.where(generic, (-ky * kz - 1j * kmag * kx) / denom, 0.0)
    plus[2] = np.where(generic, kperp2 / denom, 0.0)
    inv_sqrt2 = 1.0 / np.sqrt(2.0)
    plus[0] = np.where(axis, -np.sign(kz) * inv_sqrt2, plus[0])
    plus[1] = np.where(axis, -1j * inv_sqrt2, plus[1])
    table = np.stack([plus, np.conj(plus)])
    table.setflags(write=False)
    return table


def plane_wave(grid: Grid, mode_index, sigma: int = None) -> SpectralField:
    """Transverse plane wave (2 pi)**(-d/2) eps_sigma(k) e^(i k.x).

    In three dimensions ``mode_index`` is an integer triple and ``sigma``
    selects the circular polarization carried by the wave.  In one
    dimension ``mode_index`` is a single integer and ``sigma`` is ignored.
    The zero mode carries no propagation direction and is rejected.
    """
    if grid.dim == 1:
        m = int(mode_index)
        if m == 0:
            raise ZeroWaveVectorError("plane waves need a nonzero mode index")
        kval = grid.k_spacing * m
        data = (2.0 * np.pi) ** -0.5 * np.exp(1j * kval * grid.axis)
        return SpectralField(grid, data, POSITION)
    mx, my, mz = (int(m) for m in mode_index)
    if (mx, my, mz) == (0, 0, 0):
        raise ZeroWaveVectorError("plane waves need a nonzero mode index")
    if sigma not in (1, -1):
        raise ValueError("a three-dimensional plane wave needs sigma = +1 or -1")
    kvec = grid.k_spacing * np.array([mx, my, mz], dtype=np.float64)
    eps = polarization_vector(kvec, sigma).as_array()
    x, y, z = grid.position_mesh()
    phase = np.exp(1j * (kvec[0] * x + kvec[1] * y + kvec[2] * z))
    data = (2.0 * np.pi) ** -1.5 * eps[:, None, None, None] * phase[None, :, :, :]
    return SpectralField(grid, data, POSITION, transverse=True)


@dataclass(eq=False)
class MomentumAmplitudes:
    """Helicity-resolved momentum amplitudes z_sigma(k), FFT mode order.

    Only the zero mode carries no amplitude: in three dimensions no
    polarization basis exists there, in one dimension sign(k) assigns it to
    neither branch.  Fields must therefore have zero mean to round-trip
    exactly through analysis and synthesis.
    """

    grid: Grid
    plus: np.ndarray
    minus: np.ndarray

    def __post_init__(self):
        shape = self.grid.spatial_shape
        self.plus = np.asarray(self.plus, dtype=np.complex128)
        self.minus = np.asarray(self.minus, dtype=np.complex128)
        if self.plus.shape != shape or self.minus.shape != shape:
            raise ValueError("amplitude arrays must match the grid's spatial shape")

    def norm_squared(self) -> float:
        """dk**d * sum_sigma sum_k |z_sigma|**2."""
        return float(self.grid.k_cell_volume
                     * (np.sum(np.abs(self.plus) ** 2) + np.sum(np.abs(self.minus) ** 2)))


def momentum_amplitudes(field: SpectralField) -> MomentumAmplitudes:
    """Project a field onto the helicity basis, z_sigma = eps_sigma* . v~."""
    f = to_frequency(field)
    g = f.grid
    if g.dim == 1:
        sign = np.sign(g.k_axis)
        return MomentumAmplitudes(g, f.data * (sign > 0), f.data * (sign < 0))
    if transversality_residual(f) > TRANSVERSE_TOL:
        raise TransversalityError("momentum amplitudes require a divergence-free field")
    table = _polarization_table(g)
    zp = np.sum(np.conj(table[0]) * f.data, axis=0)
    zm = np.sum(np.conj(table[1]) * f.data, axis=0)
    return MomentumAmplitudes(g, zp, zm)


def synthesize_from_amplitudes(amps: MomentumAmplitudes) -> SpectralField:
    """Rebuild the position-domain field sum_sigma z_sigma eps_sigma e^(ik.x)."""
    g = amps.grid
    if g.dim == 1:
        sign = np.sign(g.k_axis)
        data = amps.plus * (sign > 0) + amps.minus * (sign < 0)
        return to_position(SpectralField(g, data, FREQUENCY))
    table = _polarization_table(g)
    data = table[0] * amps.plus[None] + table[1] * amps.minus[None]
    return to_position(SpectralField(g, data, FREQUENCY, transverse=True))


def check_same_grid(a, b):
    if a.grid != b.grid:
        raise GridMismatchError("objects live on different grids")
