"""Sampled fields and the continuum-normalized Fourier transform.

A field is a complex array sampled either at the position nodes x_j or at
the wavevector nodes k_m of a :class:`~photonloc.grid.Grid`.  The transform
pair approximates the unitary continuum convention

    v~(k) = (2*pi)**(-d/2) * integral v(x) exp(-i k.x) dx,
    v(x)  = (2*pi)**(-d/2) * integral v~(k) exp(+i k.x) dk,

by trapezoidal sums over the periodic box.  With the alternating phase
factor (-1)**(sum m) absorbing the x_j = -L/2 + j*dx offset, the discrete
pair is exactly unitary: round trips are identities to machine precision and

    dx**d * sum |v|**2  ==  dk**d * sum |v~|**2.

Scalar (one-dimensional) fields have data shape (n,), vector fields on a
three-dimensional grid have shape (3, n, n, n).  Frequency data is stored
in FFT order, zero mode first.
"""

from __future__ import annotations

from dataclasses import dataclass, replace

import numpy as np

from .errors import DomainError, GridMismatchError
from .grid import Grid

POSITION = "position"
FREQUENCY = "frequency"


@dataclass(eq=False)
class SpectralField:
    """A sampled field together with the grid and domain it lives on.

    ``transverse`` records that a three-dimensional frequency-domain field
    is known to satisfy k . v~(k) = 0; it is advisory and set by the
    operations that actually enforce it.
    """

    grid: Grid
    data: np.ndarray
    domain: str = POSITION
    transverse: bool = False

    def __post_init__(self):
        if self.domain not in (POSITION, FREQUENCY):
            raise ValueError(f"domain must be position or frequency, got {self.domain!r}")
        data = np.asarray(self.data, dtype=np.complex128)
        expected = self.grid.spatial_shape if self.grid.dim == 1 else (3,) + self.grid.spatial_shape
        if data.shape != expected:
            raise ValueError(f"data shape {data.shape} does not match grid shape {expected}")
        self.data = data

    @property
    def is_position(self) -> bool:
        return self.domain == POSITION

    @property
    def is_frequency(self) -> bool:
        return self.domain == FREQUENCY

    def components(self) -> list:
        """Component arrays as a list, length 1 (scalar) or 3 (vector)."""
        if self.grid.dim == 1:
            return [self.data]
        return [self.data[0], self.data[1], self.data[2]]

    def copy_with(self, **changes) -> "SpectralField":
        if "data" not in changes:
            changes["data"] = self.data.copy()
        return replace(self, **changes)

    def _check_compatible(self, other: "SpectralField"):
        if self.grid != other.grid:
            raise GridMismatchError("fields live on different grids")
        if self.domain != other.domain:
            raise DomainError(f"cannot combine {self.domain} field with {other.domain} field")

    def __add__(self, other: "SpectralField") -> "SpectralField":
        self._check_compatible(other)
        return SpectralField(self.grid, self.data + other.data, self.domain,
                             self.transverse and other.transverse)

    def __sub__(self, other: "SpectralField") -> "SpectralField":
        self._check_compatible(other)
        return SpectralField(self.grid, self.data - other.data, self.domain,
                             self.transverse and other.transverse)

    def __mul__(self, scalar) -> "SpectralField":
        return SpectralField(self.grid, self.data * complex(scalar), self.domain, self.transverse)

    __rmul__ = __mul__

    def __truediv__(self, scalar) -> "SpectralField":
        return SpectralField(self.grid, self.data / complex(scalar), self.domain, self.transverse)

    def __neg__(self) -> "SpectralField":
        return SpectralField(self.grid, -self.data, self.domain, self.transverse)


def magnitude(field: SpectralField) -> np.ndarray:
    """Pointwise Euclidean magnitude over components, a real array."""
    if field.grid.dim == 1:
        return np.abs(field.data)
    return np.sqrt(np.sum(np.abs(field.data) ** 2, axis=0))


def peak_magnitude(field: SpectralField) -> float:
    return float(np.max(magnitude(field)))


def zero_mode_amplitude(field: SpectralField) -> float:
    """Largest component magnitude at the zero mode of a frequency field."""
    if not field.is_frequency:
        raise DomainError("zero-mode amplitude is defined for frequency fields")
    idx = field.grid.zero_mode_index()
    if field.grid.dim == 1:
        return float(np.abs(field.data[idx]))
    return float(np.max(np.abs(field.data[(slice(None),) + idx])))


def strip_zero_mode(field: SpectralField) -> SpectralField:
    """The field with its spatial mean removed (returned in frequency domain)."""
    f = to_frequency(field)
    data = f.data.copy()
    idx = f.grid.zero_mode_index()
    if f.grid.dim == 1:
        data[idx] = 0.0
    else:
        data[(slice(None),) + idx] = 0.0
    return SpectralField(f.grid, data, FREQUENCY, f.transverse)


def _spatial_axes(grid: Grid) -> tuple:
    return tuple(range(-grid.dim, 0))


def forward_transform(field: SpectralField) -> SpectralField:
    """Position to frequency, continuum normalization."""
    if not field.is_position:
        raise DomainError("forward_transform expects a position-domain field")
    g = field.grid
    scale = g.cell_volume * (2.0 * np.pi) ** (-0.5 * g.dim)
    data = scale * g.alternating_phase * np.fft.fftn(field.data, axes=_spatial_axes(g))
    return SpectralField(g, data, FREQUENCY, field.transverse)


def inverse_transform(field: SpectralField) -> SpectralField:
    """Frequency to position, continuum normalization."""
    if not field.is_frequency:
        raise DomainError("inverse_transform expects a frequency-domain field")
    g = field.grid
    scale = g.k_cell_volume * (2.0 * np.pi) ** (-0.5 * g.dim) * float(g.n) ** g.dim
    data = scale * np.fft.ifftn(g.alternating_phase * field.data, axes=_spatial_axes(g))
    return SpectralField(g, data, POSITION, field.transverse)


def to_frequency(field: SpectralField) -> SpectralField:
    return field if field.is_frequency else forward_transform(field)


def to_position(field: SpectralField) -> SpectralField:
    return field if field.is_position else inverse_transform(field)


def l2_norm(field: SpectralField) -> float:
    """Continuum L2 norm, sum over components included."""
    w = field.grid.cell_volume if field.is_position else field.grid.k_cell_volume
    return float(np.sqrt(w * np.sum(np.abs(field.data) ** 2)))


def l2_inner(a: SpectralField, b: SpectralField) -> complex:
    """Continuum L2 inner product <a, b>, conjugate-linear in ``a``."""
    if a.grid != b.grid:
        raise GridMismatchError("fields live on different grids")
    if a.domain != b.domain:
        raise DomainError("inner product requires fields in the same domain")
    w = a.grid.cell_volume if a.is_position else a.grid.k_cell_volume
    return complex(w * np.sum(np.conj(a.data) * b.data))


def scalar_field(grid: Grid, samples, domain: str = POSITION) -> SpectralField:
    """Wrap a one-dimensional sample array as a field."""
    return SpectralField(grid, np.asarray(samples), domain)


def vector_field(grid: Grid, samples, domain: str = POSITION,
                 transverse: bool = False) -> SpectralField:
    """Wrap a (3, n, n, n) sample array as a field."""
    return SpectralField(grid, np.asarray(samples), domain, transverse)


def zero_field(grid: Grid, domain: str = POSITION) -> SpectralField:
    shape = grid.spatial_shape if grid.dim == 1 else (3,) + grid.spatial_shape
    return SpectralField(grid, np.zeros(shape, dtype=np.complex128), domain)
