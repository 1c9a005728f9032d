"""Periodic collocation grids in one and three dimensions.

A grid samples the centered box [-L/2, L/2)^d at n points per axis,
x_j = -L/2 + j*dx, and carries the dual wavevector lattice k_m = 2*pi*m/L
with integer mode numbers m in {-n/2, ..., n/2 - 1}.  Frequency-domain
arrays throughout the package are stored in FFT order (mode 0 first), so
index 0 along each spectral axis is always the zero mode.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

import numpy as np


def _readonly(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


@dataclass(frozen=True)
class Grid:
    """Uniform periodic grid on the centered box [-L/2, L/2)^dim."""

    dim: int
    length: float
    n: int

    def __post_init__(self):
        if self.dim not in (1, 3):
            raise ValueError(f"dim must be 1 or 3, got {self.dim}")
        if not (self.length > 0.0):
            raise ValueError(f"length must be positive, got {self.length}")
        if self.n < 2 or self.n % 2 != 0:
            raise ValueError(f"n must be a positive even integer, got {self.n}")

    @property
    def spacing(self) -> float:
        """Position-space sample spacing dx."""
        return self.length / self.n

    @property
    def k_spacing(self) -> float:
        """Wavevector lattice spacing dk = 2*pi/L."""
        return 2.0 * np.pi / self.length

    @property
    def spatial_shape(self) -> tuple:
        return (self.n,) * self.dim

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.dim

    @property
    def k_cell_volume(self) -> float:
        return self.k_spacing ** self.dim

    @cached_property
    def axis(self) -> np.ndarray:
        """Position samples along one axis, ascending."""
        return _readonly(-0.5 * self.length + self.spacing * np.arange(self.n))

    @cached_property
    def mode_numbers(self) -> np.ndarray:
        """Integer mode numbers along one spectral axis, FFT order."""
        return _readonly(np.fft.fftfreq(self.n, d=1.0 / self.n).astype(np.int64))

    @cached_property
    def k_axis(self) -> np.ndarray:
        """Wavevector samples along one spectral axis, FFT order."""
        return _readonly(self.k_spacing * self.mode_numbers.astype(np.float64))

    @cached_property
    def k_vectors(self) -> tuple:
        """Broadcastable wavevector component arrays (kx, ky, kz) or (k,)."""
        if self.dim == 1:
            return (self.k_axis,)
        k = self.k_axis
        return (
            _readonly(k.reshape(self.n, 1, 1).copy()),
            _readonly(k.reshape(1, self.n, 1).copy()),
            _readonly(k.reshape(1, 1, self.n).copy()),
        )

    @cached_property
    def k_magnitude(self) -> np.ndarray:
        """|k| on the full spectral lattice, FFT order."""
        if self.dim == 1:
            return _readonly(np.abs(self.k_axis))
        kx, ky, kz = self.k_vectors
        return _readonly(np.sqrt(kx**2 + ky**2 + kz**2))

    @cached_property
    def alternating_phase(self) -> np.ndarray:
        """(-1)**(sum of mode numbers); converts FFT sums over j to sums over
        the centered positions x_j = -L/2 + j*dx."""
        s = 1.0 - 2.0 * (np.abs(self.mode_numbers) % 2).astype(np.float64)
        if self.dim == 1:
            return _readonly(s)
        return _readonly(
            s.reshape(self.n, 1, 1) * s.reshape(1, self.n, 1) * s.reshape(1, 1, self.n)
        )

    @cached_property
    def radius(self) -> np.ndarray:
        """Distance from the origin at each position sample."""
        if self.dim == 1:
            return _readonly(np.abs(self.axis))
        x = self.axis
        return _readonly(
            np.sqrt(
                x.reshape(self.n, 1, 1) ** 2
                + x.reshape(1, self.n, 1) ** 2
                + x.reshape(1, 1, self.n) ** 2
            )
        )

    def position_mesh(self) -> tuple:
        """Broadcastable position component arrays, one per axis."""
        if self.dim == 1:
            return (self.axis,)
        x = self.axis
        return (
            x.reshape(self.n, 1, 1),
            x.reshape(1, self.n, 1),
            x.reshape(1, 1, self.n),
        )

    def zero_mode_index(self) -> tuple:
        """Index of the zero mode in a spectral array (spatial axes only)."""
        return (0,) * self.dim
