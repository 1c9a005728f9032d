"""Energy-density expectation values and local detector energies.

For a normalized single-photon state the normally ordered electromagnetic
energy density has the expectation value

    u(x) = hbar ( |W**(1/2) psi(+)(x)|**2 + |W**(1/2) psi(-)(x)|**2 )
         = |F(+)(x)|**2 + |F(-)(x)|**2,

where (+-) are the helicity parts.  The two lines are the same quantity
computed through the LP and BB layers; both are evaluated and their maximum
relative deviation is kept as a cross-check diagnostic.

When a BB field carries a zero-frequency (mean) component, the LP image is
only defined with that mode dropped; the diagnostic then compares the two
paths on the common zero-mean content, while the returned values use the
full field (the BB expression is pointwise exact for it).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import VolumeOutOfDomainError
from .fields import SpectralField, magnitude, strip_zero_mode, to_position
from .grid import Grid
from .operators import apply_frequency_power, helicity_project
from .states import BBState, LPState, bb_from_lp, lp_from_bb


@dataclass(eq=False)
class EnergyDensityMap:
    """Energy density sampled at the position nodes."""

    grid: Grid
    values: np.ndarray
    source_path: str
    two_path_discrepancy: float

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=np.float64)
        if self.values.shape != self.grid.spatial_shape:
            raise ValueError("values must match the grid's spatial shape")


def _helicity_quadrance(field: SpectralField) -> np.ndarray:
    """|P(+) f|**2 + |P(-) f|**2 at the position nodes."""
    fp = to_position(helicity_project(field, +1))
    fm = to_position(helicity_project(field, -1))
    return magnitude(fp) ** 2 + magnitude(fm) ** 2


def energy_density(state) -> EnergyDensityMap:
    """Expectation value of the energy density, computed along both paths."""
    if isinstance(state, LPState):
        psi = state.psi
        f_full = bb_from_lp(state).f
        f_ref = f_full
    elif isinstance(state, BBState):
        f_full = state.f
        f_ref = strip_zero_mode(f_full)
        psi = lp_from_bb(state, zero_mode="drop").psi
    else:
        raise TypeError(f"expected LPState or BBState, got {type(state).__name__}")

    u = state.units
    half_plus = apply_frequency_power(helicity_project(psi, +1), 0.5, u)
    half_minus = apply_frequency_power(helicity_project(psi, -1), 0.5, u)
    lp_vals = u.hbar * (magnitude(to_position(half_plus)) ** 2
                        + magnitude(to_position(half_minus)) ** 2)

    bb_vals = _helicity_quadrance(f_full)
    bb_ref = bb_vals if f_ref is f_full else _helicity_quadrance(f_ref)

    scale = float(np.max(bb_ref))
    disc = 0.0 if scale == 0.0 else float(np.max(np.abs(lp_vals - bb_ref))) / scale
    return EnergyDensityMap(state.grid, bb_vals, "both", disc)


def total_energy(emap: EnergyDensityMap) -> float:
    """Trapezoidal integral of the map over the periodic box."""
    return float(emap.grid.cell_volume * np.sum(emap.values))


@dataclass(frozen=True)
class DetectorVolume:
    """An axis-aligned interval, box, or ball inside the grid domain."""

    kind: str
    lo: tuple = None
    hi: tuple = None
    center: tuple = None
    radius: float = None

    @classmethod
    def interval(cls, lo: float, hi: float) -> "DetectorVolume":
        if hi < lo:
            raise ValueError("interval needs lo <= hi")
        return cls("interval", lo=(float(lo),), hi=(float(hi),))

    @classmethod
    def box(cls, lo, hi) -> "DetectorVolume":
        lo = tuple(float(v) for v in lo)
        hi = tuple(float(v) for v in hi)
        if len(lo) != 3 or len(hi) != 3:
            raise ValueError("box corners must be 3-vectors")
        if any(h < l for l, h in zip(lo, hi)):
            raise ValueError("box needs lo <= hi on every axis")
        return cls("box", lo=lo, hi=hi)

    @classmethod
    def ball(cls, center, radius: float) -> "DetectorVolume":
        center = tuple(float(v) for v in center)
        if len(center) != 3:
            raise ValueError("ball center must be a 3-vector")
        if radius < 0.0:
            raise ValueError("ball radius must be nonnegative")
        return cls("ball", center=center, radius=float(radius))

    def bounding_box(self) -> tuple:
        if self.kind == "ball":
            lo = tuple(c - self.radius for c in self.center)
            hi = tuple(c + self.radius for c in self.center)
            return lo, hi
        return self.lo, self.hi

    def check_in_domain(self, grid: Grid):
        expected_dim = 1 if self.kind == "interval" else 3
        if grid.dim != expected_dim:
            raise ValueError(f"a {self.kind} volume needs a {expected_dim}-dimensional grid")
        half = 0.5 * grid.length
        lo, hi = self.bounding_box()
        if any(l < -half for l in lo) or any(h > half for h in hi):
            raise VolumeOutOfDomainError(
                f"volume {self} extends beyond the box [-{half}, {half}]")


def volume_weights(volume: DetectorVolume, grid: Grid) -> np.ndarray:
    """Fraction of each grid cell covered by the volume, in [0, 1].

    Cells are the dx-wide intervals centered on the samples; partial
    overlaps are resolved linearly, which keeps detector energies continuous
    in the volume's boundaries.
    """
    volume.check_in_domain(grid)
    dx = grid.spacing
    if volume.kind == "interval":
        x = grid.axis
        lo, hi = volume.lo[0], volume.hi[0]
        return np.clip((np.minimum(hi, x + 0.5 * dx)
                        - np.maximum(lo, x - 0.5 * dx)) / dx, 0.0, 1.0)
    if volume.kind == "box":
        x = grid.axis
        fracs = [np.clip((np.minimum(h, x + 0.5 * dx)
                          - np.maximum(l, x - 0.5 * dx)) / dx, 0.0, 1.0)
                 for l, h in zip(volume.lo, volume.hi)]
        return (fracs[0].reshape(-1, 1, 1)
                * fracs[1].reshape(1, -1, 1)
                * fracs[2].reshape(1, 1, -1))
    x, y, z = grid.position_mesh()
    cx, cy, cz = volume.center
    dist = np.sqrt((x - cx) ** 2 + (y - cy) ** 2 + (z - cz) ** 2)
    return np.clip((volume.radius - dist) / dx + 0.5, 0.0, 1.0)


def detector_energy(emap: EnergyDensityMap, volume: DetectorVolume) -> float:
    """Energy captured by a detector occupying the volume."""
    w = volume_weights(volume, emap.grid)
    return float(emap.grid.cell_volume * np.sum(w * emap.values))


@dataclass(eq=False)
class KnightReport:
    """Outcome of the local-distinguishability probe."""

    source: DetectorVolume
    detector: DetectorVolume
    detector_energy: float
    vacuum_energy: float
    floor: float
    distinguishable: bool
    verdict: str
    n_cells: int


def _axis_partition(grid: Grid, cells: int) -> list:
    edges = np.linspace(-0.5 * grid.length, 0.5 * grid.length, cells + 1)
    return [(float(edges[i]), float(edges[i + 1])) for i in range(cells)]


def _disjoint(cell_lo, cell_hi, volume: DetectorVolume) -> bool:
    if volume.kind == "ball":
        gap2 = 0.0
        for l, h, c in zip(cell_lo, cell_hi, volume.center):
            d = max(l - c, c - h, 0.0)
            gap2 += d * d
        return gap2 > volume.radius ** 2
    return any(h <= vl or l >= vh
               for l, h, vl, vh in zip(cell_lo, cell_hi, volume.lo, volume.hi))


def knight_locality_test(emap: EnergyDensityMap, source: DetectorVolume,
                         floor: float = None, probe_cells: int = 32) -> KnightReport:
    """Probe whether any detector disjoint from the source region can tell
    the state from vacuum through its captured energy.

    The domain is tiled with probe cells; cells intersecting the source are
    discarded and the best remaining cell is reported.  The verdict is
    "distinguishable" when its energy exceeds the floor (default 1e-12 of
    the peak density, i.e. far below any physically meaningful signal).
    """
    source.check_in_domain(emap.grid)
    if probe_cells < 2:
        raise ValueError("need at least two probe cells")
    peak = float(np.max(emap.values))
    if floor is None:
        floor = 1e-12 * peak if peak > 0.0 else float(np.finfo(np.float64).tiny)
    if not (floor > 0.0):
        raise ValueError("floor must be positive")

    g = emap.grid
    if g.dim == 1:
        spans = [((lo,), (hi,)) for lo, hi in _axis_partition(g, probe_cells)]
    else:
        per_axis = max(2, round(probe_cells ** (1.0 / 3.0)))
        parts = _axis_partition(g, per_axis)
        spans = [((a[0], b[0], c[0]), (a[1], b[1], c[1]))
                 for a in parts for b in parts for c in parts]

    best = None
    best_energy = -1.0
    n_kept = 0
    for lo, hi in spans:
        if not _disjoint(lo, hi, source):
            continue
        n_kept += 1
        cell = (DetectorVolume.interval(lo[0], hi[0]) if g.dim == 1
                else DetectorVolume.box(lo, hi))
        e = detector_energy(emap, cell)
        if e > best_energy:
            best_energy = e
            best = cell
    if best is None:
        raise ValueError("source volume leaves no disjoint probe cell")

    distinguishable = best_energy > floor
    verdict = "distinguishable" if distinguishable else "indistinguishable-at-floor"
    return KnightReport(source, best, best_energy, 0.0, floor,
                        distinguishable, verdict, n_kept)
