"""Quantitative localization diagnostics.

These routines turn the qualitative statement "a photon's energy density
has no compact support" into measured numbers: the effective support of a
field at a threshold, the power-law or stretched-exponential character of
an energy tail, a witness that a field and its frequency-weighted partner
cannot both vanish on a region, and a scan showing that a helicity
eigenfield has no vanishing window.

All position-space tails on a periodic grid are eventually contaminated by
periodic images, so every fit window is required to stay inside the inner
90% of the half-domain and callers are expected to enlarge the box, not
the window, when they need cleaner asymptotics.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .energy import DetectorVolume, EnergyDensityMap, volume_weights
from .errors import (InsufficientWindowError, NotEigenfieldError, SupportError,
                     ZeroStateError)
from .fields import SpectralField, l2_norm, magnitude, to_position
from .grid import Grid
from .operators import apply_frequency_power, helicity_apply
from .states import LPState, _check_physical_field, normalize
from .units import NATURAL, UnitsConfig

WRAP_FRACTION = 0.9
SUPPORT_THRESHOLD = 1e-10
PHYSICAL_FLOOR = 1e-8
HARD_FLOOR = 1e-14


def _samples_of(obj):
    """(grid, nonnegative sample array) for a field or an energy map."""
    if isinstance(obj, EnergyDensityMap):
        return obj.grid, obj.values
    if isinstance(obj, SpectralField):
        return obj.grid, magnitude(to_position(obj))
    raise TypeError(f"expected SpectralField or EnergyDensityMap, got {type(obj).__name__}")


@dataclass(eq=False)
class SupportEstimate:
    """Smallest centered box outside which the samples stay below
    threshold * peak."""

    region: tuple
    threshold: float
    peak: float
    outside_max: float

    @property
    def radii(self) -> tuple:
        return tuple(hi for _, hi in self.region)


def support_estimate(obj, threshold: float = SUPPORT_THRESHOLD) -> SupportEstimate:
    grid, vals = _samples_of(obj)
    peak = float(np.max(vals))
    if peak == 0.0:
        raise ZeroStateError("support of an identically vanishing field is empty")
    above = vals > threshold * peak
    if grid.dim == 1:
        radii = (float(np.max(np.abs(grid.axis[above]))) if above.any() else 0.0,)
    else:
        radii = []
        for ax in range(3):
            collapsed = above.any(axis=tuple(a for a in range(3) if a != ax))
            radii.append(float(np.max(np.abs(grid.axis[collapsed]))) if collapsed.any() else 0.0)
        radii = tuple(radii)
    region = tuple((-r, r) for r in radii)

    outside = np.zeros(grid.spatial_shape, dtype=bool)
    mesh = grid.position_mesh()
    for r, comp in zip(radii, mesh):
        outside |= np.broadcast_to(np.abs(comp) > r, grid.spatial_shape)
    outside_max = float(np.max(vals[outside])) if outside.any() else 0.0
    return SupportEstimate(region, float(threshold), peak, outside_max)


@dataclass(eq=False)
class TailFit:
    """Best-fitting radial decay model over a window."""

    model: str
    params: dict
    r_squared: float
    window: tuple
    n_points: int


def _linear_fit(design: np.ndarray, target: np.ndarray):
    coef, _, _, _ = np.linalg.lstsq(design, target, rcond=None)
    resid = target - design @ coef
    ss_res = float(np.sum(resid ** 2))
    ss_tot = float(np.sum((target - target.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0.0 and ss_res == 0.0 else 1.0 - ss_res / max(ss_tot, 1e-300)
    return coef, r2, ss_res


def _fit_power(r: np.ndarray, logy: np.ndarray):
    design = np.column_stack([np.log(r), np.ones_like(r)])
    coef, r2, _ = _linear_fit(design, logy)
    return {"exponent": float(coef[0]), "amplitude": float(np.exp(coef[1]))}, r2


def _fit_stretched(r: np.ndarray, logy: np.ndarray):
    """log y = log B - A r**gamma, gamma found by nested grid refinement."""
    def trial(gamma):
        design = np.column_stack([r ** gamma, np.ones_like(r)])
        coef, r2, ss = _linear_fit(design, logy)
        return coef, r2, ss

    lo, hi, step = 0.1, 3.0, 0.05
    best = None
    for _ in range(3):
        gammas = np.arange(lo, hi + 0.5 * step, step)
        for g in gammas:
            coef, r2, ss = trial(g)
            if best is None or ss < best[3]:
                best = (float(g), coef, r2, ss)
        lo, hi, step = max(0.01, best[0] - step), best[0] + step, step / 10.0
    gamma, coef, r2, _ = best
    return {"decay_rate": float(-coef[0]), "gamma": gamma,
            "amplitude": float(np.exp(coef[1]))}, r2


def tail_exponent_fit(emap: EnergyDensityMap, window: tuple,
                      model: str = "auto") -> TailFit:
    """Fit the radial decay of an energy map over r in [window].

    The window must stay out of the wrap-around zone (the outer 10% of the
    half-domain) where periodic images dominate; widen the box rather than
    the window if the fit needs more reach.
    """
    if model not in ("auto", "power", "stretched"):
        raise ValueError(f"unknown tail model {model!r}")
    r1, r2 = float(window[0]), float(window[1])
    half = 0.5 * emap.grid.length
    if not (0.0 < r1 < r2):
        raise InsufficientWindowError("window must satisfy 0 < r1 < r2")
    if r2 > WRAP_FRACTION * half:
        raise InsufficientWindowError(
            f"window reaches {r2}, inside the wrap-around zone beyond "
            f"{WRAP_FRACTION * half:.4g}; enlarge the domain instead")

    rad = emap.grid.radius
    mask = (rad >= r1) & (rad <= r2) & (emap.values > 0.0)
    r = rad[mask].ravel()
    y = emap.values[mask].ravel()
    if r.size < 8 or np.unique(r).size < 4:
        raise InsufficientWindowError(
            f"only {r.size} usable samples in [{r1}, {r2}]")
    logy = np.log(y)

    fits = {}
    if model in ("auto", "power"):
        fits["power"] = _fit_power(r, logy)
    if model in ("auto", "stretched"):
        fits["stretched"] = _fit_stretched(r, logy)
    name = max(fits, key=lambda m: fits[m][1])
    params, r2 = fits[name]
    return TailFit(name, params, float(r2), (r1, r2), int(r.size))


@dataclass(eq=False)
class AntilocalityWitness:
    """Maxima of |v| and |Wv| over a region, against a joint floor.

    ``passed`` records that at least one of the two relative maxima exceeds
    the floor, witnessing that v and Wv do not both vanish there.
    """

    region: DetectorVolume
    max_v: float
    max_omega_v: float
    rel_v: float
    rel_omega_v: float
    joint_floor: float
    passed: bool


def antilocality_witness(field: SpectralField, region: DetectorVolume,
                         units: UnitsConfig = NATURAL,
                         joint_floor: float = PHYSICAL_FLOOR) -> AntilocalityWitness:
    v = to_position(field)
    mag_v = magnitude(v)
    peak_v = float(np.max(mag_v))
    if peak_v == 0.0:
        raise ZeroStateError("witness requires a nonzero field")
    wv = to_position(apply_frequency_power(field, 1.0, units))
    mag_wv = magnitude(wv)
    peak_wv = float(np.max(mag_wv))

    mask = volume_weights(region, v.grid) > 0.0
    if not mask.any():
        raise InsufficientWindowError("region covers no grid cell")
    max_v = float(np.max(mag_v[mask]))
    max_wv = float(np.max(mag_wv[mask]))
    rel_v = max_v / peak_v
    rel_wv = max_wv / peak_wv if peak_wv > 0.0 else 0.0
    passed = max(rel_v, rel_wv) > joint_floor
    return AntilocalityWitness(region, max_v, max_wv, rel_v, rel_wv,
                               float(joint_floor), passed)


@dataclass(eq=False)
class HelicityScanReport:
    """Minimum over sliding windows of the in-window maximum of |field|."""

    eigenvalue: int
    window_size: float
    n_windows: int
    min_window_max: float
    peak: float
    floor: float
    identically_zero: bool
    passed: bool
    verdict: str


def _window_maxima(mag: np.ndarray, w: int) -> np.ndarray:
    view = np.lib.stride_tricks.sliding_window_view(mag, (w,) * mag.ndim)
    stride = max(1, w // 2)
    starts = np.arange(0, mag.shape[0] - w + 1, stride)
    if starts[-1] != mag.shape[0] - w:
        starts = np.append(starts, mag.shape[0] - w)
    reduced = view[np.ix_(*(starts,) * mag.ndim)]
    return reduced.max(axis=tuple(range(-mag.ndim, 0)))


def helicity_vanishing_scan(field: SpectralField, window_size: float,
                            reference_peak: float = None) -> HelicityScanReport:
    """Scan a helicity eigenfield for windows on which it vanishes.

    A nonzero eigenfield of the helicity operator cannot vanish on any open
    set, so the minimum over windows of the in-window maximum must stay
    above the physical floor.  Fields whose peak is negligible relative to
    ``reference_peak`` (defaulting to their own peak) are classified as
    identically zero, for which the scan is vacuous.
    """
    pos = to_position(field)
    g = pos.grid
    mag = magnitude(pos)
    peak = float(np.max(mag))
    reference = peak if reference_peak is None else float(reference_peak)

    if peak <= HARD_FLOOR * reference or peak == 0.0:
        return HelicityScanReport(0, float(window_size), 0, peak, peak,
                                  0.0, True, True, "identically-zero")

    w = int(round(window_size / g.spacing))
    if w < 4:
        raise InsufficientWindowError(
            f"window of {window_size} spans {w} samples; need at least 4")
    if w > g.n:
        raise InsufficientWindowError("window exceeds the domain")

    lam = helicity_apply(pos)
    norm_v = l2_norm(pos)
    eigenvalue = 0
    for s in (1, -1):
        if l2_norm(lam - float(s) * pos) <= 1e-8 * norm_v:
            eigenvalue = s
            break
    if eigenvalue == 0:
        raise NotEigenfieldError("field is not a helicity eigenfield")

    maxima = _window_maxima(mag, w)
    min_window_max = float(np.min(maxima))
    floor = PHYSICAL_FLOOR * peak
    passed = min_window_max > floor
    verdict = "nowhere-vanishing" if passed else "vanishing-window-found"
    return HelicityScanReport(eigenvalue, float(window_size), int(maxima.size),
                              min_window_max, peak, floor, False, passed, verdict)


@dataclass(eq=False)
class LocalizedStateConstruction:
    """A photon state built from a compactly supported vector-potential
    profile, with the recovery check that certifies the construction."""

    state: LPState
    region: DetectorVolume
    support: SupportEstimate
    recovery_deviation: float


def _region_contains_box(region: DetectorVolume, box) -> bool:
    corners = [()]
    for lo, hi in box:
        corners = [c + (v,) for c in corners for v in (lo, hi)]
    if region.kind == "ball":
        return all(sum((v - c) ** 2 for v, c in zip(corner, region.center))
                   <= region.radius ** 2 for corner in corners)
    return all(all(l <= v <= h for v, l, h in zip(corner, region.lo, region.hi))
               for corner in corners)


def vector_potential_localized_state(xi: SpectralField, region: DetectorVolume,
                                     units: UnitsConfig = NATURAL) -> LocalizedStateConstruction:
    """Build the state psi = W**(1/2) xi from a real, zero-mean profile xi
    supported in ``region``.

    Such a state has <A(x)> proportional to xi inside the region and zero
    outside, yet its energy density cannot share that support.  The profile
    is recovered from the state by W**(-1/2) and the relative deviation is
    reported.  The recovery is exact (rounding level) only for zero-mean
    profiles: W**(1/2) annihilates a mean, so a mean-carrying profile comes
    back with its mean removed and the deviation reports that honestly.
    """
    region.check_in_domain(xi.grid)
    _check_physical_field(xi, "xi")
    pos = to_position(xi)
    if float(np.max(magnitude(pos))) == 0.0:
        raise ZeroStateError("profile is identically zero")
    est = support_estimate(pos, SUPPORT_THRESHOLD)
    if not _region_contains_box(region, est.region):
        raise SupportError(
            f"profile support {est.region} leaks outside the region")

    psi = apply_frequency_power(xi, 0.5, units)
    state = normalize(LPState(to_position(psi), units))

    recovered = to_position(apply_frequency_power(state.psi, -0.5, units))
    xi_unit = pos / l2_norm(pos)
    rec_norm = l2_norm(recovered)
    if rec_norm == 0.0:
        deviation = 1.0
    else:
        rec_unit = recovered / rec_norm
        num = float(np.max(np.abs(rec_unit.data - xi_unit.data)))
        deviation = num / float(np.max(np.abs(xi_unit.data)))
    return LocalizedStateConstruction(state, region, est, deviation)
