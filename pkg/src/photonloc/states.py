"""Single-photon pulse states in two position representations.

The Landau-Peierls (LP) representation stores the photon wave function

    psi = sqrt(eps0 / (2 hbar)) * (W**(1/2) A - i W**(-1/2) E),

built from the transverse vector potential A and electric field E, where W
is the frequency operator c|k| applied as a Fourier multiplier.  Its inner
product is the plain L2 one, so |psi|**2 integrates to the photon number.

The Bialynicki-Birula (BB) representation stores the positive-frequency
Riemann-Silberstein field

    F = sqrt(eps0 / 2) * (E + i c L B),

with L the helicity operator.  Its inner product carries the 1/w weight,
<F, F'> = integral dk conj(F~) . F~' / w(k).  The two representations are
unitarily equivalent through F = i sqrt(hbar) W**(1/2) psi, and both evolve
by the diagonal phase exp(-i w(k) t).

Everything works on one- and three-dimensional grids alike; in the reduced
one-dimensional model fields are scalars and the helicity operator is
sign(k).  The zero (mean) mode needs care throughout: W**(-1/2) and the BB
weight 1/w blow up there, so mean-carrying fields either raise
ZeroModeError or, on request, have the mode discarded.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (GridMismatchError, TransversalityError, ZeroModeError,
                     ZeroStateError)
from .fields import (FREQUENCY, SpectralField, l2_norm, magnitude, to_frequency,
                     to_position, zero_mode_amplitude)
from .operators import (TRANSVERSE_TOL, ZERO_MODE_TOL, apply_frequency_power,
                        helicity_apply, helicity_project, omega,
                        transversality_residual)
from .units import NATURAL, UnitsConfig

REAL_TOL = 1e-12


def _check_physical_field(field: SpectralField, name: str, require_real: bool = True):
    pos = to_position(field)
    peak = float(np.max(np.abs(pos.data)))
    if require_real and peak > 0.0:
        im = float(np.max(np.abs(pos.data.imag)))
        if im > REAL_TOL * peak:
            raise ValueError(f"{name} must be a real field (max |Im| = {im:.3e})")
    if field.grid.dim == 3 and transversality_residual(field) > TRANSVERSE_TOL:
        raise TransversalityError(f"{name} must be divergence-free")


def _check_state_field(field: SpectralField):
    if field.grid.dim == 3 and transversality_residual(field) > TRANSVERSE_TOL:
        raise TransversalityError("state fields must be divergence-free")


@dataclass(eq=False)
class EMFields:
    """A transverse vector potential with its electric field, and optionally
    the magnetic field.  In the one-dimensional model the magnetic partner
    of a real potential is in general complex in position space; realness
    is a three-dimensional property."""

    e: SpectralField
    a: SpectralField
    b: SpectralField = None

    def __post_init__(self):
        if self.e.grid != self.a.grid:
            raise GridMismatchError("E and A live on different grids")
        if self.b is not None and self.b.grid != self.e.grid:
            raise GridMismatchError("B lives on a different grid")
        _check_physical_field(self.e, "E")
        _check_physical_field(self.a, "A")
        if self.b is not None:
            _check_physical_field(self.b, "B", require_real=(self.e.grid.dim == 3))

    @classmethod
    def from_potentials(cls, e: SpectralField, a: SpectralField) -> "EMFields":
        """Derive B from A: the curl in three dimensions, and in one the
        multiplier k (so that c L B = W A holds identically)."""
        if e.grid.dim == 3:
            from .operators import curl
            return cls(e, a, curl(a))
        fa = to_frequency(a)
        b = SpectralField(fa.grid, fa.grid.k_axis * fa.data, FREQUENCY)
        return cls(e, a, to_position(b))


@dataclass(eq=False)
class LPState:
    """Landau-Peierls wave function with its unit system and L2 norm."""

    psi: SpectralField
    units: UnitsConfig = NATURAL

    def __post_init__(self):
        _check_state_field(self.psi)
        self.norm_lp = l2_norm(self.psi)

    @property
    def grid(self):
        return self.psi.grid


@dataclass(eq=False)
class BBState:
    """Riemann-Silberstein field with its unit system and weighted norm.

    ``norm_bb`` uses the 1/w(k) weight with the zero mode excluded; for
    zero-mean fields that is the exact norm, for mean-carrying fields it is
    the natural regularization (the excluded weight is infinite).
    """

    f: SpectralField
    units: UnitsConfig = NATURAL

    def __post_init__(self):
        _check_state_field(self.f)
        self.norm_bb = float(np.sqrt(max(_bb_norm_squared(self.f, self.units), 0.0)))

    @property
    def grid(self):
        return self.f.grid


@dataclass(eq=False)
class HelicityPair:
    """The two circularly polarized parts of a field."""

    plus: SpectralField
    minus: SpectralField


def _bb_norm_squared(f: SpectralField, units: UnitsConfig) -> float:
    ff = to_frequency(f)
    w = omega(ff.grid, units)
    weight = np.zeros_like(w)
    nz = w > 0.0
    weight[nz] = 1.0 / w[nz]
    return float(ff.grid.k_cell_volume * np.sum(np.abs(ff.data) ** 2 * weight))


def lp_from_potentials(em: EMFields, units: UnitsConfig = NATURAL,
                       zero_mode: str = "raise") -> LPState:
    """psi = sqrt(eps0/(2 hbar)) (W**(1/2) A - i W**(-1/2) E).

    A and E must be real (and divergence-free in three dimensions; EMFields
    already guarantees both).  E must have zero mean for W**(-1/2) to
    exist; zero_mode="drop" discards a mean instead of raising.
    """
    half_a = apply_frequency_power(em.a, 0.5, units)
    half_e = apply_frequency_power(em.e, -0.5, units, zero_mode=zero_mode)
    scale = np.sqrt(units.eps0 / (2.0 * units.hbar))
    psi = to_position(scale * (half_a - 1j * half_e))
    return LPState(psi, units)


def bb_from_lp(state: LPState) -> BBState:
    """F = i sqrt(hbar) W**(1/2) psi."""
    u = state.units
    f = 1j * np.sqrt(u.hbar) * apply_frequency_power(state.psi, 0.5, u)
    return BBState(f, u)


def lp_from_bb(state: BBState, zero_mode: str = "raise") -> LPState:
    """psi = -i hbar**(-1/2) W**(-1/2) F, inverse of the isomorphism."""
    u = state.units
    psi = (-1j / np.sqrt(u.hbar)) * apply_frequency_power(
        state.f, -0.5, u, zero_mode=zero_mode)
    return LPState(psi, u)


def riemann_silberstein_vector(e: SpectralField, b: SpectralField,
                               units: UnitsConfig = NATURAL) -> SpectralField:
    """F = sqrt(eps0/2) (E + i c L B), returned in the position domain."""
    _check_physical_field(e, "E")
    _check_physical_field(b, "B", require_real=(e.grid.dim == 3))
    lam_b = helicity_apply(b)
    f = np.sqrt(units.eps0 / 2.0) * (e + 1j * units.c * lam_b)
    return to_position(f)


def bb_from_em(em: EMFields, units: UnitsConfig = NATURAL) -> BBState:
    """Build the BB state directly from the electromagnetic fields."""
    if em.b is None:
        em = EMFields.from_potentials(em.e, em.a)
    return BBState(riemann_silberstein_vector(em.e, em.b, units), units)


def riemann_silberstein_split(state: BBState) -> HelicityPair:
    """Split F into its helicity eigenparts F = F(+) + F(-)."""
    return HelicityPair(helicity_project(state.f, +1),
                        helicity_project(state.f, -1))


def lp_inner(a: LPState, b: LPState) -> complex:
    """Plain L2 inner product of the wave functions."""
    if a.grid != b.grid:
        raise GridMismatchError("states live on different grids")
    fa, fb = to_frequency(a.psi), to_frequency(b.psi)
    return complex(a.grid.k_cell_volume * np.sum(np.conj(fa.data) * fb.data))


def bb_inner(a: BBState, b: BBState, zero_mode: str = "raise") -> complex:
    """Frequency-weighted inner product integral conj(F~).F~'/w dk.

    Requires zero-mean fields; the 1/w weight has no value at k = 0.
    zero_mode="drop" excludes that mode instead of raising.
    """
    if a.grid != b.grid:
        raise GridMismatchError("states live on different grids")
    if a.units != b.units:
        raise ValueError("states use different unit systems")
    fa, fb = to_frequency(a.f), to_frequency(b.f)
    if zero_mode == "raise":
        for ff in (fa, fb):
            peak = float(np.max(np.abs(ff.data)))
            if peak > 0.0 and zero_mode_amplitude(ff) > ZERO_MODE_TOL * peak:
                raise ZeroModeError(
                    "BB inner product requires zero-mean fields "
                    "(use zero_mode='drop' to exclude the mode)")
    elif zero_mode != "drop":
        raise ValueError(f"zero_mode must be 'raise' or 'drop', got {zero_mode!r}")
    w = omega(a.grid, a.units)
    weight = np.zeros_like(w)
    nz = w > 0.0
    weight[nz] = 1.0 / w[nz]
    return complex(a.grid.k_cell_volume * np.sum(np.conj(fa.data) * fb.data * weight))


def state_norm(state) -> float:
    return state.norm_lp if isinstance(state, LPState) else state.norm_bb


def normalize(state):
    """Rescale to unit norm in the state's own inner product."""
    n = state_norm(state)
    if not (n > 1e-150):
        raise ZeroStateError("cannot normalize an identically vanishing state")
    if isinstance(state, LPState):
        return LPState(state.psi / n, state.units)
    return BBState(state.f / n, state.units)


def evolve(state, t: float):
    """Free evolution by the diagonal phase exp(-i w(k) t)."""
    field = state.psi if isinstance(state, LPState) else state.f
    ff = to_frequency(field)
    phase = np.exp(-1j * omega(ff.grid, state.units) * float(t))
    out = SpectralField(ff.grid, ff.data * phase, FREQUENCY, ff.transverse)
    if field.is_position:
        out = to_position(out)
    if isinstance(state, LPState):
        return LPState(out, state.units)
    return BBState(out, state.units)


def state_magnitude(state) -> np.ndarray:
    """|psi| or |F| at the position nodes."""
    field = state.psi if isinstance(state, LPState) else state.f
    return magnitude(to_position(field))
