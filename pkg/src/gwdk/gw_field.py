"""Quantum states of a propagating gravitational wave and their strain
statistics.

A state is one of three variants:

* ``Vacuum`` -- no radiation; zero mean strain, zero flux.
* ``Coherent`` -- classical-like radiation with carrier ``omega0`` and a
  complex amplitude envelope ``abar[Omega]`` given on a modulation-frame
  grid (frequencies measured from the carrier).
* ``Fock`` -- exactly ``n`` gravitons with a normalised frequency
  envelope ``xi[Omega]``, again in the modulation frame.

Strain PSDs are returned on absolute-frequency grids, with the envelope
translated to +-omega0, so that the narrowband and broadband graviton
flux functionals can be compared directly.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Union

import numpy as np

from .constants import CODATA, Constants
from .spectra import (DOUBLE_SIDED_SYMMETRIZED, FrequencyGrid, Spectrum,
                      integrate_spectrum)

STRAIN_PSD_UNITS = "strain^2 s"

_FOCK_NORM_RTOL = 1e-6


@dataclass(frozen=True)
class Vacuum:
    """The vacuum state of the radiation field."""


@dataclass(frozen=True)
class Coherent:
    """Coherent state: carrier omega0 (rad/s), envelope abar on ``grid``
    (units 1/sqrt(rad/s)), quantization area ``area`` (m^2)."""

    omega0: float
    grid: FrequencyGrid
    envelope: np.ndarray
    area: float

    def __post_init__(self):
        env = np.asarray(self.envelope, dtype=complex)
        object.__setattr__(self, "envelope", env)
        if self.omega0 <= 0.0:
            raise ValueError("carrier frequency must be positive")
        if self.area <= 0.0:
            raise ValueError("quantization area must be positive")
        if env.shape != self.grid.omega.shape:
            raise ValueError("envelope does not match grid shape")


@dataclass(frozen=True)
class Fock:
    """Number state with ``n`` gravitons and unit-norm envelope xi."""

    n: int
    omega0: float
    grid: FrequencyGrid
    envelope: np.ndarray
    area: float

    def __post_init__(self):
        env = np.asarray(self.envelope, dtype=complex)
        object.__setattr__(self, "envelope", env)
        if self.n < 0:
            raise ValueError("graviton number must be non-negative")
        if self.omega0 <= 0.0:
            raise ValueError("carrier frequency must be positive")
        if self.area <= 0.0:
            raise ValueError("quantization area must be positive")
        if env.shape != self.grid.omega.shape:
            raise ValueError("envelope does not match grid shape")
        norm = np.trapezoid(np.abs(env) ** 2, self.grid.omega)
        if abs(norm - 1.0) > _FOCK_NORM_RTOL:
            raise ValueError(
                f"Fock envelope norm is {norm:.8g}, must be 1 "
                f"within {_FOCK_NORM_RTOL:g} relative")


GwState = Union[Vacuum, Coherent, Fock]


def normalized_gaussian_envelope(grid: FrequencyGrid,
                                 sigma: float) -> np.ndarray:
    """Unit-norm (integral |xi|^2 dOmega = 1) Gaussian envelope, for tests
    and CLI state construction."""
    xi = np.exp(-grid.omega**2 / (4.0 * sigma**2)).astype(complex)
    norm = np.trapezoid(np.abs(xi) ** 2, grid.omega)
    return xi / np.sqrt(norm)


def strain_normalization(omega0: float, area: float,
                         const: Constants = CODATA) -> float:
    """Per-graviton strain scale h_{Omega0} = sqrt(16 hbar G / (c^3 pi Omega0 A))."""
    if omega0 <= 0.0 or area <= 0.0:
        raise ValueError("carrier frequency and area must be positive")
    return float(np.sqrt(16.0 * const.hbar * const.G /
                         (const.c**3 * np.pi * omega0 * area)))


def _interp_complex(x, xp, fp):
    return np.interp(x, xp, fp.real, left=0.0, right=0.0) \
        + 1j * np.interp(x, xp, fp.imag, left=0.0, right=0.0)


def mean_strain(state: GwState, grid: FrequencyGrid,
                const: Constants = CODATA) -> np.ndarray:
    """Mean strain amplitude <h[Omega]> on a modulation-frame grid.

    Zero for vacuum and for any Fock state; 4 pi h_{Omega0} abar[Omega]
    for a coherent state.
    """
    if isinstance(state, (Vacuum, Fock)):
        return np.zeros(grid.omega.shape, dtype=complex)
    if isinstance(state, Coherent):
        h0 = strain_normalization(state.omega0, state.area, const)
        abar = _interp_complex(grid.omega, state.grid.omega, state.envelope)
        return 4.0 * np.pi * h0 * abar
    raise TypeError(f"not a GwState: {state!r}")


def strain_psd(state: GwState, grid: FrequencyGrid,
               const: Constants = CODATA) -> Spectrum:
    """Symmetrized strain PSD S_hh on an absolute-frequency grid.

    The PSD is fixed by the flux-consistency contract: feeding the result
    to :func:`graviton_flux_narrowband` returns exactly ``n`` for a Fock
    state and integral |abar|^2 dOmega for a coherent state.  The vacuum
    floor is taken to be zero (the -1/2 quantum term is dropped from the
    flux, so a zero PSD is the consistent vacuum representation).
    """
    if not grid.symmetric:
        raise ValueError("grid not closed under negation")
    if isinstance(state, Vacuum):
        return Spectrum(grid, np.zeros(len(grid)), STRAIN_PSD_UNITS,
                        DOUBLE_SIDED_SYMMETRIZED)
    if isinstance(state, (Coherent, Fock)):
        h0 = strain_normalization(state.omega0, state.area, const)
        env = state.envelope
        weight = np.abs(env) ** 2
        if isinstance(state, Fock):
            weight = state.n * weight
        # translate the modulation-frame envelope to the +-omega0 sidebands
        # and symmetrize; each half carries half the weight
        up = np.interp(grid.omega - state.omega0,
                       state.grid.omega, weight, left=0.0, right=0.0)
        down = np.interp(-grid.omega - state.omega0,
                         state.grid.omega, weight, left=0.0, right=0.0)
        vals = 2.0 * np.pi * np.pi**2 * h0**2 * 0.5 * (up + down)
        return Spectrum(grid, vals, STRAIN_PSD_UNITS, DOUBLE_SIDED_SYMMETRIZED)
    raise TypeError(f"not a GwState: {state!r}")


def _require_symmetrized(psd: Spectrum):
    if psd.kind != DOUBLE_SIDED_SYMMETRIZED:
        raise ValueError("flux functionals require a symmetrized PSD")
    assert psd.units == STRAIN_PSD_UNITS, psd.units


def graviton_flux_narrowband(psd: Spectrum, omega0: float, area: float,
                             const: Constants = CODATA) -> float:
    """Graviton number flux (c^3 Omega0 A / 16 pi hbar G) integral dOmega/2pi S_hh."""
    _require_symmetrized(psd)
    if omega0 <= 0.0 or area <= 0.0:
        raise ValueError("carrier frequency and area must be positive")
    pref = const.c**3 * omega0 * area / (16.0 * np.pi * const.hbar * const.G)
    return pref * integrate_spectrum(psd)


def graviton_flux_broadband(psd: Spectrum, area: float,
                            const: Constants = CODATA) -> float:
    """Graviton flux with the carrier replaced by |Omega| under the integral.

    Valid when distinct frequency components of the radiation are
    uncorrelated; agrees with the narrowband form for a PSD confined to a
    narrow band around +-omega0.
    """
    _require_symmetrized(psd)
    if area <= 0.0:
        raise ValueError("area must be positive")
    pref = const.c**3 * area / (16.0 * np.pi * const.hbar * const.G)
    weighted = Spectrum(psd.grid, np.abs(psd.grid.omega) * psd.values,
                        units="weighted")
    return pref * integrate_spectrum(weighted)


def graviton_flux_source(psd: Spectrum, omega0: float, distance: float,
                         antenna_factor: float,
                         const: Constants = CODATA) -> float:
    """Source-referenced graviton flux (c^3 R^2 Omega0 / 5 hbar G F) integral dOmega/2pi S_hh.

    Identical to the narrowband flux evaluated with the spherical-wave
    area A = 16 pi R^2 / (5 F).
    """
    _require_symmetrized(psd)
    if distance <= 0.0 or antenna_factor <= 0.0:
        raise ValueError("distance and antenna factor must be positive")
    pref = const.c**3 * distance**2 * omega0 / \
        (5.0 * const.hbar * const.G * antenna_factor)
    return pref * integrate_spectrum(psd)


# ---------------------------------------------------------------------------
# JSON serialization

def state_to_json(state: GwState) -> str:
    return json.dumps(state_to_dict(state))


def state_to_dict(state: GwState) -> dict:
    if isinstance(state, Vacuum):
        return {"type": "vacuum"}
    envelope = [[float(om), float(e.real), float(e.imag)]
                for om, e in zip(state.grid.omega, state.envelope)]
    d = {
        "omega0_hz": state.omega0 / (2.0 * np.pi),
        "area_m2": state.area,
        "envelope": envelope,
    }
    if isinstance(state, Coherent):
        d["type"] = "coherent"
    else:
        d["type"] = "fock"
        d["n"] = state.n
    return d


def state_from_dict(d: dict) -> GwState:
    kind = d.get("type")
    if kind == "vacuum":
        return Vacuum()
    if kind not in ("coherent", "fock"):
        raise ValueError(f"unknown GW state type {kind!r}")
    env = np.asarray(d["envelope"], dtype=float)
    if env.ndim != 2 or env.shape[1] != 3:
        raise ValueError("envelope must be a list of [Omega, Re, Im] rows")
    grid = FrequencyGrid(env[:, 0], symmetric=False)
    values = env[:, 1] + 1j * env[:, 2]
    omega0 = 2.0 * np.pi * float(d["omega0_hz"])
    area = float(d["area_m2"])
    if kind == "coherent":
        return Coherent(omega0, grid, values, area)
    return Fock(int(d["n"]), omega0, grid, values, area)


def state_from_json(text: str) -> GwState:
    return state_from_dict(json.loads(text))
