"""Resonant-mass (bar) GW antenna with an optomechanical readout.

A long elastic cylinder couples its odd longitudinal modes to the GW
tidal force; the fundamental mode is monitored by an optical cavity with
single-photon coupling g and linewidth kappa.  Homodyne mean response,
mode position spectrum (noise budget), photon-counting click rate and
source-referenced quantum efficiency are provided.  All frequencies are
angular (rad/s).
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

import numpy as np

from .constants import CODATA, Constants
from .source import SourceGeom
from .spectra import (DOUBLE_SIDED_SYMMETRIZED, FrequencyGrid, Spectrum,
                      integrate_spectrum)


@dataclass(frozen=True)
class BarParams:
    """Bar-antenna parameters.

    mass: bar mass M (kg); length: bar length L (m); omega_m: monitored
    mode frequency (rad/s) or v_s: sound speed (m/s), one derivable from
    the other through the mode dispersion; gamma_m: mechanical damping
    (rad/s); g: optomechanical measurement rate (rad/s); kappa: readout
    cavity linewidth (rad/s); n_th: mode thermal occupancy; mode:
    longitudinal mode index n (frequency (2n+1) pi v_s / L), default 0.
    """

    mass: float
    length: float
    gamma_m: float
    g: float
    kappa: float
    omega_m: float | None = None
    v_s: float | None = None
    n_th: float = 0.0
    mode: int = 0
    const: Constants = field(default=CODATA, repr=False)

    def __post_init__(self):
        for name in ("mass", "length", "gamma_m", "g", "kappa"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if self.n_th < 0.0:
            raise ValueError("thermal occupancy must be non-negative")
        if self.mode < 0:
            raise ValueError("mode index must be non-negative")
        factor = np.pi * (2 * self.mode + 1) / self.length
        if self.omega_m is None and self.v_s is None:
            raise ValueError("provide omega_m or v_s")
        if self.omega_m is None:
            object.__setattr__(self, "omega_m", self.v_s * factor)
        elif self.v_s is None:
            object.__setattr__(self, "v_s", self.omega_m / factor)
        else:
            derived = self.v_s * factor
            if abs(self.omega_m - derived) > 1e-12 * derived:
                raise ValueError("omega_m and v_s are inconsistent")
        if self.omega_m <= 0.0:
            raise ValueError("mode frequency must be positive")

    @property
    def x_zpm(self) -> float:
        """Zero-point motion sqrt(hbar / (M omega_m)) of the mode."""
        return float(np.sqrt(self.const.hbar / (self.mass * self.omega_m)))


@dataclass(frozen=True)
class BarResponse:
    """Mode position spectrum decomposed into uncorrelated components."""

    s_zz: Spectrum
    mechanical_vacuum: Spectrum
    backaction: Spectrum
    gw_drive: Spectrum

    def components(self) -> dict[str, Spectrum]:
        return {
            "mechanical_vacuum": self.mechanical_vacuum,
            "backaction": self.backaction,
            "gw_drive": self.gw_drive,
        }


def bar_mode_frequency(p: BarParams, mode: int | None = None) -> float:
    """Frequency of longitudinal mode n, omega_n = v_s pi (2n+1) / L."""
    n = p.mode if mode is None else mode
    if n < 0:
        raise ValueError("mode index must be non-negative")
    return p.v_s * np.pi * (2 * n + 1) / p.length


def bar_gw_force_coefficient(p: BarParams, mode: int | None = None) -> float:
    """Overlap of the GW tidal force with mode n:
    F_n = -M (-1)^n (2 L / pi^2) / (2n+1)^2 per unit (d^2 h / dt^2).

    Even spatial symmetry suppresses coupling to even-index standing
    waves; only this alternating-sign, 1/(2n+1)^2 family survives.
    """
    n = p.mode if mode is None else mode
    if n < 0:
        raise ValueError("mode index must be non-negative")
    return -p.mass * (-1.0) ** n * (2.0 * p.length / np.pi**2) / (2 * n + 1) ** 2


def mech_susceptibility(p: BarParams, omega) -> np.ndarray:
    """Rotating-frame mode susceptibility chi[Omega - omega_m]
    = 1 / (-i (Omega - omega_m) + gamma_m / 2)."""
    om = np.asarray(omega, dtype=float)
    return 1.0 / (-1j * (om - p.omega_m) + p.gamma_m / 2.0)


def bar_homodyne_mean(p: BarParams, mean_h: np.ndarray, grid: FrequencyGrid,
                      omega0: float) -> np.ndarray:
    """Mean homodyne photocurrent for a resonant carrier,

    <I[Omega]> = -i (4 g / sqrt(kappa)) sqrt(M / hbar omega_m)
                 (2 L Omega0^2 / gamma_m pi^2) <h[Omega]>

    evaluated in the modulation frame.  A carrier detuned from the mode
    by more than a linewidth drives the mode inefficiently; the resonant
    expression is still returned, with a warning.
    """
    if omega0 <= 0.0:
        raise ValueError("carrier frequency must be positive")
    if abs(omega0 - p.omega_m) > p.gamma_m:
        warnings.warn(
            "carrier is more than a mechanical linewidth off the mode "
            "resonance; the resonant response formula overestimates the "
            "signal", stacklevel=2)
    gain = (4.0 * p.g / np.sqrt(p.kappa)) \
        * np.sqrt(p.mass / (p.const.hbar * p.omega_m)) \
        * (2.0 * p.length * omega0**2 / (p.gamma_m * np.pi**2))
    return -1j * gain * np.asarray(mean_h, dtype=complex)


def _backaction_force_psd(p: BarParams) -> float:
    # white measurement backaction of the fast readout cavity
    return 2.0 * p.const.hbar**2 * p.g**2 / p.kappa


def bar_position_spectrum(p: BarParams, s_hh: Spectrum,
                          omega0: float) -> BarResponse:
    """Symmetrized dimensionless position spectrum of the monitored mode.

    S_zz = gamma_m (|chi_-|^2 + |chi_+|^2)(1/2 + n_th)
         + (x_zpm^2/hbar^2) |chi_- - chi_+|^2 (S_FF + (M^2 L^2 Omega0^4/pi^4) S_hh)

    with chi_-+ = chi[+-Omega - omega_m] and S_FF the white backaction
    force PSD 2 hbar^2 g^2 / kappa.
    """
    if s_hh.kind != DOUBLE_SIDED_SYMMETRIZED:
        raise ValueError("strain PSD must be symmetrized")
    if omega0 <= 0.0:
        raise ValueError("carrier frequency must be positive")
    om = s_hh.grid.omega
    grid = s_hh.grid
    chi_m = mech_susceptibility(p, om)
    chi_p = mech_susceptibility(p, -om)
    occ = 0.5 + p.n_th
    force_kernel = (p.x_zpm**2 / p.const.hbar**2) \
        * np.abs(chi_m - chi_p) ** 2

    mech = Spectrum(grid, p.gamma_m * (np.abs(chi_m)**2 + np.abs(chi_p)**2)
                    * occ, "s")
    ba = Spectrum(grid, force_kernel * _backaction_force_psd(p), "s")
    gw = Spectrum(grid, force_kernel * (p.mass**2 * p.length**2 * omega0**4
                                        / np.pi**4) * s_hh.values, "s")
    total = Spectrum(grid, mech.values + ba.values + gw.values, "s")
    return BarResponse(total, mech, ba, gw)


def bar_click_rate(p: BarParams, s_hh: Spectrum,
                   omega0: float) -> dict[str, float]:
    """Photon-counting rate at the readout output.

    total = integral dOmega/2pi (4 g^2 / kappa) S_zz; dark clicks come
    from the mode's vacuum/thermal motion and from measurement
    backaction.  On resonance the GW part evaluates to

    (16 g^2 M L^2 Omega0^4 / pi^4 hbar kappa omega_m gamma_m^2)
        integral dOmega/2pi S_hh.
    """
    resp = bar_position_spectrum(p, s_hh, omega0)
    pref = 4.0 * p.g**2 / p.kappa
    total = pref * integrate_spectrum(resp.s_zz)
    gw_part = pref * integrate_spectrum(resp.gw_drive)
    return {"total": total, "gw_part": gw_part, "dark_part": total - gw_part}


def bar_gw_click_coefficient(p: BarParams, omega0: float) -> float:
    """In-band coefficient of integral dOmega/2pi S_hh in the GW click
    rate, 16 g^2 M L^2 Omega0^4 / (pi^4 hbar kappa omega_m gamma_m^2).

    Valid for strain power concentrated within the mechanical linewidth;
    the general rate is computed by :func:`bar_click_rate`.
    """
    if omega0 <= 0.0:
        raise ValueError("carrier frequency must be positive")
    return 16.0 * p.g**2 * p.mass * p.length**2 * omega0**4 / \
        (np.pi**4 * p.const.hbar * p.kappa * p.omega_m * p.gamma_m**2)


def bar_gw_click_coefficient_resonant(p: BarParams, omega0: float) -> float:
    """Resonant-carrier form of the click coefficient,
    16 g^2 M L^2 Omega0^3 / (pi^4 hbar kappa gamma_m^2); identical to
    :func:`bar_gw_click_coefficient` at omega0 = omega_m."""
    if omega0 <= 0.0:
        raise ValueError("carrier frequency must be positive")
    return 16.0 * p.g**2 * p.mass * p.length**2 * omega0**3 / \
        (np.pi**4 * p.const.hbar * p.kappa * p.gamma_m**2)


def eta_bar(p: BarParams, geom: SourceGeom) -> float:
    """Quantum efficiency relative to the source,

    eta = (96 g^2 / kappa) M L^2 Omega0^3 G / (pi^3 c^3 omega_m gamma_m^2 R^2)

    for a resonant carrier Omega0 = omega_m.
    """
    c = p.const
    return (96.0 * p.g**2 / p.kappa) * p.mass * p.length**2 \
        * geom.omega0**3 * c.G / (np.pi**3 * c.c**3 * p.omega_m
                                  * p.gamma_m**2 * geom.distance**2)


def eta_bar_incident(p: BarParams, omega0: float, area: float) -> float:
    """Efficiency relative to the flux incident on the quantization area A,

    eta = 256 g^2 M L^2 Omega0^3 G / (3 pi^2 c^3 kappa omega_m gamma_m^2 A).

    Evaluated with A = 16 pi R^2 / (5 F) at F = 6/5 this matches
    :func:`eta_bar`.
    """
    if omega0 <= 0.0 or area <= 0.0:
        raise ValueError("carrier and area must be positive")
    c = p.const
    return 256.0 * p.g**2 * p.mass * p.length**2 * omega0**3 * c.G / \
        (3.0 * np.pi**2 * c.c**3 * p.kappa * p.omega_m * p.gamma_m**2 * area)
