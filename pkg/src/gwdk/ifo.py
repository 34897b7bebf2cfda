"""Fabry-Perot interferometric GW antenna.

Transfer functions for the on-resonance cavity, homodyne mean response,
output quadrature spectra (noise budget), photon-counting click rate and
source-referenced quantum efficiency.  All frequencies are angular
(rad/s).  Input optical quadratures default to vacuum, normalised to a
symmetrized spectral density of 1/2.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import CODATA, Constants
from .source import SourceGeom
from .spectra import (DOUBLE_SIDED_SYMMETRIZED, FrequencyGrid, Spectrum,
                      integrate_spectrum)

VACUUM_QUADRATURE_PSD = 0.5


@dataclass(frozen=True)
class IfoParams:
    """Cavity-antenna parameters.

    kappa: cavity decay rate (rad/s); omega0: optical resonance (rad/s);
    length: cavity length (m); mass: test mass (kg); omega_m / gamma_m:
    suspension resonance and damping (rad/s); p_cav: circulating power
    (W) or alpha_sq: intracavity coherent amplitude squared; n_th:
    suspension thermal occupancy.  The cavity is operated on resonance;
    a non-zero detuning is rejected.
    """

    kappa: float
    omega0: float
    length: float
    mass: float
    omega_m: float
    gamma_m: float
    p_cav: float | None = None
    alpha_sq: float | None = None
    n_th: float = 0.0
    detuning: float = 0.0
    const: Constants = field(default=CODATA, repr=False)

    def __post_init__(self):
        for name in ("kappa", "omega0", "length", "mass", "omega_m", "gamma_m"):
            if getattr(self, name) <= 0.0:
                raise ValueError(f"{name} must be positive")
        if self.detuning != 0.0:
            raise ValueError("only on-resonance operation (zero detuning) is modelled")
        if self.n_th < 0.0:
            raise ValueError("thermal occupancy must be non-negative")
        derived = None
        if self.p_cav is not None:
            if self.p_cav <= 0.0:
                raise ValueError("p_cav must be positive")
            derived = (4.0 * self.length / self.const.c) * self.p_cav / \
                (self.const.hbar * self.omega0)
        if self.alpha_sq is None:
            if derived is None:
                raise ValueError("provide p_cav or alpha_sq")
            object.__setattr__(self, "alpha_sq", derived)
        else:
            if self.alpha_sq <= 0.0:
                raise ValueError("alpha_sq must be positive")
            if derived is not None and \
                    abs(self.alpha_sq - derived) > 1e-12 * derived:
                raise ValueError("p_cav and alpha_sq are inconsistent")


@dataclass(frozen=True)
class IfoNoiseBudget:
    """Output quadrature spectra with the phase quadrature decomposed
    into its uncorrelated components."""

    s1_out: Spectrum
    s2_out: Spectrum
    radiation_pressure: Spectrum
    shot: Spectrum
    suspension_thermal: Spectrum
    gw_signal: Spectrum

    def components(self) -> dict[str, Spectrum]:
        return {
            "radiation_pressure": self.radiation_pressure,
            "shot": self.shot,
            "suspension_thermal": self.suspension_thermal,
            "gw_signal": self.gw_signal,
        }


def _check_nonzero(omega) -> np.ndarray:
    om = np.asarray(omega, dtype=float)
    if np.any(om == 0.0):
        raise ValueError("transfer functions are singular at Omega = 0")
    return om


def cavity_coupling(p: IfoParams, omega) -> np.ndarray:
    """Cavity-enhanced optomechanical coupling
    K[Omega] = 2 hbar kappa alpha^2 omega0^2 / (L^2 m Omega^2 (kappa^2 + Omega^2))."""
    om = _check_nonzero(omega)
    return 2.0 * p.const.hbar * p.kappa * p.alpha_sq * p.omega0**2 / \
        (p.length**2 * p.mass * om**2 * (p.kappa**2 + om**2))


def h_sql(p: IfoParams, omega) -> np.ndarray:
    """Standard-quantum-limit strain scale sqrt(8 hbar / (m Omega^2 L^2))."""
    om = _check_nonzero(omega)
    return np.sqrt(8.0 * p.const.hbar / (p.mass * om**2 * p.length**2))


def cavity_phase(p: IfoParams, omega) -> np.ndarray:
    """Cavity reflection phase beta[Omega] = arctan(Omega / kappa)."""
    return np.arctan(np.asarray(omega, dtype=float) / p.kappa)


def mech_correction(p: IfoParams, omega) -> np.ndarray:
    """Magnitude of the pendulum correction to the free-mass response:

    X[Omega] = Omega^2 / sqrt((gamma^2+Omega^2)^2 + 2 w_m^2 (gamma^2-Omega^2) + w_m^4)

    X -> 1 far above a high-Q suspension resonance, and X peaks as
    Omega^2/gamma^2 scaling on resonance.
    """
    om = np.asarray(omega, dtype=float)
    g2, w2 = p.gamma_m**2, p.omega_m**2
    denom = np.sqrt((g2 + om**2)**2 + 2.0 * w2 * (g2 - om**2) + w2**2)
    return om**2 / denom


def mech_phase(p: IfoParams, omega) -> np.ndarray:
    """Phase Xi[Omega] accumulated relative to a free mass.

    Evaluated as half the continuous argument of
    -Omega^2 / ((kappa - i Omega)^2-ish denominator), i.e.
    (atan2(2 kappa Omega, gamma^2 + w_m^2 - Omega^2) - pi)/2 for
    Omega > 0 (mirrored for Omega < 0).  This branch is continuous
    across the resonance crossing and tends to 0 far above resonance,
    recovering the free-mass equations.
    """
    om = np.asarray(omega, dtype=float)
    denom = p.gamma_m**2 + p.omega_m**2 - om**2
    raw = 0.5 * (np.arctan2(2.0 * p.kappa * np.abs(om), denom) - np.pi)
    return np.sign(om) * raw


def ifo_homodyne_mean(p: IfoParams, mean_h: np.ndarray,
                      grid: FrequencyGrid) -> np.ndarray:
    """Mean homodyne output e^{i beta} sqrt(2 K) <h> / h_SQL.

    Linear in the mean strain, hence identically zero for Fock-state or
    vacuum radiation.
    """
    om = _check_nonzero(grid.omega)
    beta = cavity_phase(p, om)
    gain = np.sqrt(2.0 * cavity_coupling(p, om)) / h_sql(p, om)
    return np.exp(1j * beta) * gain * np.asarray(mean_h, dtype=complex)


def _thermal_term(p: IfoParams, om: np.ndarray,
                  s_qq: float, s_pp: float) -> np.ndarray:
    y = 2.0 * p.const.hbar * p.kappa * p.gamma_m * p.alpha_sq * p.omega0**2 / (
        p.mass * p.length**2 * (p.kappa**2 + om**2) *
        ((p.gamma_m**2 + om**2)**2
         + 2.0 * p.omega_m**2 * (p.gamma_m**2 - om**2) + p.omega_m**4))
    return y * ((p.gamma_m**2 + om**2) / p.omega_m * s_qq
                + p.omega_m * s_pp)


def ifo_output_spectra(p: IfoParams, s_hh: Spectrum,
                       s1_in: float = VACUUM_QUADRATURE_PSD,
                       s2_in: float = VACUUM_QUADRATURE_PSD) -> IfoNoiseBudget:
    """Output quadrature spectra for a given strain PSD.

    S1_out = S1_in; S2_out is the sum of radiation pressure (K X)^2 S1_in,
    shot noise S2_in, the transduced GW term (2|K|/h_SQL^2) S_hh and the
    suspension-thermal term.  Thermal occupancy enters through
    S_qq = S_pp = n_th + 1/2.
    """
    if s_hh.kind != DOUBLE_SIDED_SYMMETRIZED:
        raise ValueError("strain PSD must be symmetrized")
    om = _check_nonzero(s_hh.grid.omega)
    grid = s_hh.grid
    kk = cavity_coupling(p, om)
    xx = mech_correction(p, om)
    occ = p.n_th + 0.5

    rp = Spectrum(grid, (kk * xx)**2 * s1_in, "quanta")
    shot = Spectrum(grid, np.full(len(grid), s2_in), "quanta")
    therm = Spectrum(grid, _thermal_term(p, om, occ, occ), "quanta")
    gw = Spectrum(grid, 2.0 * np.abs(kk) / h_sql(p, om)**2 * s_hh.values,
                  "quanta")
    s2 = Spectrum(grid, rp.values + shot.values + therm.values + gw.values,
                  "quanta")
    s1 = Spectrum(grid, np.full(len(grid), s1_in), "quanta")
    return IfoNoiseBudget(s1, s2, rp, shot, therm, gw)


def ifo_click_rate(p: IfoParams, s_hh: Spectrum,
                   s1_in: float = VACUUM_QUADRATURE_PSD,
                   s2_in: float = VACUUM_QUADRATURE_PSD) -> dict[str, float]:
    """Photon-counting rate at the antenna output.

    total = 1/2 integral dOmega/2pi (S1_out + S2_out - 1); for vacuum
    optical inputs and a cold suspension, the only dark clicks are from
    ponderomotive squeezing, (K X)^2 / 2.  The GW part is
    1/2 integral dOmega/2pi (2|K|/h_SQL^2) S_hh, which reduces to
    (alpha^2 omega0^2 / 4 kappa) integral S_hh for carriers well inside
    the cavity bandwidth.
    """
    budget = ifo_output_spectra(p, s_hh, s1_in, s2_in)
    grid = s_hh.grid
    total_integrand = Spectrum(
        grid, np.clip(budget.s1_out.values + budget.s2_out.values - 1.0,
                      0.0, None), "quanta")
    total = 0.5 * integrate_spectrum(total_integrand)
    gw_part = 0.5 * integrate_spectrum(budget.gw_signal)
    return {"total": total, "gw_part": gw_part, "dark_part": total - gw_part}


def eta_ifo(p: IfoParams, geom: SourceGeom) -> float:
    """Quantum efficiency relative to the source,
    5 hbar G F kappa alpha^2 omega0^2 / (2 c^3 R^2 Omega0 (kappa^2 + Omega0^2))."""
    c = p.const
    return 5.0 * c.hbar * c.G * geom.antenna_factor * p.kappa * p.alpha_sq \
        * p.omega0**2 / (2.0 * c.c**3 * geom.distance**2 * geom.omega0
                         * (p.kappa**2 + geom.omega0**2))


def eta_ifo_incident(p: IfoParams, omega0: float, area: float) -> float:
    """Efficiency relative to the flux incident on the quantization area A,
    8 pi hbar G alpha^2 omega0^2 / (A c^3 kappa Omega0).

    Evaluated with A = 16 pi R^2 / (5 F) this matches :func:`eta_ifo`
    for carriers well inside the cavity bandwidth.
    """
    if omega0 <= 0.0 or area <= 0.0:
        raise ValueError("carrier and area must be positive")
    c = p.const
    return 8.0 * np.pi * c.hbar * c.G * p.alpha_sq * p.omega0**2 / \
        (area * c.c**3 * p.kappa * omega0)
