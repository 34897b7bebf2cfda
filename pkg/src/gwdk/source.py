"""Astrophysical source models: binary quadrupole emission, effective
quantization area, classical power flux, and the conversion from a
characteristic strain amplitude to coherent-state graviton content."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import CODATA, Constants


@dataclass(frozen=True)
class BinarySource:
    """Circular compact binary.

    mu: reduced mass (kg); a: orbital radius (m); omega0: GW angular
    frequency, twice the orbital frequency (rad/s); distance R (m);
    inclination theta (rad).
    """

    mu: float
    a: float
    omega0: float
    distance: float
    theta: float = 0.0

    def __post_init__(self):
        if min(self.mu, self.a, self.omega0, self.distance) <= 0.0:
            raise ValueError("binary parameters must be positive")
        if not 0.0 <= self.theta <= np.pi:
            raise ValueError("inclination must lie in [0, pi]")


@dataclass(frozen=True)
class SourceGeom:
    """Source geometry as seen by the detector: distance R (m), antenna
    factor F (order unity), carrier omega0 (rad/s) and optionally the
    characteristic detector-frame strain amplitude h0."""

    distance: float
    antenna_factor: float
    omega0: float
    h0: float = 0.0

    def __post_init__(self):
        if min(self.distance, self.antenna_factor, self.omega0) <= 0.0:
            raise ValueError("distance, antenna factor and carrier must be positive")
        if self.h0 < 0.0:
            raise ValueError("strain amplitude must be non-negative")


def binary_strain_amplitudes(src: BinarySource,
                             const: Constants = CODATA) -> tuple[float, float]:
    """Post-Newtonian plus/cross amplitudes of a circular binary.

    h_plus  = (G mu Omega0^2 a^2 / c^4 R) (1 + cos^2 theta) / 2
    h_cross = (G mu Omega0^2 a^2 / c^4 R) cos theta
    """
    scale = const.G * src.mu * src.omega0**2 * src.a**2 / \
        (const.c**4 * src.distance)
    ct = np.cos(src.theta)
    return scale * (1.0 + ct**2) / 2.0, scale * ct


def quadrupole_total_power(src: BinarySource,
                           const: Constants = CODATA) -> float:
    """Total quadrupole power G^2 mu^2 Omega0^6 a^4 / (10 c^5)."""
    return const.G**2 * src.mu**2 * src.omega0**6 * src.a**4 / \
        (10.0 * const.c**5)


def quadrupole_power_numeric(src: BinarySource, n_theta: int = 64,
                             n_phi: int = 64,
                             const: Constants = CODATA) -> float:
    """Sphere integral of the angular intensity dP/dA, as an independent
    check of the closed form.

    Gauss-Legendre in cos(theta) crossed with a uniform phi grid; the
    integrand is a low-order polynomial in cos(theta), so convergence is
    rapid.
    """
    ct, weights = np.polynomial.legendre.leggauss(n_theta)
    prefactor = const.G**2 * src.mu**2 * src.omega0**6 * src.a**4 / \
        (32.0 * np.pi * const.c**5 * src.distance**2)
    intensity = prefactor * (((1.0 + ct**2) / 2.0)**2 + ct**2)
    theta_integral = float(np.sum(weights * intensity))
    dphi = 2.0 * np.pi / n_phi  # integrand is phi independent; sum is exact
    return src.distance**2 * theta_integral * dphi * n_phi


def area_factor(distance: float, antenna_factor: float) -> float:
    """Effective quantization area A = 16 pi R^2 / (5 F) for a spherical
    wave intercepted by a detector with geometric factor F."""
    if distance <= 0.0 or antenna_factor <= 0.0:
        raise ValueError("distance and antenna factor must be positive")
    return 16.0 * np.pi * distance**2 / (5.0 * antenna_factor)


def plane_wave_power_flux(h0: float, omega0: float,
                          const: Constants = CODATA) -> float:
    """Cycle-averaged classical power flux of h(t) = h0 cos(Omega0 t):
    c^3 Omega0^2 h0^2 / (64 pi G), in W/m^2."""
    if h0 < 0.0:
        raise ValueError("strain amplitude must be non-negative")
    return const.c**3 * omega0**2 * h0**2 / (64.0 * np.pi * const.G)


def coherent_amplitude_from_strain(h0: float, omega0: float, area: float,
                                   const: Constants = CODATA) -> float:
    """|abar|^2 of the coherent state matching a classical strain h0:
    Omega0 c^3 pi A h0^2 / (32 G hbar)."""
    if h0 < 0.0 or omega0 <= 0.0 or area <= 0.0:
        raise ValueError("need h0 >= 0 and positive carrier and area")
    return omega0 * const.c**3 * np.pi * area * h0**2 / \
        (32.0 * const.G * const.hbar)
