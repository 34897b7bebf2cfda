"""Frequency grids, power spectral densities and spectral quadrature.

Conventions: all frequencies are angular (rad/s); double-sided spectra
live on grids that are closed under negation; spectral integrals are
normalised as integral dOmega/(2 pi) S(Omega), evaluated with the
trapezoidal rule on the explicit grid.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

SINGLE_SIDED_RAW = "single-sided-raw"
DOUBLE_SIDED_SYMMETRIZED = "double-sided-symmetrized"

_SYMMETRY_RTOL = 1e-12


@dataclass(frozen=True)
class FrequencyGrid:
    """Ordered grid of angular frequencies.

    ``symmetric`` asserts closure under Omega -> -Omega, which is required
    by all double-sided spectral operations.
    """

    omega: np.ndarray
    symmetric: bool = False

    def __post_init__(self):
        om = np.asarray(self.omega, dtype=float)
        object.__setattr__(self, "omega", om)
        if om.ndim != 1 or om.size == 0:
            raise ValueError("frequency grid must be a non-empty 1-D array")
        if not np.all(np.isfinite(om)):
            raise ValueError("frequency grid contains NaN or infinity")
        if np.any(np.diff(om) <= 0):
            raise ValueError("frequency grid must be strictly increasing")
        if self.symmetric and not self._closed_under_negation():
            raise ValueError("grid not closed under negation")

    def _closed_under_negation(self) -> bool:
        # a sorted grid closed under negation is its own reversal, negated
        scale = max(abs(self.omega[0]), abs(self.omega[-1]), 1.0)
        return bool(np.allclose(self.omega, -self.omega[::-1],
                                rtol=0.0, atol=_SYMMETRY_RTOL * scale))

    @classmethod
    def symmetric_linspace(cls, omega_max: float, n_half: int,
                           omega_min: float = 0.0) -> "FrequencyGrid":
        """Symmetric grid of 2*n_half points on +-[omega_min, omega_max].

        Omega = 0 is excluded, which keeps 1/Omega^2 transducer responses
        finite everywhere on the grid.
        """
        if omega_max <= omega_min or omega_min < 0.0:
            raise ValueError("need 0 <= omega_min < omega_max")
        if n_half < 1:
            raise ValueError("need at least one point per half grid")
        if omega_min == 0.0:
            pos = np.linspace(omega_max / n_half, omega_max, n_half)
        else:
            pos = np.linspace(omega_min, omega_max, n_half)
        return cls(np.concatenate([-pos[::-1], pos]), symmetric=True)

    @classmethod
    def band_around(cls, omega0: float, half_width: float,
                    n_half: int) -> "FrequencyGrid":
        """Symmetric grid covering +-[omega0 - hw, omega0 + hw]."""
        if not (0.0 < half_width < omega0):
            raise ValueError("need 0 < half_width < omega0")
        pos = np.linspace(omega0 - half_width, omega0 + half_width, n_half)
        return cls(np.concatenate([-pos[::-1], pos]), symmetric=True)

    def __len__(self) -> int:
        return self.omega.size


@dataclass(frozen=True)
class Spectrum:
    """A non-negative spectral density on a :class:`FrequencyGrid`.

    ``units`` is carried as a metadata string (e.g. ``"1/Hz"``,
    ``"strain^2 s"``) and validated by assertion at operation boundaries,
    not by a unit-algebra system.
    """

    grid: FrequencyGrid
    values: np.ndarray
    units: str = ""
    kind: str = SINGLE_SIDED_RAW

    def __post_init__(self):
        vals = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", vals)
        if vals.shape != self.grid.omega.shape:
            raise ValueError("spectrum values do not match grid shape")
        if not np.all(np.isfinite(vals)):
            raise ValueError("spectrum contains NaN or infinity")
        if np.any(vals < 0.0):
            raise ValueError("spectral density must be non-negative")
        if self.kind not in (SINGLE_SIDED_RAW, DOUBLE_SIDED_SYMMETRIZED):
            raise ValueError(f"unknown spectrum kind {self.kind!r}")
        if self.kind == DOUBLE_SIDED_SYMMETRIZED:
            if not self.grid.symmetric:
                raise ValueError("grid not closed under negation")
            mirrored = vals[::-1]
            scale = np.max(vals) if np.max(vals) > 0 else 1.0
            if not np.allclose(vals, mirrored, rtol=1e-12, atol=1e-12 * scale):
                raise ValueError("symmetrized spectrum is not even in Omega")

    def scaled(self, factor: float) -> "Spectrum":
        if factor < 0.0:
            raise ValueError("scale factor must be non-negative")
        return Spectrum(self.grid, factor * self.values, self.units, self.kind)


def symmetrize(spec: Spectrum) -> Spectrum:
    """Return the double-sided symmetrization (S[Omega] + S[-Omega]) / 2."""
    if not spec.grid.symmetric:
        raise ValueError("grid not closed under negation")
    sym = 0.5 * (spec.values + spec.values[::-1])
    return Spectrum(spec.grid, sym, spec.units, DOUBLE_SIDED_SYMMETRIZED)


def integrate_spectrum(spec: Spectrum) -> float:
    """Trapezoidal estimate of integral dOmega/(2 pi) S(Omega)."""
    if len(spec.grid) < 2:
        raise ValueError("spectral integration needs at least 2 grid points")
    return float(np.trapezoid(spec.values, spec.grid.omega)) / (2.0 * np.pi)
