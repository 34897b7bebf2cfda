"""Frequency-domain simulation of quantized gravitational-wave
measurement chains.

The package follows the signal path of a GW quantum state through a
transducer (Fabry-Perot interferometer or resonant bar) to a detector
(homodyne or photon counting):

* :mod:`gwdk.spectra` -- frequency grids, PSDs, spectral quadrature
* :mod:`gwdk.gw_field` -- GW quantum states, strain statistics, flux
* :mod:`gwdk.source` -- binary sources, quantization area, power flux
* :mod:`gwdk.ifo` -- cavity antenna transfer functions and noise budget
* :mod:`gwdk.bar` -- bar antenna response and noise budget
* :mod:`gwdk.counting` -- Poisson click statistics and stream sampling
* :mod:`gwdk.cli` -- command-line front end and config loading
"""

from .constants import CODATA, MPC_M, Constants
from .gw_field import Coherent, Fock, GwState, Vacuum
from .spectra import FrequencyGrid, Spectrum

__all__ = [
    "CODATA",
    "MPC_M",
    "Constants",
    "Coherent",
    "Fock",
    "FrequencyGrid",
    "GwState",
    "Spectrum",
    "Vacuum",
]

__version__ = "0.1.0"
