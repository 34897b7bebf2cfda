"""Physical constants (SI, CODATA)."""

from dataclasses import dataclass


@dataclass(frozen=True)
class Constants:
    """Fundamental constants used throughout the package.

    All quantities are SI: G in m^3 kg^-1 s^-2, c in m/s, hbar in J s.
    A single shared instance ``CODATA`` is used by default; operations
    that need different values (e.g. for unit-system checks) accept an
    explicit ``Constants`` argument instead of mutating state.
    """

    G: float = 6.67430e-11
    c: float = 2.99792458e8
    hbar: float = 1.054571817e-34


CODATA = Constants()

# convenience conversions
MPC_M = 3.0856775814913673e22  # one megaparsec in metres
