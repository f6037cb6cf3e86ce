"""Physical constants and unit helpers.

Every public interface in eomlab takes ordinary frequencies in Hz (the
"/2pi" values quoted in device tables). Conversion to angular rates happens
only where a formula needs hbar*omega or a state-space matrix.
"""
import numpy as np
from scipy import constants as _sc

# CODATA-2018 (exact in the 2019 SI)
HBAR = _sc.hbar  # 1.054571817e-34 J s
K_B = _sc.k  # 1.380649e-23 J/K

TWO_PI = 2.0 * np.pi


def angular(f_hz):
    """Hz -> rad/s."""
    return TWO_PI * np.asarray(f_hz, dtype=float) if np.ndim(f_hz) else TWO_PI * float(f_hz)


def photon_energy(f_hz):
    """Energy hbar*omega of one photon at ordinary frequency ``f_hz`` (J)."""
    return HBAR * angular(f_hz)
