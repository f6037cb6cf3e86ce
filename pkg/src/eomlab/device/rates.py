"""Rate formulas: couplings, resonator-mediated damping, pump photons, thermal occupancy."""
import math

import numpy as np

from eomlab.constants import HBAR, K_B, TWO_PI
from eomlab.errors import UnphysicalInputError


def coupling_rates(dev, op):
    """(G_em, G_om) in Hz: g_em * V_DC and g_om * sqrt(n_c)."""
    return dev.g_em_per_volt * op.v_dc, dev.g_om * math.sqrt(op.photons(dev))


def mediated_damping(G, kappa, delta):
    """Damping a resonator of linewidth ``kappa`` detuned by ``delta`` adds to the mechanics.

    G^2 kappa / (delta^2 + (kappa/2)^2), which is 4 G^2 / kappa on resonance.
    Works elementwise on arrays.
    """
    if np.any(np.asarray(kappa) <= 0):
        raise UnphysicalInputError(f"resonator linewidth must be > 0, got {kappa!r}")
    return G ** 2 * kappa / (delta ** 2 + (kappa / 2) ** 2)


def intracavity_photons(dev, p_in, delta_l):
    """Steady-state pump photons for waveguide power ``p_in`` (W) at laser detuning ``delta_l`` (Hz)."""
    if p_in < 0:
        raise UnphysicalInputError(f"pump power must be >= 0, got {p_in!r}")
    w_laser = TWO_PI * (dev.f_o - delta_l)
    kappa_ext, kappa = TWO_PI * dev.kappa_o_ext, TWO_PI * dev.kappa_o
    delta = TWO_PI * delta_l
    return p_in * kappa_ext / (HBAR * w_laser * (delta ** 2 + (kappa / 2) ** 2))


def waveguide_power(dev, p_fiber):
    """Fiber power to on-chip waveguide power through the fiber coupling efficiency."""
    return dev.eta_f * p_fiber


def bose_occupation(f_hz, temperature):
    """Bose-Einstein occupancy at frequency ``f_hz`` and temperature (K). Vectorized."""
    temperature = np.asarray(temperature, dtype=float)
    if np.any(temperature < 0):
        raise UnphysicalInputError("temperature must be >= 0")
    with np.errstate(divide="ignore", over="ignore"):
        x = HBAR * TWO_PI * f_hz / (K_B * temperature)
        n = 1.0 / np.expm1(x)
    return float(n) if n.ndim == 0 else n


def effective_temperature(f_hz, occupancy):
    """Temperature (K) at which a mode at ``f_hz`` has mean ``occupancy``."""
    if occupancy < 0:
        raise UnphysicalInputError(f"occupancy must be >= 0, got {occupancy!r}")
    if occupancy == 0:
        return 0.0
    return HBAR * TWO_PI * f_hz / (K_B * math.log1p(1.0 / occupancy))
