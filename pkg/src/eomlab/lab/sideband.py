"""Sideband-asymmetry thermometry and the gain calibration it enables.

With equal back-action for both pumps, anti-Stokes scattering under a red
pump is proportional to n_m and Stokes scattering under a blue pump to
n_m + 1, so 1/n_m = int(S_b) / int(S_r) - 1 with no calibration needed.
"""
import logging
import math

import numpy as np
from scipy.integrate import trapezoid

from eomlab.constants import photon_energy
from eomlab.errors import UndefinedReferralError, UnphysicalInputError
from eomlab.lab.fitting import lorentzian
from eomlab.lab.measurement_noise import make_rng
from eomlab.network import Spectrum, SpectrumKind

logger = logging.getLogger(__name__)


def sideband_asymmetry(s_red, s_blue):
    """n_m from background-subtracted red- and blue-pump spectra on one grid."""
    if not np.array_equal(s_red.frequencies, s_blue.frequencies):
        raise UnphysicalInputError("red and blue spectra must share one frequency grid")
    i_red = float(trapezoid(np.asarray(s_red.values).real, s_red.frequencies))
    i_blue = float(trapezoid(np.asarray(s_blue.values).real, s_blue.frequencies))
    if i_red <= 0 or i_blue <= i_red:
        raise UnphysicalInputError(
            f"need 0 < int(S_r) < int(S_b), got int(S_r) = {i_red:.4g}, int(S_b) = {i_blue:.4g}"
        )
    n_m = 1.0 / (i_blue / i_red - 1.0)
    logger.info("sideband asymmetry: ratio %.5f, n_m = %.4f", i_blue / i_red, n_m)
    return n_m


def synthesize_sideband_pair(n_m, center, fwhm, frequencies, scale=1.0, noise=0.0, seed=None):
    """(S_r, S_b) Lorentzians with areas in ratio n_m : n_m + 1.

    ``noise`` adds white Gaussian noise of that fraction of the blue peak to
    both spectra, drawn from one seeded generator.
    """
    f = np.asarray(frequencies, dtype=float)
    shape = scale * lorentzian(f, center, fwhm, 1.0, 0.0)
    red, blue = n_m * shape, (n_m + 1) * shape
    if noise:
        rng = make_rng(seed)
        level = noise * float(np.max(blue))
        red = red + level * rng.standard_normal(f.shape)
        blue = blue + level * rng.standard_normal(f.shape)
    return Spectrum(f, red, SpectrumKind.FLUX_PSD), Spectrum(f, blue, SpectrumKind.FLUX_PSD)


def _emitted_flux(n_m, rates, n_mw):
    # thermal phonons leaving through the microwave port, photons/s
    return 2 * math.pi * rates.eta_e * rates.Gamma_em * (n_m - rates.Gamma_em * n_mw / rates.Gamma_tot)


def thermal_emission_power(g_db, n_m, rates, f, n_mw=0.0):
    """Excess electrical noise power (W) from the mechanics' thermal emission."""
    return 10.0 ** (g_db / 10.0) * photon_energy(f) * _emitted_flux(n_m, rates, n_mw)


def thermal_emission_gain(p_excess, n_m, rates, f, n_mw=0.0):
    """Chain gain (dB) that maps a known n_m to the measured excess power ``p_excess``."""
    flux = _emitted_flux(n_m, rates, n_mw)
    if flux <= 0 or p_excess <= 0:
        raise UndefinedReferralError("thermal emission power and flux must both be > 0")
    return 10.0 * math.log10(p_excess / (photon_energy(f) * flux))
