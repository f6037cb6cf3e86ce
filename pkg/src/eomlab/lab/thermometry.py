"""Electrical noise thermometry.

The microwave output noise, normalized to quanta (S / hbar w) and amplified by
the electrical chain, is

    G * (n_amp + 1/2 + mechanical Lorentzian + microwave-resonator terms)

A spectrum taken with V_DC = 0 shows only the microwave resonator and gives
n_e,int. With the mechanics coupled, the area of the mechanical Lorentzian
gives the heating rate Gamma_f n_f + Gamma_p n_p and from it n_m.
"""
import logging
import math

import numpy as np

from eomlab.errors import ConfigError, UndefinedReferralError, UnphysicalInputError
from eomlab.lab.fitting import lorentzian_fit
from eomlab.metrics.noise import occupancies
from eomlab.network import Spectrum, SpectrumKind

logger = logging.getLogger(__name__)

REGIMES = ("general", "detuned", "on_resonance")


def _mechanical_denominator(rates, f):
    return (rates.f_m - f) ** 2 + (rates.Gamma_tot / 2) ** 2


def squash_term(rates, baths, f):
    """Part of the on-resonance mechanical band proportional to n_e,int (quanta, before gain).

    eta_e Gamma_em (Gamma_em - 2 Gamma_tot) n_mw / ((f_m - f)^2 + (Gamma_tot/2)^2);
    never positive since Gamma_em <= Gamma_tot.
    """
    f = np.asarray(f, dtype=float)
    n_mw, _ = occupancies(rates, baths)
    return rates.eta_e * rates.Gamma_em * (rates.Gamma_em - 2 * rates.Gamma_tot) * n_mw / _mechanical_denominator(rates, f)


def electrical_psd(rates, baths, chain, frequencies, regime="general"):
    """Amplified symmetrized noise spectrum at the microwave output, in quanta.

    Parameters
    ----------
    rates : DerivedRates
    baths : BathRates
    chain : ChainGains
        Uses g_a_db and n_amp.
    frequencies : array_like
        Grid in Hz.
    regime : {"general", "detuned", "on_resonance"}
        ``general`` keeps the full microwave-resonator response;
        ``detuned`` drops the resonator term (|f_e - f_m| >> kappa_e);
        ``on_resonance`` is the f_e = f_m form with its 4 eta_e n_mw
        background and the squashed mechanical term.
    """
    if regime not in REGIMES:
        raise ConfigError(f"regime must be one of {REGIMES}, got {regime!r}")
    f = np.asarray(frequencies, dtype=float)
    n_mw, _ = occupancies(rates, baths)
    den = _mechanical_denominator(rates, f)
    quanta = chain.n_amp + 0.5 + rates.eta_e * rates.Gamma_em * baths.heating_rate / den
    if regime == "general":
        ratio = ((rates.f_m - f) ** 2 + ((rates.Gamma_om + rates.Gamma_i) / 2) ** 2) / den
        chi_e2 = 1.0 / ((rates.f_e - f) ** 2 + (baths.kappa_e / 2) ** 2)
        quanta = quanta + ratio * chi_e2 * baths.kappa_e_ext * baths.kappa_e_int * baths.n_e_int
    elif regime == "on_resonance":
        quanta = quanta + squash_term(rates, baths, f) + 4 * rates.eta_e * n_mw
    return Spectrum(f, chain.electrical_gain * quanta, SpectrumKind.SYMMETRIZED_PSD)


def _is_flat(spectrum):
    v = np.asarray(spectrum.values).real
    return np.ptp(v) <= 1e-12 * np.max(np.abs(v))


def extract_microwave_occupancy(spectrum, chain, kappa_e_ext, kappa_e_int):
    """(n_e,int, n_mw) from a spectrum taken with the mechanics decoupled (V_DC = 0).

    The peak-to-floor ratio of the resonator Lorentzian fixes n_e,int; the
    chain gain cancels in that ratio.
    """
    if _is_flat(spectrum):
        return 0.0, 0.0
    fit = lorentzian_fit(spectrum)
    kappa_e = kappa_e_ext + kappa_e_int
    n_e_int = fit.peak / fit.offset * (chain.n_amp + 0.5) * (kappa_e / 2) ** 2 / (kappa_e_ext * kappa_e_int)
    if n_e_int < 0:
        raise UnphysicalInputError(f"inferred microwave bath occupancy is negative ({n_e_int:.4g})")
    n_mw = kappa_e_int * n_e_int / kappa_e
    logger.info("microwave thermometry: n_e,int = %.4f, n_mw = %.4f", n_e_int, n_mw)
    return n_e_int, n_mw


def extract_mechanical_occupancy(spectrum, chain, rates, n_mw, regime="detuned"):
    """Mechanical occupancy from the electrical thermal-emission spectrum.

    The floor of the fit fixes the chain gain, its FWHM the total linewidth
    and its area the heating rate. In the ``on_resonance`` regime the squashed
    n_mw contribution is removed before the heating rate is formed.
    """
    if regime not in ("detuned", "on_resonance"):
        raise ConfigError(f"regime must be 'detuned' or 'on_resonance', got {regime!r}")
    if rates.Gamma_em == 0:
        raise UndefinedReferralError("mechanical thermometry needs Gamma_em > 0")
    if _is_flat(spectrum):
        return rates.Gamma_em * n_mw / rates.Gamma_tot

    fit = lorentzian_fit(spectrum)
    background = chain.n_amp + 0.5
    if regime == "on_resonance":
        background += 4 * rates.eta_e * n_mw
    gain = fit.offset / background
    gamma_tot = fit.fwhm
    signal = fit.area / gain * gamma_tot / (2 * math.pi * rates.eta_e * rates.Gamma_em)
    heating = signal
    if regime == "on_resonance":
        heating = signal - (rates.Gamma_em - 2 * gamma_tot) * n_mw
    if heating < -1e-9 * max(abs(signal), 1e-300):
        raise UnphysicalInputError(f"inferred heating rate is negative ({heating:.4g} Hz)")
    heating = max(heating, 0.0)
    n_m = (rates.Gamma_em * n_mw + heating) / gamma_tot
    logger.info("mechanical thermometry: Gamma_tot = %.6g Hz, n_m = %.4f", gamma_tot, n_m)
    return n_m
