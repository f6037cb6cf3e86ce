"""Conversion amplitude, efficiency, bandwidth and throughput."""
import logging
from dataclasses import replace

import numpy as np
from scipy.optimize import brentq

from eomlab.device import derive_rates
from eomlab.errors import UnphysicalInputError

logger = logging.getLogger(__name__)


def s_oe_analytic(rates, f, f_m=None):
    """Weak-coupling microwave-to-optical amplitude.

    -sqrt(eta_e eta_o Gamma_em Gamma_om) / (i (f_m - f) + Gamma_tot / 2).
    Valid while Gamma_em << kappa_e and Gamma_om << kappa_o; not checked.
    """
    f_m = rates.f_m if f_m is None else f_m
    num = np.sqrt(rates.eta_e * rates.eta_o * rates.Gamma_em * rates.Gamma_om)
    return -num / (1j * (f_m - np.asarray(f, dtype=float)) + rates.Gamma_tot / 2)


def s_oe_exact(rates, f, kappa_e, kappa_o):
    """Microwave-to-optical amplitude from the full susceptibilities.

    Keeps the resonator dynamics, so it holds outside the weak-coupling
    regime and away from f_m. Identical to the state-space element.
    """
    f = np.asarray(f, dtype=float)
    chi_e = 1.0 / (1j * (rates.f_e - f) + kappa_e / 2)
    chi_o = 1.0 / (1j * (rates.delta_o - f) + kappa_o / 2)
    inv_chi_m = 1j * (rates.f_m - f) + rates.Gamma_i / 2
    num = np.sqrt(rates.eta_e * rates.eta_o * kappa_e * kappa_o) * rates.G_em * rates.G_om * chi_e * chi_o
    return -num / (inv_chi_m + rates.G_em ** 2 * chi_e + rates.G_om ** 2 * chi_o)


def eta_ext(rates):
    """Peak external efficiency eta_e eta_o 4 Gamma_em Gamma_om / Gamma_tot^2."""
    return rates.eta_e * rates.eta_o * 4 * rates.Gamma_em * rates.Gamma_om / rates.Gamma_tot ** 2


def eta_int(rates):
    """Internal efficiency: eta_ext with the resonator extraction factors removed."""
    return eta_ext(rates) / (rates.eta_e * rates.eta_o)


def eta_ext_at(rates, f):
    """Efficiency |s_oe(f)|^2 at probe frequency ``f``."""
    return np.abs(s_oe_analytic(rates, f)) ** 2


def bandwidth(rates):
    """Transducer bandwidth, the total mechanical linewidth Gamma_tot (Hz)."""
    return rates.Gamma_tot


def throughput(eta, bandwidth_hz, duty_cycle=1.0):
    if not 0 < duty_cycle <= 1:
        raise UnphysicalInputError(f"duty cycle must be in (0, 1], got {duty_cycle!r}")
    return eta * bandwidth_hz * duty_cycle


def pulse_efficiency(eta, bandwidth_hz, pulse_duration):
    """Per-pulse efficiency of a pulsed transducer, eta * B * T_d."""
    return eta * bandwidth_hz * pulse_duration


def tune_photons_for_efficiency(dev, op, target, xtol=1e-12):
    """Operating point with n_c chosen so that eta_ext equals ``target``.

    Searches the rising branch below impedance matching
    (Gamma_om = Gamma_em + Gamma_i), where eta_ext grows with n_c.
    """
    def efficiency(n_c):
        return eta_ext(derive_rates(dev, replace(op, n_c=n_c, p_in=None)))

    rates0 = derive_rates(dev, replace(op, n_c=0.0, p_in=None))
    if rates0.Gamma_em == 0:
        raise UnphysicalInputError("eta_ext is zero for every n_c when Gamma_em = 0")
    kappa_o = dev.kappa_o
    detuning = rates0.delta_o - dev.f_m
    # G_om^2 that matches Gamma_om to Gamma_em + Gamma_i
    g2 = (rates0.Gamma_em + rates0.Gamma_i) * (detuning ** 2 + (kappa_o / 2) ** 2) / kappa_o
    n_match = g2 / dev.g_om ** 2

    lo = 0.0
    for n_c in np.geomspace(n_match * 1e-9, n_match, 400):
        if efficiency(n_c) >= target:
            n_c = brentq(lambda x: efficiency(x) - target, lo, n_c, xtol=xtol * n_match, rtol=1e-14)
            logger.debug("eta_ext = %g reached at n_c = %.10g", target, n_c)
            return replace(op, n_c=float(n_c), p_in=None)
        lo = n_c
    raise UnphysicalInputError(
        f"target eta_ext {target!r} exceeds the reachable maximum {efficiency(n_match)!r}"
    )
