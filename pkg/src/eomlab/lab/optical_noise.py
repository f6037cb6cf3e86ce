"""Referral of optical output noise to the microwave input.

Both the noise and the coherent transduced tone pass through the same optical
detection gain, so G_o cancels:

    N     = P_o,noise / (f_IF hbar w_o)
    eta   = (P_oe / hbar w_o) / (P_e / hbar w_e)
    n_add = N / eta
"""
from typing import NamedTuple

from eomlab.constants import photon_energy
from eomlab.errors import UndefinedReferralError
from eomlab.lab.measurement_noise import make_rng


class OpticalNoiseMeasurement(NamedTuple):
    p_o_noise: float
    p_oe: float
    p_e: float


def optical_noise_referral(p_o_noise, p_oe, p_e, f_if, f_o, f_e):
    """Input-referred added noise from detected optical noise and a coherent transduction run."""
    if p_e <= 0 or p_oe <= 0:
        raise UndefinedReferralError("coherent transduction powers P_e and P_oe must be > 0")
    noise_quanta = p_o_noise / (f_if * photon_energy(f_o))
    eta_total = (p_oe / photon_energy(f_o)) / (p_e / photon_energy(f_e))
    return noise_quanta / eta_total


def synthesize_optical_noise_measurement(n_o_out, eta, chain, p_e, f_o, f_e, noise=0.0, seed=None):
    """Detected powers for output noise ``n_o_out`` (quanta) and efficiency ``eta``."""
    p_o_noise = chain.optical_gain * n_o_out * chain.f_if * photon_energy(f_o)
    p_oe = chain.optical_gain * eta * p_e * f_o / f_e
    if noise:
        jitter = 1.0 + noise * make_rng(seed).standard_normal(2)
        p_o_noise, p_oe = p_o_noise * jitter[0], p_oe * jitter[1]
    return OpticalNoiseMeasurement(float(p_o_noise), float(p_oe), float(p_e))
