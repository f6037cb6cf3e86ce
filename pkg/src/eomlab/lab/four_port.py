"""Four-port efficiency measurement.

Each transmission picks up the loss of the line feeding the input port and
the gain of the line leaving the output port; the off-resonance reflections
pick up the same factors. In the ratio

    eta_ext = sqrt(T_oe T_eo / (R_ee R_oo))

every chain factor cancels.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np

from eomlab.errors import UndefinedReferralError, UnphysicalInputError
from eomlab.lab.measurement_noise import add_measurement_noise
from eomlab.network import mode_resonances, transfer_matrices

logger = logging.getLogger(__name__)

OFF_RESONANCE_LINEWIDTHS = 10.0


@dataclass(frozen=True)
class FourPortResult:
    T_oe: float
    T_eo: float
    R_ee: float
    R_oo: float
    eta_ext_est: float
    # alpha_e * beta_o, for later single-transmittance recalibration
    alpha_e_beta_o: float
    probe_frequency: float
    # |xi_oe(probe)|^2 of the simulated device
    eta_ext_true: float

    def to_record(self):
        return {
            "fourport.T_oe": self.T_oe,
            "fourport.T_eo": self.T_eo,
            "fourport.R_ee": self.R_ee,
            "fourport.R_oo": self.R_oo,
            "fourport.eta_ext_est": self.eta_ext_est,
            "fourport.alpha_e_beta_o": self.alpha_e_beta_o,
            "fourport.probe_Hz": self.probe_frequency,
            "fourport.eta_ext_true": self.eta_ext_true,
        }


def _peak_frequency(system, e_in, o_out):
    centers, _ = mode_resonances(system)
    xi = transfer_matrices(system, centers)[:, o_out, e_in]
    return float(centers[int(np.argmax(np.abs(xi)))])


def _off_resonance(system, port, linewidths):
    mode = system.bath_modes[system.input_index(port)]
    return system.mode_frequency(mode) + linewidths * system.mode_linewidth(mode)


def four_port_run(system, chain, probe_frequency=None, microwave_port="e_ext", optical_port="o_ext",
                  off_resonance_linewidths=OFF_RESONANCE_LINEWIDTHS, noise=0.0, seed=None, rng=None):
    """Synthesize T_oe, T_eo, R_ee, R_oo through ``chain`` and estimate eta_ext.

    The transmissions are taken at ``probe_frequency`` (default: the normal
    mode with the largest conversion); the reflections
    ``off_resonance_linewidths`` linewidths above each port's resonator.
    ``noise`` is the relative Gaussian error of each of the four readings.
    """
    e_in, o_in = system.input_index(microwave_port), system.input_index(optical_port)
    e_out, o_out = system.output_index(microwave_port), system.output_index(optical_port)
    if probe_frequency is None:
        probe_frequency = _peak_frequency(system, e_in, o_out)

    xi = transfer_matrices(system, [
        probe_frequency,
        _off_resonance(system, microwave_port, off_resonance_linewidths),
        _off_resonance(system, optical_port, off_resonance_linewidths),
    ])
    s_oe = abs(xi[0, o_out, e_in]) ** 2
    s_eo = abs(xi[0, e_out, o_in]) ** 2
    T_oe = chain.alpha_e * s_oe * chain.beta_o
    T_eo = chain.alpha_o * s_eo * chain.beta_e
    R_ee = chain.alpha_e * abs(xi[1, e_out, e_in]) ** 2 * chain.beta_e
    R_oo = chain.alpha_o * abs(xi[2, o_out, o_in]) ** 2 * chain.beta_o
    if noise:
        readings = add_measurement_noise([T_oe, T_eo, R_ee, R_oo], noise, seed=seed, rng=rng)
        T_oe, T_eo, R_ee, R_oo = (float(x) for x in readings)
    if min(T_oe, T_eo) < 0:
        raise UnphysicalInputError("measurement noise drove a transmittance below zero")
    if R_ee <= 0 or R_oo <= 0:
        raise UndefinedReferralError("off-resonance reflectance is zero; cannot normalize the chain out")

    estimate = math.sqrt(T_oe * T_eo / (R_ee * R_oo))
    logger.info("four-port: eta_ext = %.4f (device %.4f) at %.9g Hz", estimate, s_oe, probe_frequency)
    return FourPortResult(
        T_oe=T_oe,
        T_eo=T_eo,
        R_ee=R_ee,
        R_oo=R_oo,
        eta_ext_est=estimate,
        alpha_e_beta_o=T_oe / estimate if estimate > 0 else math.nan,
        probe_frequency=float(probe_frequency),
        eta_ext_true=s_oe,
    )


def efficiency_from_transmittance(T_oe, alpha_e_beta_o):
    """eta_ext from one transmittance once a four-port run has fixed alpha_e * beta_o."""
    if not alpha_e_beta_o > 0:
        raise UndefinedReferralError(f"alpha_e * beta_o must be > 0, got {alpha_e_beta_o!r}")
    return T_oe / alpha_e_beta_o
