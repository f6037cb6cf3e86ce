"""Gain calibration from amplified thermal noise of a swept-temperature load.

    P(T) = f_IF * hbar w * 10^(G_A/10) * (n_B(w, T) + n_amp)
"""
import logging
from typing import NamedTuple

import numpy as np
from scipy.optimize import least_squares
from sklearn.linear_model import LinearRegression

from eomlab.constants import photon_energy
from eomlab.device.rates import bose_occupation
from eomlab.errors import FitError, UnphysicalInputError
from eomlab.lab.measurement_noise import add_measurement_noise

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200


class GainCalibration(NamedTuple):
    g_a_db: float
    n_amp: float


def gain_sweep_power(temperatures, g_a_db, n_amp, f, f_if):
    """Detected noise power (W) at each temperature."""
    n_b = bose_occupation(f, np.asarray(temperatures, dtype=float))
    return f_if * photon_energy(f) * 10.0 ** (g_a_db / 10.0) * (n_b + n_amp)


def synthesize_temperature_sweep(temperatures, g_a_db, n_amp, f, f_if, noise=0.0, seed=None):
    """List of (T, P) pairs, optionally with relative Gaussian noise on P."""
    power = gain_sweep_power(temperatures, g_a_db, n_amp, f, f_if)
    power = add_measurement_noise(power, noise, seed=seed)
    return list(zip(np.asarray(temperatures, dtype=float).tolist(), power.tolist()))


def gain_cal_temperature_sweep(data, f, f_if):
    """Fit (G_A in dB, n_amp) to (temperature K, power W) samples.

    A linear regression of P / (f_IF hbar w) on n_B gives the starting point;
    a Levenberg-Marquardt fit on relative residuals refines it.
    """
    data = np.asarray(data, dtype=float)
    if data.ndim != 2 or data.shape[1] != 2:
        raise ValueError("data must be a sequence of (temperature, power) pairs")
    temperatures, power = data[:, 0], data[:, 1]
    if np.any(temperatures <= 0):
        raise UnphysicalInputError("temperatures must be > 0")
    if np.unique(temperatures).size < 3:
        raise FitError("gain calibration needs at least 3 distinct temperatures")

    quanta = power / (f_if * photon_energy(f))
    n_b = bose_occupation(f, temperatures)
    # 1. Linear start: quanta = g * n_B + g * n_amp
    linear = LinearRegression().fit(n_b.reshape(-1, 1), quanta)
    slope, intercept = float(linear.coef_[0]), float(linear.intercept_)
    if slope <= 0:
        raise FitError(f"noise power does not rise with temperature (slope {slope:.3g})")
    start = np.array([10 * np.log10(slope), intercept / slope])

    # 2. Nonlinear refinement in (dB, quanta)
    def residuals(p):
        return 10.0 ** (p[0] / 10.0) * (n_b + p[1]) / quanta - 1.0

    result = least_squares(residuals, start, method="lm", xtol=1e-12, ftol=1e-15, gtol=1e-15,
                           max_nfev=MAX_ITERATIONS)
    if result.status <= 0:
        raise FitError(f"gain calibration did not converge: {result.message}", iterations=result.nfev)
    g_a_db, n_amp = (float(x) for x in result.x)
    logger.info("gain calibration: G_A = %.3f dB, n_amp = %.3f", g_a_db, n_amp)
    return GainCalibration(g_a_db, n_amp)
