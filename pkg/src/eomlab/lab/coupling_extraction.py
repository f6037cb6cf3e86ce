"""Single-photon coupling rates from measured linewidths."""
import logging
import math

import numpy as np
from sklearn.linear_model import LinearRegression

from eomlab.errors import FitError, UnphysicalInputError

logger = logging.getLogger(__name__)


def extract_g_em(voltages, gamma_em, kappa_e):
    """g_em (Hz/V) from Gamma_em measured at several bias voltages.

    On resonance Gamma_em * kappa_e / 4 = (g_em V)^2, a line through the origin in V^2.
    """
    v = np.asarray(voltages, dtype=float)
    y = np.asarray(gamma_em, dtype=float) * kappa_e / 4
    if np.unique(v[v != 0]).size < 1:
        raise FitError("need at least one non-zero bias voltage")
    model = LinearRegression(fit_intercept=False).fit((v ** 2).reshape(-1, 1), y)
    slope = float(model.coef_[0])
    if slope <= 0:
        raise FitError(f"Gamma_em does not grow with V^2 (slope {slope:.3g})")
    g_em = math.sqrt(slope)
    logger.info("extracted g_em = %.6g Hz/V from %d voltages", g_em, v.size)
    return g_em


def extract_g_om(gamma_red, gamma_resonant, n_c, kappa_o, f_m):
    """g_om (Hz) from the linewidth difference between red-sideband and resonant pumping.

    The red pump adds 4 G^2 / kappa_o, the resonant pump
    G^2 kappa_o / (f_m^2 + (kappa_o/2)^2).
    """
    if n_c <= 0:
        raise UnphysicalInputError("n_c must be > 0")
    difference = gamma_red - gamma_resonant
    if difference <= 0:
        raise UnphysicalInputError("red-sideband linewidth must exceed the resonant-pump linewidth")
    per_g2 = 4 / kappa_o - kappa_o / (f_m ** 2 + (kappa_o / 2) ** 2)
    return math.sqrt(difference / per_g2 / n_c)
