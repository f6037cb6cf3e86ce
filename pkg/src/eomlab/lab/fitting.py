"""Lorentzian least-squares fitting.

Model: offset + peak * (fwhm/2)^2 / ((f - center)^2 + (fwhm/2)^2).
``peak`` may be negative (a dip).

The starting point is fixed by the data: the extremum sample sets the center,
the samples past half height set the FWHM, and the median of the outer 20%
sets the offset. The fit then runs Levenberg-Marquardt in coordinates
normalized by that guess, so results do not depend on the frequency scale.
"""
import logging
import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import least_squares

from eomlab.errors import FitError

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 200
XTOL = 1e-10
MIN_POINTS = 5


def lorentzian(f, center, fwhm, peak, offset):
    hw2 = (fwhm / 2) ** 2
    return offset + peak * hw2 / ((np.asarray(f, dtype=float) - center) ** 2 + hw2)


@dataclass(frozen=True)
class LorentzianFit:
    center: float
    fwhm: float
    peak: float
    offset: float
    residual_rms: float

    def __call__(self, f):
        return lorentzian(f, self.center, self.fwhm, self.peak, self.offset)

    @property
    def area(self):
        """Integral of the Lorentzian above the offset (value units x Hz)."""
        return self.peak * math.pi * self.fwhm / 2

    def to_record(self, prefix="fit."):
        return {
            f"{prefix}center_Hz": self.center,
            f"{prefix}fwhm_Hz": self.fwhm,
            f"{prefix}peak": self.peak,
            f"{prefix}offset": self.offset,
            f"{prefix}residual_rms": self.residual_rms,
        }


def initial_guess(f, y):
    """(center, fwhm, peak, offset) starting point; raises FitError if none exists."""
    k = max(1, int(round(0.1 * y.size)))
    offset = float(np.median(np.concatenate([y[:k], y[-k:]])))
    up, down = y.max() - offset, offset - y.min()
    sign = 1.0 if up >= down else -1.0
    i0 = int(np.argmax(sign * y))
    peak = float(y[i0] - offset)
    if abs(peak) <= 1e-12 * max(float(np.max(np.abs(y))), 1e-300):
        raise FitError("flat data: FWHM unresolvable")
    above = f[sign * (y - (offset + peak / 2)) >= 0]
    if above.size < 2:
        raise FitError("FWHM not resolved by the frequency grid")
    fwhm = float(above[-1] - above[0])
    if f[-1] - f[0] < 2 * fwhm:
        raise FitError(f"grid span {f[-1] - f[0]:.6g} Hz covers less than 2 estimated FWHM ({fwhm:.6g} Hz)")
    return float(f[i0]), fwhm, peak, offset


def lorentzian_fit(spectrum):
    """Fit a single Lorentzian to ``spectrum`` and return a LorentzianFit."""
    f = spectrum.frequencies
    y = np.asarray(spectrum.values).real.astype(float)
    if f.size < MIN_POINTS:
        raise FitError(f"need at least {MIN_POINTS} points, got {f.size}")
    c0, w0, a0, b0 = initial_guess(f, y)
    x = (f - c0) / w0
    yn = (y - b0) / a0

    def residuals(p):
        xc, w, a, b = p
        hw2 = (w / 2) ** 2
        return b + a * hw2 / ((x - xc) ** 2 + hw2) - yn

    def jacobian(p):
        xc, w, a, b = p
        hw2 = (w / 2) ** 2
        d = (x - xc) ** 2
        den = d + hw2
        return np.column_stack([
            a * hw2 * 2 * (x - xc) / den ** 2,
            a * (w / 2) * d / den ** 2,
            hw2 / den,
            np.ones_like(x),
        ])

    result = least_squares(
        residuals, np.array([0.0, 1.0, 1.0, 0.0]), jac=jacobian, method="lm",
        xtol=XTOL, ftol=1e-15, gtol=1e-15, max_nfev=MAX_ITERATIONS,
    )
    if result.status <= 0:
        raise FitError(f"Lorentzian fit did not converge: {result.message}", iterations=result.nfev)
    xc, w, a, b = result.x
    fwhm = abs(w) * w0
    if not (math.isfinite(fwhm) and fwhm > 0):
        raise FitError(f"Lorentzian fit returned an invalid FWHM {fwhm!r}")
    fit = LorentzianFit(
        center=float(c0 + xc * w0),
        fwhm=float(fwhm),
        peak=float(a * a0),
        offset=float(b0 + b * a0),
        residual_rms=0.0,
    )
    rms = float(np.sqrt(np.mean((fit(f) - y) ** 2)))
    logger.debug("Lorentzian fit: center %.12g Hz, FWHM %.6g Hz after %d evaluations", fit.center, fwhm, result.nfev)
    return LorentzianFit(fit.center, fit.fwhm, fit.peak, fit.offset, rms)
