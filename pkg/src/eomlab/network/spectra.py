"""Sampled spectra computed from a LinearSystem.

Flux spectral densities are normal ordered: an input bath with occupancy n
contributes |xi|^2 n, vacuum contributes nothing.
"""
import logging
from dataclasses import dataclass
from enum import Enum

import numpy as np
import pandas as pd
from scipy.integrate import trapezoid

from eomlab.errors import ConfigError, ConvergenceError, UnphysicalInputError
from eomlab.network.state_space import internal_response, mode_resonances, transfer_matrices

logger = logging.getLogger(__name__)


class SpectrumKind(str, Enum):
    SCATTERING_AMPLITUDE = "scattering_amplitude"
    FLUX_PSD = "flux_psd_photons_per_s_per_Hz"
    SYMMETRIZED_PSD = "symmetrized_psd_quanta"
    # internal-mode spectral density; integrates over Hz to an occupancy
    MODE_PSD = "mode_psd_quanta_per_Hz"


@dataclass(frozen=True, eq=False)
class Spectrum:
    frequencies: np.ndarray
    values: np.ndarray
    kind: SpectrumKind

    def __post_init__(self):
        f = np.asarray(self.frequencies, dtype=float)
        v = np.asarray(self.values)
        if f.ndim != 1 or v.shape != f.shape:
            raise ValueError(f"frequencies and values must be 1-D of equal length, got {f.shape} and {v.shape}")
        if f.size > 1 and not np.all(np.diff(f) > 0):
            raise ValueError("spectrum frequencies must be strictly increasing")
        object.__setattr__(self, "frequencies", f)
        object.__setattr__(self, "values", v)
        object.__setattr__(self, "kind", SpectrumKind(self.kind))

    def __len__(self):
        return self.frequencies.size

    def check_physical(self, gain_factor=1.0, rtol=1e-12):
        """Raise UnphysicalInputError if flux PSDs go negative or a symmetrized
        PSD drops below half a quantum times ``gain_factor``."""
        if self.kind in (SpectrumKind.FLUX_PSD, SpectrumKind.MODE_PSD):
            floor = 0.0
        elif self.kind is SpectrumKind.SYMMETRIZED_PSD:
            floor = 0.5 * gain_factor
        else:
            return self
        worst = float(np.min(self.values.real))
        if worst < floor - rtol * max(abs(floor), float(np.max(np.abs(self.values))), 1.0):
            raise UnphysicalInputError(f"{self.kind.value} sample {worst!r} below floor {floor!r}")
        return self

    def scaled(self, factor):
        return Spectrum(self.frequencies, self.values * factor, self.kind)

    def integral(self):
        """Trapezoid integral over the sampled grid (Hz)."""
        return float(trapezoid(self.values.real, self.frequencies))

    def to_frame(self):
        frame = pd.DataFrame({"frequency_Hz": self.frequencies})
        if np.iscomplexobj(self.values):
            frame["value_re"] = self.values.real
            frame["value_im"] = self.values.imag
            frame["value_abs2"] = np.abs(self.values) ** 2
        else:
            frame["value"] = self.values
        frame["kind"] = self.kind.value
        return frame


def output_flux_psd(system, bath_occupancies, port, frequencies):
    """Photon-flux spectral density leaving output ``port``.

    Parameters
    ----------
    system : LinearSystem
    bath_occupancies : mapping of bath label to occupancy, or None
        Missing baths are at zero occupancy. ``None`` uses the occupancies
        declared with the baths.
    port : str
        Output port label.
    frequencies : array_like
        Grid in Hz, strictly increasing.
    """
    p = system.output_index(port)
    n = system.occupancy_vector(bath_occupancies)
    frequencies = np.asarray(frequencies, dtype=float)
    xi = transfer_matrices(system, frequencies)[:, p, : system.n_inputs]
    return Spectrum(frequencies, (np.abs(xi) ** 2) @ n, SpectrumKind.FLUX_PSD)


def _mode_density(system, n, j, frequencies):
    X = internal_response(system, frequencies)[:, j, : system.n_inputs]
    return (np.abs(X) ** 2) @ n


def mode_psd(system, bath_occupancies, mode, frequencies, ordering="normal"):
    """Spectral density of an internal mode, in quanta per Hz.

    ``ordering="normal"`` gives <a^dag a>(f) and integrates to n;
    ``"antinormal"`` gives <a a^dag>(f) and integrates to n + 1.
    """
    if ordering not in ("normal", "antinormal"):
        raise ConfigError(f"ordering must be 'normal' or 'antinormal', got {ordering!r}")
    j = system.mode_index(mode)
    n = system.occupancy_vector(bath_occupancies)
    if ordering == "antinormal":
        n = n + 1.0
    frequencies = np.asarray(frequencies, dtype=float)
    return Spectrum(frequencies, _mode_density(system, n, j, frequencies), SpectrumKind.MODE_PSD)


def _windows(system, window, points):
    centers, widths = mode_resonances(system)
    edges = []
    grids = []
    for c, w in zip(centers, widths):
        half = window * w
        grids.append(np.linspace(c - half, c + half, points))
        edges.append((c - half, c, c + half))
    return np.unique(np.concatenate(grids)), edges


def mode_occupancy_numeric(system, bath_occupancies, mode, window=50.0, points=2001,
                           rtol=1e-5, max_refinements=6, max_tail_fraction=0.05):
    """Steady-state <a^dag a> of ``mode`` by integrating its spectral density.

    The grid is the union of windows of +-``window`` linewidths around every
    normal mode. Each level doubles the samples per window; the result is
    accepted when two consecutive levels agree to ``rtol`` and is returned
    with one Richardson step applied. The Lorentzian tail beyond the outer
    edges is estimated as S(edge) * |edge - center| and added.
    """
    j = system.mode_index(mode)
    n = system.occupancy_vector(bath_occupancies)
    if not np.any(n):
        return 0.0

    previous = None
    for level in range(max_refinements + 1):
        npts = (points - 1) * 2 ** level + 1
        f, edges = _windows(system, window, npts)
        s = _mode_density(system, n, j, f)
        body = float(trapezoid(s, f))
        lo_center = min(edges)[1]
        hi_center = max(edges, key=lambda e: e[2])[1]
        tail = float(s[0] * (lo_center - f[0]) + s[-1] * (f[-1] - hi_center))
        total = body + tail
        logger.debug("occupancy %s level %d: %d points, value %.12g, tail %.3g", mode, level, f.size, total, tail)
        if total > 0 and tail > max_tail_fraction * total:
            raise ConvergenceError(
                f"integration window too narrow for mode {mode!r}: tail {tail:.3g} of {total:.3g}",
                tail_estimate=tail,
            )
        if previous is not None and abs(total - previous) <= rtol * abs(total) + 1e-300:
            return total + (total - previous) / 3.0
        previous = total
    raise ConvergenceError(
        f"occupancy of mode {mode!r} did not converge after {max_refinements} refinements",
        tail_estimate=tail,
        iterations=max_refinements,
    )
