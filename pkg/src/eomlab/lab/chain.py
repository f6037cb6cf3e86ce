"""Measurement chain between the transducer ports and the detectors."""
import math
from dataclasses import dataclass

from eomlab.errors import UnphysicalInputError


@dataclass(frozen=True)
class ChainGains:
    """Losses (alpha) before and gains (beta) after each port, plus detection constants.

    alpha_e, alpha_o : input-line power transmission, in (0, 1]
    beta_e, beta_o   : output-line power gain, > 0
    g_a_db           : electrical chain gain (dB) for noise spectra
    g_o_db           : optical detection gain (dB)
    n_amp            : amplifier added noise (quanta)
    f_if             : integration bandwidth (Hz)
    """

    alpha_e: float = 1.0
    alpha_o: float = 1.0
    beta_e: float = 1.0
    beta_o: float = 1.0
    g_a_db: float = 0.0
    g_o_db: float = 0.0
    n_amp: float = 0.0
    f_if: float = 1.0

    def __post_init__(self):
        for name in ("alpha_e", "alpha_o"):
            value = getattr(self, name)
            if not 0 < value <= 1:
                raise UnphysicalInputError(f"{name} must lie in (0, 1], got {value!r}")
        for name in ("beta_e", "beta_o", "f_if"):
            value = getattr(self, name)
            if not (math.isfinite(value) and value > 0):
                raise UnphysicalInputError(f"{name} must be finite and > 0, got {value!r}")
        if self.n_amp < 0:
            raise UnphysicalInputError(f"n_amp must be >= 0, got {self.n_amp!r}")

    @property
    def electrical_gain(self):
        """10^(G_A/10)."""
        return 10.0 ** (self.g_a_db / 10.0)

    @property
    def optical_gain(self):
        return 10.0 ** (self.g_o_db / 10.0)
