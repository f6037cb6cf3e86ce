"""Device parameters, operating points and the rates derived from them.

All frequencies and rates are ordinary frequencies in Hz (the /2pi values).
"""
import math
from dataclasses import dataclass, field, fields

from eomlab.device.hot_bath import HotBathModel
from eomlab.errors import UnphysicalInputError


@dataclass(frozen=True)
class DeviceParams:
    """Fixed hardware numbers of one transducer."""

    f_e: float
    kappa_e_ext: float
    kappa_e_int: float
    f_o: float
    kappa_o_ext: float
    kappa_o_int: float
    f_m: float
    gamma_i_saturated: float
    g_em_per_volt: float
    g_om: float
    eta_f: float

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if not math.isfinite(value) or value <= 0:
                raise UnphysicalInputError(f"device parameter {f.name} must be finite and > 0, got {value!r}")
        if self.eta_f > 1:
            raise UnphysicalInputError(f"eta_f must be <= 1, got {self.eta_f!r}")

    @property
    def kappa_e(self):
        return self.kappa_e_ext + self.kappa_e_int

    @property
    def kappa_o(self):
        return self.kappa_o_ext + self.kappa_o_int


def reference_device(kappa_e_ext=1.33e6):
    """The measured device. Some datasets were taken with kappa_e_ext = 1.5 MHz."""
    return DeviceParams(
        f_e=5.0745e9,
        kappa_e_ext=kappa_e_ext,
        kappa_e_int=330e3,
        f_o=192.9263e12,
        kappa_o_ext=1.35e9,
        kappa_o_int=404e6,
        f_m=5.0745e9,
        gamma_i_saturated=892.0,
        g_em_per_volt=3.81e3,
        g_om=343e3,
        eta_f=0.35,
    )


@dataclass(frozen=True)
class OperatingPoint:
    """Tunable knobs of one experiment.

    Give either ``n_c`` or the waveguide pump power ``p_in`` (W), not both;
    with neither, the pump is off. ``delta_o`` defaults to f_m (red sideband)
    and ``f_e_tuned`` to the device's f_e. ``duty_cycle`` defaults to 1, or to
    pulse_duration * repetition_rate when both are given.
    """

    v_dc: float = 0.0
    n_c: float = None
    p_in: float = None
    delta_o: float = None
    f_e_tuned: float = None
    n_f: float = 0.0
    n_e_int: float = 0.0
    hot_bath: HotBathModel = field(default_factory=HotBathModel)
    duty_cycle: float = None
    pulse_duration: float = None
    repetition_rate: float = None

    def __post_init__(self):
        if self.v_dc < 0:
            raise UnphysicalInputError(f"V_DC must be >= 0, got {self.v_dc!r}")
        if self.n_c is not None and self.p_in is not None:
            raise UnphysicalInputError("give either n_c or p_in, not both")
        for name in ("n_c", "p_in", "n_f", "n_e_int"):
            value = getattr(self, name)
            if value is not None and (not math.isfinite(value) or value < 0):
                raise UnphysicalInputError(f"{name} must be finite and >= 0, got {value!r}")
        pulsed = self.pulse_duration is not None and self.repetition_rate is not None
        if self.duty_cycle is None:
            object.__setattr__(self, "duty_cycle", self.pulse_duration * self.repetition_rate if pulsed else 1.0)
        D = self.duty_cycle
        if not 0 < D <= 1:
            raise UnphysicalInputError(f"duty cycle must be in (0, 1], got {D!r}")
        if pulsed and abs(D - self.pulse_duration * self.repetition_rate) >= 1e-12 * D:
            raise UnphysicalInputError(
                f"duty cycle {D!r} != T_d * R_p = {self.pulse_duration * self.repetition_rate!r}"
            )

    def photons(self, dev):
        """Resolved intracavity photon number."""
        if self.n_c is not None:
            return float(self.n_c)
        if self.p_in is not None:
            from eomlab.device.rates import intracavity_photons

            return intracavity_photons(dev, self.p_in, self.optical_detuning(dev))
        return 0.0

    def optical_detuning(self, dev):
        return dev.f_m if self.delta_o is None else float(self.delta_o)

    def microwave_frequency(self, dev):
        return dev.f_e if self.f_e_tuned is None else float(self.f_e_tuned)


@dataclass(frozen=True)
class DerivedRates:
    """Coupling and damping rates at one operating point (Hz)."""

    G_em: float
    G_om: float
    Gamma_em: float
    Gamma_om: float
    Gamma_i: float
    eta_e: float
    eta_o: float
    f_m: float
    f_e: float = None
    delta_o: float = None

    def __post_init__(self):
        for name in ("Gamma_em", "Gamma_om", "Gamma_i"):
            if getattr(self, name) < 0:
                raise UnphysicalInputError(f"{name} must be >= 0, got {getattr(self, name)!r}")
        for name in ("eta_e", "eta_o"):
            if not 0 <= getattr(self, name) <= 1:
                raise UnphysicalInputError(f"{name} must lie in [0, 1], got {getattr(self, name)!r}")
        if self.f_e is None:
            object.__setattr__(self, "f_e", self.f_m)
        if self.delta_o is None:
            object.__setattr__(self, "delta_o", self.f_m)

    @property
    def Gamma_tot(self):
        return self.Gamma_i + self.Gamma_em + self.Gamma_om

    @property
    def cooperativity_em(self):
        return self.Gamma_em / self.Gamma_i

    @property
    def cooperativity_om(self):
        return self.Gamma_om / self.Gamma_i

    @property
    def q_m(self):
        return self.f_m / self.Gamma_i

    def to_record(self, prefix="rates."):
        return {
            f"{prefix}G_em_Hz": self.G_em,
            f"{prefix}G_om_Hz": self.G_om,
            f"{prefix}Gamma_em_Hz": self.Gamma_em,
            f"{prefix}Gamma_om_Hz": self.Gamma_om,
            f"{prefix}Gamma_i_Hz": self.Gamma_i,
            f"{prefix}Gamma_tot_Hz": self.Gamma_tot,
            f"{prefix}eta_e": self.eta_e,
            f"{prefix}eta_o": self.eta_o,
        }


@dataclass(frozen=True)
class BathRates:
    """Bath occupancies and the rates that weight them."""

    n_e_int: float = 0.0
    n_f: float = 0.0
    n_p: float = 0.0
    Gamma_f: float = 0.0
    Gamma_p: float = 0.0
    kappa_e_int: float = 0.0
    kappa_e: float = 1.0

    def __post_init__(self):
        for f in fields(self):
            if getattr(self, f.name) < 0:
                raise UnphysicalInputError(f"{f.name} must be >= 0, got {getattr(self, f.name)!r}")
        if self.kappa_e <= 0 or self.kappa_e_int > self.kappa_e:
            raise UnphysicalInputError("need 0 <= kappa_e_int <= kappa_e and kappa_e > 0")

    @property
    def kappa_e_ext(self):
        return self.kappa_e - self.kappa_e_int

    @property
    def heating_rate(self):
        """Gamma_f * n_f + Gamma_p * n_p (quanta/s per 2pi)."""
        return self.Gamma_f * self.n_f + self.Gamma_p * self.n_p
