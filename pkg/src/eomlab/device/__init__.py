from eomlab.device.assemble import BATH_LABELS, assemble, bath_rates, derive_rates
from eomlab.device.hot_bath import HotBathKind, HotBathModel
from eomlab.device.params import BathRates, DerivedRates, DeviceParams, OperatingPoint, reference_device
from eomlab.device.rates import (
    bose_occupation,
    coupling_rates,
    effective_temperature,
    intracavity_photons,
    mediated_damping,
    waveguide_power,
)

__all__ = [
    "BATH_LABELS",
    "BathRates",
    "DerivedRates",
    "DeviceParams",
    "HotBathKind",
    "HotBathModel",
    "OperatingPoint",
    "assemble",
    "bath_rates",
    "bose_occupation",
    "coupling_rates",
    "derive_rates",
    "effective_temperature",
    "intracavity_photons",
    "mediated_damping",
    "reference_device",
    "waveguide_power",
]
