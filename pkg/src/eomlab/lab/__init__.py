from eomlab.lab.chain import ChainGains
from eomlab.lab.coupling_extraction import extract_g_em, extract_g_om
from eomlab.lab.fitting import LorentzianFit, lorentzian, lorentzian_fit
from eomlab.lab.four_port import FourPortResult, efficiency_from_transmittance, four_port_run
from eomlab.lab.gain_cal import (
    GainCalibration,
    gain_cal_temperature_sweep,
    gain_sweep_power,
    synthesize_temperature_sweep,
)
from eomlab.lab.measurement_noise import add_measurement_noise
from eomlab.lab.optical_noise import (
    OpticalNoiseMeasurement,
    optical_noise_referral,
    synthesize_optical_noise_measurement,
)
from eomlab.lab.sideband import (
    sideband_asymmetry,
    synthesize_sideband_pair,
    thermal_emission_gain,
    thermal_emission_power,
)
from eomlab.lab.thermometry import (
    electrical_psd,
    extract_mechanical_occupancy,
    extract_microwave_occupancy,
    squash_term,
)

__all__ = [
    "ChainGains",
    "FourPortResult",
    "GainCalibration",
    "LorentzianFit",
    "OpticalNoiseMeasurement",
    "add_measurement_noise",
    "efficiency_from_transmittance",
    "electrical_psd",
    "extract_g_em",
    "extract_g_om",
    "extract_mechanical_occupancy",
    "extract_microwave_occupancy",
    "four_port_run",
    "gain_cal_temperature_sweep",
    "gain_sweep_power",
    "lorentzian",
    "lorentzian_fit",
    "optical_noise_referral",
    "sideband_asymmetry",
    "squash_term",
    "synthesize_optical_noise_measurement",
    "synthesize_sideband_pair",
    "synthesize_temperature_sweep",
    "thermal_emission_gain",
    "thermal_emission_power",
]
