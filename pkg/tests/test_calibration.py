import numpy as np
import pytest

from eomlab.device import bath_rates, derive_rates
from eomlab.errors import FitError, UndefinedReferralError, UnphysicalInputError
from eomlab.lab import (
    ChainGains,
    gain_cal_temperature_sweep,
    optical_noise_referral,
    sideband_asymmetry,
    synthesize_optical_noise_measurement,
    synthesize_sideband_pair,
    synthesize_temperature_sweep,
    thermal_emission_gain,
    thermal_emission_power,
)
from eomlab.metrics import added_noise, eta_ext, optical_output_noise
from eomlab.network import Spectrum, SpectrumKind

F_E, F_O, F_IF = 5.0745e9, 192.9e12, 2000.0
TEMPERATURES = np.linspace(0.02, 1.0, 25)


def test_gain_calibration_noiseless():
    data = synthesize_temperature_sweep(TEMPERATURES, 56.59, 8.0, F_E, F_IF)
    cal = gain_cal_temperature_sweep(data, F_E, F_IF)
    assert cal.g_a_db == pytest.approx(56.59, abs=0.01)
    assert cal.n_amp == pytest.approx(8.0, rel=1e-6)


def test_gain_calibration_with_noise():
    data = synthesize_temperature_sweep(TEMPERATURES, 56.59, 8.0, F_E, F_IF, noise=0.01, seed=3)
    assert gain_cal_temperature_sweep(data, F_E, F_IF).g_a_db == pytest.approx(56.59, abs=0.3)


def test_gain_calibration_rejects_bad_data():
    data = synthesize_temperature_sweep([0.1, 0.1, 0.2], 50.0, 5.0, F_E, F_IF)
    with pytest.raises(FitError, match="3 distinct"):
        gain_cal_temperature_sweep(data, F_E, F_IF)
    with pytest.raises(UnphysicalInputError):
        gain_cal_temperature_sweep([(0.0, 1.0), (0.1, 2.0), (0.2, 3.0)], F_E, F_IF)
    with pytest.raises(ValueError):
        gain_cal_temperature_sweep([1.0, 2.0, 3.0], F_E, F_IF)


def test_sideband_asymmetry_recovers_occupancy():
    f = np.linspace(F_E - 10 * 90e3, F_E + 10 * 90e3, 8001)
    red, blue = synthesize_sideband_pair(1.81, F_E, 90e3, f)
    assert sideband_asymmetry(red, blue) == pytest.approx(1.81, rel=1e-9)
    red, blue = synthesize_sideband_pair(1.81, F_E, 90e3, f, noise=0.05, seed=11)
    assert sideband_asymmetry(red, blue) == pytest.approx(1.81, abs=0.35)


def test_sideband_asymmetry_rejects_bad_pairs():
    f = np.linspace(0.0, 10.0, 101)
    red, blue = synthesize_sideband_pair(1.0, 5.0, 1.0, f)
    with pytest.raises(UnphysicalInputError, match="grid"):
        sideband_asymmetry(red, Spectrum(f + 1.0, blue.values, SpectrumKind.FLUX_PSD))
    with pytest.raises(UnphysicalInputError):
        sideband_asymmetry(blue, red)


def test_thermal_emission_gain_inverts_power(device, warm_op):
    rates = derive_rates(device, warm_op)
    power = thermal_emission_power(55.83, 0.9, rates, F_E, n_mw=0.02)
    assert power > 0
    assert thermal_emission_gain(power, 0.9, rates, F_E, n_mw=0.02) == pytest.approx(55.83, rel=1e-12)
    with pytest.raises(UndefinedReferralError):
        thermal_emission_gain(power, 0.0, rates, F_E)


def test_optical_noise_referral_recovers_added_noise(device, warm_op):
    rates, baths = derive_rates(device, warm_op), bath_rates(device, warm_op)
    n_o_out = float(optical_output_noise(rates, baths, rates.f_m))
    eta = eta_ext(rates)
    expected = added_noise(rates, baths)
    chain = ChainGains(g_o_db=30.0, f_if=F_IF)

    clean = synthesize_optical_noise_measurement(n_o_out, eta, chain, 1e-15, device.f_o, device.f_e)
    assert optical_noise_referral(*clean, F_IF, device.f_o, device.f_e) == pytest.approx(expected, rel=1e-9)

    repeats = [
        optical_noise_referral(*synthesize_optical_noise_measurement(n_o_out, eta, chain, 1e-15, device.f_o,
                                                                     device.f_e, noise=0.01, seed=seed),
                               F_IF, device.f_o, device.f_e)
        for seed in range(20)
    ]
    assert np.mean(repeats) == pytest.approx(expected, rel=0.02)


def test_optical_noise_referral_at_the_quantum_point():
    chain = ChainGains(g_o_db=30.0, f_if=F_IF)
    clean = synthesize_optical_noise_measurement(0.94 * 0.022, 0.022, chain, 1e-15, F_O, F_E)
    assert optical_noise_referral(*clean, F_IF, F_O, F_E) == pytest.approx(0.94, rel=1e-12)
    with pytest.raises(UndefinedReferralError):
        optical_noise_referral(1e-18, 0.0, 1e-15, F_IF, F_O, F_E)
