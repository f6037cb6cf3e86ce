import numpy as np
import pytest
from scipy.integrate import trapezoid

from eomlab.errors import FitError
from eomlab.lab import add_measurement_noise, extract_g_em, extract_g_om, lorentzian, lorentzian_fit
from eomlab.network import Spectrum, SpectrumKind

CENTER, FWHM = 5.0745e9, 88.9e3


def sampled(peak=1.0, offset=8.5, half_span=10, num=801, center=CENTER, fwhm=FWHM):
    f = np.linspace(center - half_span * fwhm, center + half_span * fwhm, num)
    return Spectrum(f, lorentzian(f, center, fwhm, peak, offset), SpectrumKind.SYMMETRIZED_PSD)


def test_exact_lorentzian_is_recovered():
    fit = lorentzian_fit(sampled())
    assert fit.center == pytest.approx(CENTER, abs=1e-6 * FWHM)
    assert fit.fwhm == pytest.approx(FWHM, rel=1e-8)
    assert fit.peak == pytest.approx(1.0, rel=1e-8)
    assert fit.offset == pytest.approx(8.5, rel=1e-10)
    assert fit.residual_rms < 1e-9


def test_dip_is_fitted_with_negative_peak():
    fit = lorentzian_fit(sampled(peak=-0.3, offset=2.0))
    assert fit.peak == pytest.approx(-0.3, rel=1e-8)
    assert fit.fwhm == pytest.approx(FWHM, rel=1e-8)


def test_fit_is_scale_free():
    fit = lorentzian_fit(sampled(center=0.0, fwhm=2.0, peak=3e-20, offset=1e-20))
    assert fit.fwhm == pytest.approx(2.0, rel=1e-8)
    assert fit.peak == pytest.approx(3e-20, rel=1e-8)


def test_area_matches_integral_of_the_line():
    fit = lorentzian_fit(sampled(half_span=2000, num=400001))
    f = np.linspace(CENTER - 2000 * FWHM, CENTER + 2000 * FWHM, 400001)
    assert fit.area == pytest.approx(trapezoid(fit(f) - fit.offset, f), rel=1e-3)
    assert fit.area == pytest.approx(np.pi * FWHM / 2, rel=1e-8)


def test_noisy_line_width():
    clean = sampled()
    noisy = Spectrum(clean.frequencies, add_measurement_noise(clean.values, 0.002, seed=42), clean.kind)
    fit = lorentzian_fit(noisy)
    assert fit.fwhm == pytest.approx(FWHM, rel=0.05)
    assert fit.center == pytest.approx(CENTER, abs=0.05 * FWHM)


def test_fit_failures():
    with pytest.raises(FitError, match="at least"):
        lorentzian_fit(sampled(num=4))
    flat = Spectrum(np.linspace(0.0, 1.0, 50), np.full(50, 3.0), SpectrumKind.FLUX_PSD)
    with pytest.raises(FitError, match="flat"):
        lorentzian_fit(flat)
    with pytest.raises(FitError, match="FWHM"):
        lorentzian_fit(sampled(half_span=0.4, num=101))


def test_record_keys():
    record = lorentzian_fit(sampled()).to_record()
    assert set(record) == {"fit.center_Hz", "fit.fwhm_Hz", "fit.peak", "fit.offset", "fit.residual_rms"}


def test_measurement_noise_is_seeded():
    values = np.linspace(1.0, 2.0, 10)
    np.testing.assert_array_equal(add_measurement_noise(values, 0.01, seed=3), add_measurement_noise(values, 0.01, seed=3))
    np.testing.assert_array_equal(add_measurement_noise(values, 0.0, seed=3), values)
    assert not np.array_equal(add_measurement_noise(values, 0.01, seed=3), add_measurement_noise(values, 0.01, seed=4))
    with pytest.raises(ValueError):
        add_measurement_noise(values, 0.01, relative_to="mean")


def test_electromechanical_coupling_from_linewidths(device):
    voltages = np.array([10.0, 20.0, 30.0, 40.0, 50.0])
    gamma_em = 4 * (device.g_em_per_volt * voltages) ** 2 / device.kappa_e
    assert extract_g_em(voltages, gamma_em, device.kappa_e) == pytest.approx(3.81e3, rel=1e-9)
    noisy = add_measurement_noise(gamma_em, 0.01, seed=5)
    assert extract_g_em(voltages, noisy, device.kappa_e) == pytest.approx(3.81e3, rel=0.01)
    with pytest.raises(FitError):
        extract_g_em([0.0, 0.0], [0.0, 0.0], device.kappa_e)


def test_optomechanical_coupling_from_pump_detuning(device):
    n_c, G2 = 50.0, device.g_om ** 2 * 50.0
    red = device.gamma_i_saturated + 4 * G2 / device.kappa_o
    resonant = device.gamma_i_saturated + G2 * device.kappa_o / (device.f_m ** 2 + (device.kappa_o / 2) ** 2)
    assert extract_g_om(red, resonant, n_c, device.kappa_o, device.f_m) == pytest.approx(343e3, rel=1e-9)
