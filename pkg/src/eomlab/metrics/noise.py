"""Thermal occupancies and input-referred added noise."""
import numpy as np

from eomlab.errors import ConfigError, UndefinedReferralError
from eomlab.network import output_flux_psd, transfer_matrix


def occupancies(rates, baths, simplified=False):
    """(n_mw, n_m) in steady state.

    n_mw = kappa_e,int n_e,int / kappa_e. The mechanics equilibrates between
    its intrinsic baths and the microwave mode it is cooled into:
    n_m = (Gamma_em n_mw + Gamma_f n_f + Gamma_p n_p) / Gamma_tot.
    ``simplified=True`` drops the Gamma_em n_mw term.
    """
    n_mw = baths.kappa_e_int * baths.n_e_int / baths.kappa_e
    heating = baths.heating_rate
    if not simplified:
        heating = heating + rates.Gamma_em * n_mw
    return n_mw, heating / rates.Gamma_tot


def added_noise(rates, baths):
    """Input-referred added noise from bath parameters.

    (kappa_e,int / kappa_e,ext) n_e,int + (Gamma_f n_f + Gamma_p n_p) / (eta_e Gamma_em)
    """
    if rates.Gamma_em == 0:
        raise UndefinedReferralError("added noise is undefined without electromechanical damping (Gamma_em = 0)")
    return baths.kappa_e_int / baths.kappa_e_ext * baths.n_e_int + baths.heating_rate / (rates.eta_e * rates.Gamma_em)


def added_noise_from_occupancy(rates, n_m):
    """Input-referred added noise n_m Gamma_tot / (eta_e Gamma_em)."""
    if rates.Gamma_em == 0:
        raise UndefinedReferralError("added noise is undefined without electromechanical damping (Gamma_em = 0)")
    return n_m * rates.Gamma_tot / (rates.eta_e * rates.Gamma_em)


def optical_route(n_o_out, eta):
    """Refer optical output noise quanta to the microwave input."""
    if eta == 0:
        raise UndefinedReferralError("cannot refer noise through zero efficiency")
    return n_o_out / eta


def optical_output_noise(rates, baths, f):
    """Normal-ordered noise flux at the optical output port per unit bandwidth.

    eta_o Gamma_om / ((f_m - f)^2 + (Gamma_tot/2)^2)
        * (Gamma_em n_mw + Gamma_f n_f + Gamma_p n_p)
    """
    n_mw, _ = occupancies(rates, baths)
    lorentz = 1.0 / ((rates.f_m - np.asarray(f, dtype=float)) ** 2 + (rates.Gamma_tot / 2) ** 2)
    return rates.eta_o * rates.Gamma_om * lorentz * (rates.Gamma_em * n_mw + baths.heating_rate)


def added_noise_numeric(system, frequency, bath_occupancies=None, direction="up",
                        microwave_port="e_ext", optical_port="o_ext"):
    """Added noise read straight off the state-space model at ``frequency``.

    ``"up"`` refers the optical output noise through |xi_oe|^2, ``"down"``
    refers the microwave output noise through |xi_eo|^2.
    """
    if direction == "up":
        out_port, in_port = optical_port, microwave_port
    elif direction == "down":
        out_port, in_port = microwave_port, optical_port
    else:
        raise ConfigError(f"direction must be 'up' or 'down', got {direction!r}")
    xi = transfer_matrix(system, frequency)
    eta = abs(xi[system.output_index(out_port), system.input_index(in_port)]) ** 2
    if eta == 0:
        raise UndefinedReferralError(f"no transduction from {in_port!r} to {out_port!r} at f = {frequency!r} Hz")
    noise = output_flux_psd(system, bath_occupancies, out_port, [frequency]).values[0]
    return float(noise / eta)
