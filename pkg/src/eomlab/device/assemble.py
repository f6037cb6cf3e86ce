"""Build the three-mode network (microwave e, optics o, mechanics m) for an operating point."""
import logging

from eomlab.device.params import BathRates, DerivedRates
from eomlab.device.rates import coupling_rates, mediated_damping
from eomlab.network import BathDecl, CouplingDecl, ModeDecl, build_system

logger = logging.getLogger(__name__)

MICROWAVE, OPTICAL, MECHANICAL = "e", "o", "m"
E_EXT, E_INT, O_EXT, O_INT, FRIDGE, HOT = "e_ext", "e_int", "o_ext", "o_int", "f", "p"
BATH_LABELS = (E_EXT, E_INT, O_EXT, O_INT, FRIDGE, HOT)


def derive_rates(dev, op):
    """DerivedRates at ``op``. Gamma_i = Gamma_f + Gamma_p(n_c) with Gamma_f = Gamma_i,saturated."""
    n_c = op.photons(dev)
    G_em, G_om = coupling_rates(dev, op)
    f_e = op.microwave_frequency(dev)
    delta_o = op.optical_detuning(dev)
    gamma_p, _ = op.hot_bath.evaluate(n_c)
    return DerivedRates(
        G_em=G_em,
        G_om=G_om,
        Gamma_em=mediated_damping(G_em, dev.kappa_e, f_e - dev.f_m),
        Gamma_om=mediated_damping(G_om, dev.kappa_o, delta_o - dev.f_m),
        Gamma_i=dev.gamma_i_saturated + gamma_p,
        eta_e=dev.kappa_e_ext / dev.kappa_e,
        eta_o=dev.kappa_o_ext / dev.kappa_o,
        f_m=dev.f_m,
        f_e=f_e,
        delta_o=delta_o,
    )


def bath_rates(dev, op):
    gamma_p, n_p = op.hot_bath.evaluate(op.photons(dev))
    return BathRates(
        n_e_int=op.n_e_int,
        n_f=op.n_f,
        n_p=n_p,
        Gamma_f=dev.gamma_i_saturated,
        Gamma_p=gamma_p,
        kappa_e_int=dev.kappa_e_int,
        kappa_e=dev.kappa_e,
    )


def assemble(dev, op, ports=(E_EXT, O_EXT)):
    """Return (LinearSystem, DerivedRates) for the device at ``op``.

    ``ports`` selects which baths are scattering ports; pass ``BATH_LABELS``
    to promote all of them (unitarity checks). Only n_e,int, n_f and n_p
    are populated; the waveguide and optical intrinsic baths are cold.
    """
    rates = derive_rates(dev, op)
    baths = bath_rates(dev, op)
    modes = [
        ModeDecl(MICROWAVE, rates.f_e),
        ModeDecl(OPTICAL, rates.delta_o),
        ModeDecl(MECHANICAL, dev.f_m),
    ]
    couplings = [
        CouplingDecl(MICROWAVE, MECHANICAL, rates.G_em),
        CouplingDecl(OPTICAL, MECHANICAL, rates.G_om),
    ]
    decls = [
        BathDecl(E_EXT, MICROWAVE, dev.kappa_e_ext, 0.0, E_EXT in ports),
        BathDecl(E_INT, MICROWAVE, dev.kappa_e_int, baths.n_e_int, E_INT in ports),
        BathDecl(O_EXT, OPTICAL, dev.kappa_o_ext, 0.0, O_EXT in ports),
        BathDecl(O_INT, OPTICAL, dev.kappa_o_int, 0.0, O_INT in ports),
        BathDecl(FRIDGE, MECHANICAL, baths.Gamma_f, baths.n_f, FRIDGE in ports),
        BathDecl(HOT, MECHANICAL, baths.Gamma_p, baths.n_p, HOT in ports),
    ]
    logger.debug("assembled V_DC=%g V, n_c=%g: Gamma_tot=%g Hz", op.v_dc, op.photons(dev), rates.Gamma_tot)
    return build_system(modes, couplings, decls), rates
