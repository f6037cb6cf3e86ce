"""Command-line entry point: ``python -m eomlab <command> --config run.yaml``.

Every command writes one table (CSV by default) to ``--out`` or stdout.
Progress goes to stderr. On failure the last stderr line is a JSON object
naming the error class, and the exit code is 2 for configuration errors and
3 for any other modelling error.
"""
import argparse
import json
import logging
import sys
from dataclasses import replace

import numpy as np
import pandas as pd

from eomlab.config import load_config
from eomlab.device import assemble, bath_rates, derive_rates
from eomlab.errors import ConfigError, TransducerError
from eomlab.lab import (
    add_measurement_noise,
    electrical_psd,
    extract_mechanical_occupancy,
    extract_microwave_occupancy,
    four_port_run,
    gain_cal_temperature_sweep,
    sideband_asymmetry,
    synthesize_sideband_pair,
    synthesize_temperature_sweep,
)
from eomlab.metrics import (
    added_noise_from_occupancy,
    eta_ext_at,
    evaluate_point,
    occupancies,
    optical_output_noise,
    s_oe_exact,
    tune_photons_for_efficiency,
)
from eomlab.network import Spectrum, SpectrumKind, mode_psd, output_flux_psd, transfer_matrices
from eomlab.sweeps import REFERENCE_ROWS, comparison_report, run_sweep, to_text, write_table

logger = logging.getLogger(__name__)

COMMANDS = {
    "spectrum": "scattering elements or noise spectra over a frequency grid",
    "metrics": "figures of merit at one operating point",
    "sweep": "Cartesian sweep over operating-point axes",
    "fourport": "four-port efficiency measurement on the simulated device",
    "thermometry": "synthesize electrical noise spectra and extract occupancies",
    "gaincal": "temperature-sweep gain calibration on synthetic data",
    "sideband": "sideband-asymmetry thermometry on synthetic spectra",
    "compare": "throughput vs added-noise comparison table",
}


def _status(message):
    print(message, file=sys.stderr)


def _inputs(cfg):
    op = cfg.op
    return {
        "input.V_DC_V": op.v_dc,
        "input.n_c": op.photons(cfg.device),
        "input.Delta_o_Hz": op.optical_detuning(cfg.device),
        "input.omega_e_tuned_Hz": op.microwave_frequency(cfg.device),
    }


def _grid(section, center, linewidth):
    grid = section.get("grid", {"linewidths": 5.0, "num": 201})
    if "linewidths" in grid:
        span = grid["linewidths"] * linewidth
        return np.linspace(center - span, center + span, grid["num"])
    return np.linspace(grid["start"], grid["stop"], grid["num"])


def cmd_spectrum(cfg, args):
    dev = cfg.require_device()
    section = cfg.section("spectrum")
    system, rates = assemble(dev, cfg.op)
    f = _grid(section, dev.f_m, rates.Gamma_tot)
    quantity = section.get("quantity", "efficiency")
    if quantity == "efficiency":
        xi = transfer_matrices(system, f)[:, system.output_index("o_ext"), system.input_index("e_ext")]
        return pd.DataFrame({
            "frequency_Hz": f,
            "eta_weak_coupling": eta_ext_at(rates, f),
            "eta_exact": np.abs(s_oe_exact(rates, f, dev.kappa_e, dev.kappa_o)) ** 2,
            "eta_state_space": np.abs(xi) ** 2,
        })
    if quantity == "transfer":
        out, inp = section.get("output", "o_ext"), section.get("input", "e_ext")
        xi = transfer_matrices(system, f)[:, system.output_index(out), system.input_index(inp)]
        spectrum = Spectrum(f, xi, SpectrumKind.SCATTERING_AMPLITUDE)
    elif quantity == "flux_psd":
        spectrum = output_flux_psd(system, None, section.get("output", "o_ext"), f)
    elif quantity == "mode_psd":
        spectrum = mode_psd(system, None, section.get("mode", "m"), f, section.get("ordering", "normal"))
    elif quantity == "optical_noise":
        spectrum = Spectrum(f, optical_output_noise(rates, bath_rates(dev, cfg.op), f), SpectrumKind.FLUX_PSD)
    elif quantity == "electrical_psd":
        spectrum = electrical_psd(rates, bath_rates(dev, cfg.op), cfg.chain, f, section.get("regime", "general"))
    else:
        raise ConfigError(f"unknown spectrum quantity {quantity!r}")
    return spectrum.to_frame()


def cmd_metrics(cfg, args):
    report = evaluate_point(cfg.require_device(), cfg.op)
    return pd.DataFrame([{**_inputs(cfg), **report.to_record()}])


def cmd_sweep(cfg, args):
    if cfg.sweep is None:
        raise ConfigError("config has no 'sweep' section")
    return run_sweep(cfg.sweep, workers=args.workers)


def cmd_fourport(cfg, args):
    dev = cfg.require_device()
    section = cfg.sections.get("fourport", {})
    op = cfg.op
    if "target_eta_ext" in section:
        op = tune_photons_for_efficiency(dev, op, float(section["target_eta_ext"]))
    system, _ = assemble(dev, op)
    kwargs = {}
    if "off_resonance_linewidths" in section:
        kwargs["off_resonance_linewidths"] = float(section["off_resonance_linewidths"])
    result = four_port_run(system, cfg.chain, section.get("probe_frequency"), **kwargs)
    return pd.DataFrame([{"input.V_DC_V": op.v_dc, "input.n_c": op.photons(dev), **result.to_record()}])


def cmd_thermometry(cfg, args):
    dev = cfg.require_device()
    section = cfg.sections.get("thermometry", {})
    regime = section.get("regime", "on_resonance")
    num, span = int(section.get("num", 401)), float(section.get("span_linewidths", 10))
    noise = float(section.get("noise", 0.0))
    rng = np.random.default_rng(cfg.seed)
    rates, baths = derive_rates(dev, cfg.op), bath_rates(dev, cfg.op)
    true_n_mw, true_n_m = occupancies(rates, baths)

    # 1. Microwave resonator with the mechanics decoupled
    rates_off = derive_rates(dev, replace(cfg.op, v_dc=0.0))
    f_mw = np.linspace(rates_off.f_e - span * dev.kappa_e, rates_off.f_e + span * dev.kappa_e, num)
    mw = electrical_psd(rates_off, baths, cfg.chain, f_mw, "general")
    mw = Spectrum(f_mw, add_measurement_noise(mw.values, noise, rng=rng), mw.kind)
    n_e_int, n_mw = extract_microwave_occupancy(mw, cfg.chain, dev.kappa_e_ext, dev.kappa_e_int)

    # 2. Mechanical thermal emission at the operating point
    f_m = np.linspace(dev.f_m - span * rates.Gamma_tot, dev.f_m + span * rates.Gamma_tot, num)
    mech = electrical_psd(rates, baths, cfg.chain, f_m, regime)
    mech = Spectrum(f_m, add_measurement_noise(mech.values, noise, rng=rng), mech.kind)
    n_m = extract_mechanical_occupancy(mech, cfg.chain, rates, n_mw, regime)

    return pd.DataFrame([{
        **_inputs(cfg),
        "thermometry.regime": regime,
        "thermometry.noise": noise,
        "thermometry.seed": cfg.seed,
        "true.n_e_int": baths.n_e_int,
        "true.n_mw": true_n_mw,
        "true.n_m": true_n_m,
        "recovered.n_e_int": n_e_int,
        "recovered.n_mw": n_mw,
        "recovered.n_m": n_m,
        "recovered.n_add": added_noise_from_occupancy(rates, n_m),
    }])


def cmd_gaincal(cfg, args):
    section = cfg.section("gaincal")
    missing = {"temperatures", "g_a_db", "n_amp"} - set(section)
    if missing:
        raise ConfigError(f"gaincal section is missing {sorted(missing)}")
    if "frequency" in section:
        f = float(section["frequency"])
    else:
        f = cfg.require_device().f_e
    f_if = float(section.get("f_if", cfg.chain.f_if))
    noise = float(section.get("noise", 0.0))
    data = synthesize_temperature_sweep(section["temperatures"], float(section["g_a_db"]),
                                        float(section["n_amp"]), f, f_if, noise=noise, seed=cfg.seed)
    fit = gain_cal_temperature_sweep(data, f, f_if)
    return pd.DataFrame([{
        "gaincal.frequency_Hz": f,
        "gaincal.f_if_Hz": f_if,
        "gaincal.noise": noise,
        "gaincal.seed": cfg.seed,
        "true.g_a_db": float(section["g_a_db"]),
        "true.n_amp": float(section["n_amp"]),
        "recovered.g_a_db": fit.g_a_db,
        "recovered.n_amp": fit.n_amp,
    }])


def cmd_sideband(cfg, args):
    section = cfg.section("sideband")
    if "n_m" not in section:
        raise ConfigError("sideband section is missing 'n_m'")
    if "fwhm" in section and "center" in section:
        fwhm, center = float(section["fwhm"]), float(section["center"])
    else:
        dev = cfg.require_device()
        fwhm = float(section.get("fwhm", derive_rates(dev, cfg.op).Gamma_tot))
        center = float(section.get("center", dev.f_m))
    num, span = int(section.get("num", 2001)), float(section.get("span_linewidths", 10))
    noise = float(section.get("noise", 0.0))
    f = np.linspace(center - span * fwhm, center + span * fwhm, num)
    red, blue = synthesize_sideband_pair(float(section["n_m"]), center, fwhm, f, noise=noise, seed=cfg.seed)
    return pd.DataFrame([{
        "sideband.fwhm_Hz": fwhm,
        "sideband.noise": noise,
        "sideband.seed": cfg.seed,
        "true.n_m": float(section["n_m"]),
        "recovered.n_m": sideband_asymmetry(red, blue),
    }])


def cmd_compare(cfg, args):
    section = cfg.sections.get("compare", {})
    rows = REFERENCE_ROWS if section.get("include_reference", True) else ()
    return comparison_report(tuple(rows) + tuple(section.get("rows", ())))


HANDLERS = {
    "spectrum": cmd_spectrum,
    "metrics": cmd_metrics,
    "sweep": cmd_sweep,
    "fourport": cmd_fourport,
    "thermometry": cmd_thermometry,
    "gaincal": cmd_gaincal,
    "sideband": cmd_sideband,
    "compare": cmd_compare,
}


def build_parser():
    parser = argparse.ArgumentParser(prog="eomlab", description="Electro-optomechanical transducer simulator.")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    commands = parser.add_subparsers(dest="command", required=True)
    for name, help_text in COMMANDS.items():
        sub = commands.add_parser(name, help=help_text)
        sub.add_argument("--config", required=True, help="YAML run configuration")
        sub.add_argument("--out", help="output file (default: stdout)")
        sub.add_argument("--format", choices=("csv", "json"), default="csv")
        sub.add_argument("--workers", type=int, default=1, help="parallel workers for sweeps (-1: all cores)")
        sub.add_argument("--seed", type=int, help="override the config seed")
    return parser


def _fail(exc, code):
    _status(f"❌ {exc.error_class}: {exc}")
    print(json.dumps({"error": exc.error_class, "message": str(exc)}), file=sys.stderr)
    return code


def main(argv=None):
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    try:
        _status(f"⏳ Loading {args.config}...")
        cfg = load_config(args.config).with_seed(args.seed)
        _status(f"🔬 Running {args.command}...")
        frame = HANDLERS[args.command](cfg, args)
    except ConfigError as exc:
        return _fail(exc, 2)
    except TransducerError as exc:
        return _fail(exc, 3)

    if args.out:
        write_table(frame, args.out, args.format)
        _status(f"💾 Saved {len(frame)} row(s) to {args.out}")
    else:
        sys.stdout.write(to_text(frame, args.format))
    _status(f"✅ {args.command} complete.")
    return 0
