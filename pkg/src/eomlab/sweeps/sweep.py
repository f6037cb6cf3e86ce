"""Cartesian parameter sweeps over operating points.

Rows come out in row-major order over the declared axes (the first axis
varies slowest) whether the points run serially or on a joblib pool.
"""
import itertools
import logging
import math
from dataclasses import dataclass, field, replace

import numpy as np
import pandas as pd
from joblib import Parallel, delayed

from eomlab.device import assemble, bath_rates
from eomlab.errors import ConfigError, UndefinedReferralError
from eomlab.lab.chain import ChainGains
from eomlab.lab.four_port import four_port_run
from eomlab.metrics import (
    added_noise_numeric,
    eta_ext_at,
    evaluate_point,
    occupancies,
    optical_output_noise,
)
from eomlab.network import transfer_matrix

logger = logging.getLogger(__name__)

# axis path -> (OperatingPoint field, input column); "omega" is the probe frequency
AXES = {
    "V_DC": ("v_dc", "input.V_DC_V"),
    "n_c": ("n_c", "input.n_c"),
    "Delta_o": ("delta_o", "input.Delta_o_Hz"),
    "omega_e_tuned": ("f_e_tuned", "input.omega_e_tuned_Hz"),
    "omega": (None, "input.omega_Hz"),
}

REPORT_OUTPUTS = {
    "eta_ext": "metrics.eta_ext",
    "eta_int": "metrics.eta_int",
    "bandwidth": "metrics.B_Hz",
    "n_mw": "metrics.n_mw",
    "n_m": "metrics.n_m",
    "n_add": "metrics.n_add",
    "throughput": "metrics.throughput_Hz",
}
EXTRA_OUTPUTS = {
    "n_m_simplified",
    "cooperativity",
    "eta_ext_at",
    "transfer_oe",
    "optical_noise",
    "n_add_numeric",
    "fourport",
}
OUTPUTS = frozenset(REPORT_OUTPUTS) | EXTRA_OUTPUTS


@dataclass(frozen=True)
class SweepAxis:
    path: str
    values: tuple

    def __post_init__(self):
        if self.path not in AXES:
            raise ConfigError(f"unresolvable sweep path {self.path!r}; supported: {sorted(AXES)}")
        values = tuple(float(v) for v in self.values)
        if not values:
            raise ConfigError(f"sweep axis {self.path!r} has no values")
        if not all(math.isfinite(v) for v in values) or any(b < a for a, b in zip(values, values[1:])):
            raise ConfigError(f"sweep axis {self.path!r} must be finite and sorted")
        object.__setattr__(self, "values", values)


@dataclass(frozen=True)
class SweepConfig:
    device: object
    base_op: object
    axes: tuple
    outputs: tuple = tuple(REPORT_OUTPUTS)
    chain: ChainGains = field(default_factory=ChainGains)
    seed: int = 0
    # probe frequency (Hz) for spectral outputs when no "omega" axis is swept; default f_m
    probe_frequency: float = None
    # relative measurement noise on the synthesized four-port readings
    noise: float = 0.0

    def __post_init__(self):
        if not self.axes:
            raise ConfigError("a sweep needs at least one axis")
        if not (math.isfinite(self.noise) and self.noise >= 0):
            raise ConfigError(f"sweep noise must be finite and >= 0, got {self.noise!r}")
        paths = [axis.path for axis in self.axes]
        if len(set(paths)) != len(paths):
            raise ConfigError(f"duplicate sweep axes: {paths}")
        unknown = set(self.outputs) - OUTPUTS
        if unknown:
            raise ConfigError(f"unknown sweep outputs {sorted(unknown)}; available: {sorted(OUTPUTS)}")
        object.__setattr__(self, "axes", tuple(self.axes))
        object.__setattr__(self, "outputs", tuple(self.outputs))


def _point(config, values):
    overrides, probe = {}, config.probe_frequency
    for axis, value in zip(config.axes, values):
        name = AXES[axis.path][0]
        if name is None:
            probe = value
        else:
            overrides[name] = value
    if "n_c" in overrides:
        overrides["p_in"] = None
    op = replace(config.base_op, **overrides)
    return op, config.device.f_m if probe is None else probe


def evaluate_row(config, values, index=0):
    """One table row: echoed inputs, derived rates and requested outputs.

    Noisy outputs draw from a generator seeded with (seed, index), so a row
    does not depend on which worker computes it.
    """
    dev = config.device
    op, probe = _point(config, values)
    row = {AXES[axis.path][1]: value for axis, value in zip(config.axes, values)}
    report = evaluate_point(dev, op)
    row.update(report.rates.to_record())
    record = report.to_record()
    for name in config.outputs:
        if name in REPORT_OUTPUTS:
            row[REPORT_OUTPUTS[name]] = record[REPORT_OUTPUTS[name]]

    wanted = set(config.outputs)
    rates, baths = report.rates, None
    if wanted & {"n_m_simplified", "optical_noise"}:
        baths = bath_rates(dev, op)
    if "n_m_simplified" in wanted:
        row["metrics.n_m_simplified"] = occupancies(rates, baths, simplified=True)[1]
    if "cooperativity" in wanted:
        row["metrics.C_em"] = rates.cooperativity_em
        row["metrics.C_om"] = rates.cooperativity_om
    if "eta_ext_at" in wanted:
        row["metrics.eta_ext_at_probe"] = float(eta_ext_at(rates, probe))
    if "optical_noise" in wanted:
        row["metrics.optical_noise_quanta"] = float(optical_output_noise(rates, baths, probe))
    if wanted & {"transfer_oe", "n_add_numeric", "fourport"}:
        system, _ = assemble(dev, op)
        if "transfer_oe" in wanted:
            xi = transfer_matrix(system, probe)
            row["metrics.transfer_oe_abs2"] = float(
                abs(xi[system.output_index("o_ext"), system.input_index("e_ext")]) ** 2
            )
        if "n_add_numeric" in wanted:
            try:
                row["metrics.n_add_numeric"] = added_noise_numeric(system, probe)
            except UndefinedReferralError:
                row["metrics.n_add_numeric"] = math.nan
        if "fourport" in wanted:
            row.update(_four_port_columns(config, system, probe, index))
    return row


def _four_port_columns(config, system, probe, index):
    columns = {"sweep.noise": config.noise, "sweep.seed": config.seed}
    rng = np.random.default_rng([config.seed, index])
    try:
        result = four_port_run(system, config.chain, probe, noise=config.noise, rng=rng)
    except UndefinedReferralError:
        return {"fourport.eta_ext_est": math.nan, "fourport.alpha_e_beta_o": math.nan, **columns}
    return {"fourport.eta_ext_est": result.eta_ext_est, "fourport.alpha_e_beta_o": result.alpha_e_beta_o, **columns}


def run_sweep(config, workers=1):
    """Evaluate every grid point of ``config``; returns a pandas DataFrame.

    ``workers`` follows joblib's n_jobs: 1 runs serially, -1 uses every core.
    """
    points = list(itertools.product(*(axis.values for axis in config.axes)))
    logger.info("sweep over %s: %d points on %d worker(s)", [a.path for a in config.axes], len(points), workers)
    if workers != 1:
        rows = Parallel(n_jobs=workers)(delayed(evaluate_row)(config, p, i) for i, p in enumerate(points))
    else:
        rows = [evaluate_row(config, p, i) for i, p in enumerate(points)]
    return pd.DataFrame.from_records(rows)


def linspace_axis(path, start, stop, num):
    return SweepAxis(path, tuple(np.linspace(start, stop, int(num)).tolist()))

