"""YAML run configuration.

One file describes the device, the operating point, the measurement chain
and whatever the chosen subcommand needs. Every section is checked against
the keys it accepts: unknown keys and missing required keys are errors.
Units are Hz, V, W, s and K throughout.
"""
import logging
import math
import os
from dataclasses import dataclass, field, fields, replace

import yaml

from eomlab.device import DeviceParams, HotBathModel, OperatingPoint, derive_rates, reference_device, waveguide_power
from eomlab.errors import ConfigError, TransducerError
from eomlab.lab import ChainGains
from eomlab.sweeps import ComparisonRow, SweepAxis, SweepConfig, ThroughputRecipe, linspace_axis

logger = logging.getLogger(__name__)

# --- CONFIG ---
DATA_DIR = os.path.join("data")
PROCESSED_DIR = os.path.join("data", "processed")
RECIPES_DIR = os.path.join("configs")

DEVICE_PRESETS = {"reference": reference_device}

SECTION_KEYS = {
    "spectrum": {"quantity", "output", "input", "mode", "ordering", "regime", "grid"},
    "fourport": {"probe_frequency", "off_resonance_linewidths", "target_eta_ext"},
    "thermometry": {"regime", "num", "span_linewidths", "noise"},
    "gaincal": {"temperatures", "g_a_db", "n_amp", "frequency", "f_if", "noise"},
    "sideband": {"n_m", "fwhm", "center", "num", "span_linewidths", "noise"},
    "compare": {"include_reference", "rows"},
}
TOP_LEVEL_KEYS = {"device", "operating_point", "chain", "sweep", "seed"} | set(SECTION_KEYS)

SECTION_CHOICES = {
    "spectrum": {
        "quantity": ("efficiency", "transfer", "flux_psd", "mode_psd", "optical_noise", "electrical_psd"),
        "ordering": ("normal", "antinormal"),
        "regime": ("general", "detuned", "on_resonance"),
    },
    "thermometry": {"regime": ("detuned", "on_resonance")},
}
SECTION_NUMBERS = {
    "fourport": {"probe_frequency", "off_resonance_linewidths", "target_eta_ext"},
    "thermometry": {"num", "span_linewidths", "noise"},
    "gaincal": {"g_a_db", "n_amp", "frequency", "f_if", "noise"},
    "sideband": {"n_m", "fwhm", "center", "num", "span_linewidths", "noise"},
}
POSITIVE_NUMBERS = {"num", "span_linewidths", "fwhm", "off_resonance_linewidths", "frequency", "f_if"}
GRID_KEYS = {"linewidths", "start", "stop", "num"}


@dataclass(frozen=True)
class RunConfig:
    device: DeviceParams  # None for device-independent commands (compare)
    op: OperatingPoint
    chain: ChainGains = field(default_factory=ChainGains)
    seed: int = 0
    sweep: SweepConfig = None
    sections: dict = field(default_factory=dict)

    def require_device(self):
        if self.device is None:
            raise ConfigError("this command needs a device section")
        return self.device

    def section(self, name):
        if name not in self.sections:
            raise ConfigError(f"config has no {name!r} section")
        return self.sections[name]

    def with_seed(self, seed):
        if seed is None:
            return self
        _check_seed(seed)
        sweep = replace(self.sweep, seed=seed) if self.sweep is not None else None
        return replace(self, seed=seed, sweep=sweep)


def _check_seed(seed):
    if not isinstance(seed, int) or isinstance(seed, bool) or seed < 0:
        raise ConfigError(f"seed must be a non-negative integer, got {seed!r}")


def _check(section, where, allowed, required=()):
    if not isinstance(section, dict):
        raise ConfigError(f"{where} must be a mapping, got {type(section).__name__}")
    unknown = sorted(set(section) - set(allowed))
    if unknown:
        raise ConfigError(f"unknown key(s) {unknown} in {where}; allowed: {sorted(allowed)}")
    missing = sorted(set(required) - set(section))
    if missing:
        raise ConfigError(f"missing key(s) {missing} in {where}")
    return section


def _build(factory, where, **kwargs):
    try:
        return factory(**kwargs)
    except TransducerError:
        raise
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"{where}: {exc}") from exc


def parse_device(section):
    names = {f.name for f in fields(DeviceParams)}
    _check(section, "device", names | {"preset"})
    if "preset" in section:
        preset = section["preset"]
        if preset not in DEVICE_PRESETS:
            raise ConfigError(f"unknown device preset {preset!r}; available: {sorted(DEVICE_PRESETS)}")
        overrides = {k: _number(v, f"device.{k}") for k, v in section.items() if k != "preset"}
        return replace(DEVICE_PRESETS[preset](), **overrides)
    _check(section, "device", names, required=names)
    return _build(DeviceParams, "device", **{k: _number(v, f"device.{k}") for k, v in section.items()})


def parse_hot_bath(section):
    _check(section, "operating_point.hot_bath",
           {"kind", "gamma_p0", "n_p0", "alpha", "beta", "table"}, required={"kind"})
    kwargs = {k: section[k] for k in ("kind", "gamma_p0", "n_p0", "alpha", "beta") if k in section}
    if "table" in section:
        table = _check(section["table"], "operating_point.hot_bath.table", {"n_c", "gamma_p", "n_p"},
                       required={"n_c", "gamma_p", "n_p"})
        kwargs.update(table_n_c=tuple(table["n_c"]), table_gamma_p=tuple(table["gamma_p"]),
                      table_n_p=tuple(table["n_p"]))
    return _build(HotBathModel, "operating_point.hot_bath", **kwargs)


def parse_operating_point(section, device):
    names = {f.name for f in fields(OperatingPoint)}
    _check(section, "operating_point", names | {"p_fiber"})
    kwargs = dict(section)
    if "p_fiber" in kwargs:
        if "p_in" in kwargs:
            raise ConfigError("operating_point: give p_in or p_fiber, not both")
        kwargs["p_in"] = waveguide_power(device, _number(kwargs.pop("p_fiber"), "operating_point.p_fiber"))
    if "hot_bath" in kwargs:
        kwargs["hot_bath"] = parse_hot_bath(kwargs["hot_bath"])
    return _build(OperatingPoint, "operating_point", **kwargs)


def parse_chain(section):
    return _build(ChainGains, "chain", **_check(section, "chain", {f.name for f in fields(ChainGains)}))


def parse_axis(section, device, op):
    where = "sweep.axes[]"
    _check(section, where, {"path", "values", "start", "stop", "num", "linewidths"}, required={"path"})
    path = section["path"]
    if "values" in section:
        return _build(SweepAxis, where, path=path, values=tuple(section["values"]))
    if "linewidths" in section:
        if path != "omega":
            raise ConfigError(f"{where}: 'linewidths' only applies to the omega axis")
        _check(section, where, {"path", "linewidths", "num"}, required={"num"})
        span = _number(section["linewidths"], where) * derive_rates(device, op).Gamma_tot
        return _build(linspace_axis, where, path=path, start=device.f_m - span, stop=device.f_m + span,
                      num=section["num"])
    _check(section, where, {"path", "start", "stop", "num"}, required={"start", "stop", "num"})
    return _build(linspace_axis, where, path=path, start=_number(section["start"], where),
                  stop=_number(section["stop"], where), num=section["num"])


def parse_sweep(section, device, op, chain, seed):
    _check(section, "sweep", {"axes", "outputs", "probe_frequency", "noise"}, required={"axes"})
    if not isinstance(section["axes"], list):
        raise ConfigError("sweep.axes must be a list")
    kwargs = dict(
        device=device,
        base_op=op,
        axes=tuple(parse_axis(a, device, op) for a in section["axes"]),
        chain=chain,
        seed=seed,
        probe_frequency=section.get("probe_frequency"),
        noise=section.get("noise", 0.0),
    )
    if "outputs" in section:
        kwargs["outputs"] = tuple(section["outputs"])
    return _build(SweepConfig, "sweep", **kwargs)


def parse_comparison_rows(rows):
    parsed = []
    for entry in rows:
        _check(entry, "compare.rows[]", {"label", "n_add", "throughput", "duty_cycle", "source_note", "recipe"},
               required={"label", "n_add", "throughput"})
        entry = dict(entry)
        if "recipe" in entry:
            recipe = _check(entry["recipe"], "compare.rows[].recipe", {f.name for f in fields(ThroughputRecipe)})
            recipe = dict(recipe)
            if "pulse_efficiency_factors" in recipe:
                recipe["pulse_efficiency_factors"] = tuple(recipe["pulse_efficiency_factors"])
            entry["recipe"] = _build(ThroughputRecipe, "compare.rows[].recipe", **recipe)
        parsed.append(_build(ComparisonRow, "compare.rows[]", **entry))
    return tuple(parsed)


def _number(value, where):
    if isinstance(value, bool):
        raise ConfigError(f"{where} must be a number, got {value!r}")
    try:
        number = float(value)
    except (TypeError, ValueError):
        raise ConfigError(f"{where} must be a number, got {value!r}") from None
    if not math.isfinite(number):
        raise ConfigError(f"{where} must be finite, got {value!r}")
    return number


def parse_grid(section):
    """Frequency grid of a spectrum section: linewidths/num or start/stop/num."""
    grid = _check(section, "spectrum.grid", GRID_KEYS)
    num = int(_number(grid.get("num", 201), "spectrum.grid.num"))
    if num < 2:
        raise ConfigError(f"spectrum.grid.num must be >= 2, got {num}")
    if "linewidths" in grid:
        if "start" in grid or "stop" in grid:
            raise ConfigError("spectrum.grid: give linewidths or start/stop, not both")
        linewidths = _number(grid["linewidths"], "spectrum.grid.linewidths")
        if not linewidths > 0:
            raise ConfigError(f"spectrum.grid.linewidths must be > 0, got {linewidths!r}")
        return {"linewidths": linewidths, "num": num}
    _check(grid, "spectrum.grid", GRID_KEYS, required={"start", "stop", "num"})
    start, stop = _number(grid["start"], "spectrum.grid.start"), _number(grid["stop"], "spectrum.grid.stop")
    if not start < stop:
        raise ConfigError(f"spectrum.grid needs start < stop, got start={start!r}, stop={stop!r}")
    return {"start": start, "stop": stop, "num": num}


def parse_section(name, section):
    section = dict(_check(section or {}, name, SECTION_KEYS[name]))
    for key, choices in SECTION_CHOICES.get(name, {}).items():
        if key in section and section[key] not in choices:
            raise ConfigError(f"{name}.{key} must be one of {list(choices)}, got {section[key]!r}")
    for key in SECTION_NUMBERS.get(name, set()) & set(section):
        section[key] = _number(section[key], f"{name}.{key}")
        if key in POSITIVE_NUMBERS and not section[key] > 0:
            raise ConfigError(f"{name}.{key} must be > 0, got {section[key]!r}")
    if name == "gaincal" and "temperatures" in section:
        if not isinstance(section["temperatures"], list):
            raise ConfigError("gaincal.temperatures must be a list")
        section["temperatures"] = tuple(_number(t, "gaincal.temperatures[]") for t in section["temperatures"])
    if name == "spectrum" and "grid" in section:
        section["grid"] = parse_grid(section["grid"])
    if name == "compare" and "rows" in section:
        section["rows"] = parse_comparison_rows(section["rows"])
    return section


def parse_config(mapping):
    """Build a RunConfig from an already-loaded mapping."""
    _check(mapping, "config", TOP_LEVEL_KEYS)
    device = parse_device(mapping["device"]) if "device" in mapping else None
    if device is None and ("operating_point" in mapping or "sweep" in mapping):
        raise ConfigError("operating_point and sweep need a device section")
    op = parse_operating_point(mapping.get("operating_point", {}), device) if device else OperatingPoint()
    chain = parse_chain(mapping.get("chain", {}))
    seed = mapping.get("seed", 0)
    _check_seed(seed)
    sweep = parse_sweep(mapping["sweep"], device, op, chain, seed) if "sweep" in mapping else None
    sections = {name: parse_section(name, mapping[name]) for name in SECTION_KEYS if name in mapping}
    return RunConfig(device=device, op=op, chain=chain, seed=seed, sweep=sweep, sections=sections)


def load_config(path):
    """Read and validate a YAML config file."""
    try:
        with open(path, encoding="utf-8") as handle:
            mapping = yaml.safe_load(handle)
    except FileNotFoundError:
        raise ConfigError(f"config file not found: {path}") from None
    except yaml.YAMLError as exc:
        raise ConfigError(f"could not parse {path}: {exc}") from exc
    logger.debug("loaded config %s", path)
    return parse_config(mapping or {})
