import math
from dataclasses import replace

import numpy as np
import pandas as pd
import pytest

from eomlab.device import HotBathModel, OperatingPoint, assemble
from eomlab.errors import ConfigError
from eomlab.lab import ChainGains, four_port_run
from eomlab.sweeps import (
    REFERENCE_ROWS,
    ComparisonRow,
    SweepAxis,
    SweepConfig,
    ThroughputRecipe,
    comparison_report,
    linspace_axis,
    read_table,
    run_sweep,
    to_text,
    write_table,
)


@pytest.fixture
def cooling_op():
    return OperatingPoint(n_c=2.3, n_f=0.3, n_e_int=0.5, hot_bath=HotBathModel.constant(300.0, 20.0))


def test_rows_come_out_row_major(device, cooling_op):
    config = SweepConfig(device, cooling_op, (SweepAxis("n_c", (1.0, 2.0, 5.0)), SweepAxis("V_DC", (20.0, 50.0))))
    frame = run_sweep(config)
    assert frame["input.n_c"].tolist() == [1.0, 1.0, 2.0, 2.0, 5.0, 5.0]
    assert frame["input.V_DC_V"].tolist() == [20.0, 50.0] * 3
    assert {"metrics.eta_ext", "metrics.n_add", "rates.Gamma_tot_Hz"} <= set(frame.columns)


def test_single_point_axis(device, cooling_op):
    frame = run_sweep(SweepConfig(device, cooling_op, (SweepAxis("V_DC", (50.0,)),), outputs=("eta_ext",)))
    assert len(frame) == 1
    assert "metrics.n_add" not in frame.columns


def test_sweeps_are_deterministic_and_parallel_safe(device, cooling_op):
    config = SweepConfig(device, cooling_op, (linspace_axis("V_DC", 10.0, 50.0, 5), SweepAxis("n_c", (1.0, 4.0))),
                         outputs=("eta_ext", "n_m", "transfer_oe", "n_add_numeric"))
    serial = run_sweep(config)
    pd.testing.assert_frame_equal(serial, run_sweep(config))
    pd.testing.assert_frame_equal(serial, run_sweep(config, workers=2))


def test_probe_frequency_axis(device):
    base = OperatingPoint(v_dc=50.0, n_c=232.0)
    axis = linspace_axis("omega", device.f_m - 1e5, device.f_m + 1e5, 5)
    frame = run_sweep(SweepConfig(device, base, (axis,), outputs=("eta_ext_at", "transfer_oe")))
    assert frame["metrics.eta_ext_at_probe"].idxmax() == 2
    assert frame["metrics.transfer_oe_abs2"].iloc[2] == pytest.approx(frame["metrics.eta_ext_at_probe"].iloc[2],
                                                                     rel=1e-9)


def test_swept_photon_number_replaces_pump_power(device):
    base = OperatingPoint(v_dc=50.0, p_in=3.3e-6)
    frame = run_sweep(SweepConfig(device, base, (SweepAxis("n_c", (10.0,)),), outputs=("eta_ext",)))
    assert frame["input.n_c"].iloc[0] == 10.0


def test_added_noise_is_nan_without_bias(device, cooling_op):
    frame = run_sweep(SweepConfig(device, cooling_op, (SweepAxis("V_DC", (0.0, 10.0)),),
                                  outputs=("n_add", "n_add_numeric")))
    assert math.isnan(frame["metrics.n_add"].iloc[0])
    assert math.isnan(frame["metrics.n_add_numeric"].iloc[0])
    assert frame["metrics.n_add"].iloc[1] > 0


@pytest.mark.parametrize(
    "hot_bath",
    [
        HotBathModel.constant(300.0, 20.0),
        HotBathModel.power_law(130.0, 20.0, 1.0, 0.0),
        HotBathModel.power_law(100.0, 10.0, 1.0, 0.5),
        HotBathModel.table((1.0, 4.0), (200.0, 500.0), (10.0, 25.0)),
    ],
    ids=["constant", "linear", "power_law", "table"],
)
def test_bias_cools_mechanics_into_ground_state(device, hot_bath):
    op = OperatingPoint(n_c=2.3, n_f=0.3, n_e_int=0.5, hot_bath=hot_bath)
    config = SweepConfig(device, op, (linspace_axis("V_DC", 0.0, 50.0, 11),),
                         outputs=("n_mw", "n_m", "n_m_simplified", "cooperativity"))
    frame = run_sweep(config)
    n_m = frame["metrics.n_m"].to_numpy()
    assert np.all(np.diff(n_m) < 0)
    assert n_m[0] > 1 > n_m[-1]
    assert np.all(frame["metrics.n_m_simplified"] <= frame["metrics.n_m"])
    assert frame["metrics.C_em"].iloc[0] == 0.0


@pytest.mark.parametrize(
    "make",
    [
        lambda: SweepAxis("V_AC", (1.0,)),
        lambda: SweepAxis("V_DC", ()),
        lambda: SweepAxis("V_DC", (2.0, 1.0)),
        lambda: SweepAxis("n_c", (1.0, float("nan"))),
    ],
)
def test_bad_axes(make):
    with pytest.raises(ConfigError):
        make()


def test_bad_sweep_configs(device, cooling_op):
    axis = SweepAxis("V_DC", (1.0,))
    with pytest.raises(ConfigError, match="at least one axis"):
        SweepConfig(device, cooling_op, ())
    with pytest.raises(ConfigError, match="duplicate"):
        SweepConfig(device, cooling_op, (axis, axis))
    with pytest.raises(ConfigError, match="unknown sweep outputs"):
        SweepConfig(device, cooling_op, (axis,), outputs=("eta_ext", "fidelity"))


def test_reference_comparison_table():
    report = comparison_report()
    assert len(report) == len(REFERENCE_ROWS)
    assert not report["mismatch"].any()
    undeclared = report[~report["derivable"]]
    assert undeclared["label"].tolist() == ["this device, n_add 0.58"]
    recomputed = report.set_index("label")["recomputed_throughput_Hz"]
    assert recomputed["Nat. Commun. 2022"] == pytest.approx(5.4)
    assert recomputed["this device, n_add 0.94"] == pytest.approx(1955.8)
    assert report["quantum_enabled"].sum() == 5


def test_comparison_flags_mismatch():
    row = ComparisonRow("bad", 1.2, 100.0, recipe=ThroughputRecipe(eta_ext=0.5, bandwidth_hz=1e3))
    report = comparison_report((row,))
    assert report["mismatch"].iloc[0]
    assert report["relative_deviation"].iloc[0] == pytest.approx(4.0)


def test_csv_keeps_full_precision(tmp_path):
    frame = pd.DataFrame({"x": [1 / 3, math.nan], "label": ["a", "b"]})
    text = to_text(frame)
    assert "0.33333333333333331" in text
    path = tmp_path / "out" / "table.csv"
    write_table(frame, str(path))
    back = read_table(str(path))
    assert back["x"].iloc[0] == 1 / 3
    assert math.isnan(back["x"].iloc[1])


def test_json_output_replaces_nan():
    text = to_text(pd.DataFrame({"x": [1.0, math.nan]}), fmt="json")
    assert '"x": null' in text
    with pytest.raises(ValueError):
        to_text(pd.DataFrame({"x": [1.0]}), fmt="xlsx")


def test_four_port_output_matches_direct_run(device):
    chain = ChainGains(alpha_e=0.1, beta_e=398107.17, alpha_o=0.3, beta_o=2.0)
    base = OperatingPoint(v_dc=50.0)
    frame = run_sweep(SweepConfig(device, base, (SweepAxis("n_c", (10.0, 232.0)),), outputs=("fourport",),
                                  chain=chain))
    system, _ = assemble(device, replace(base, n_c=232.0))
    direct = four_port_run(system, chain, device.f_m)
    assert frame["fourport.eta_ext_est"].iloc[1] == direct.eta_ext_est
    assert frame["fourport.alpha_e_beta_o"].iloc[1] == direct.alpha_e_beta_o


def test_noisy_four_port_rows_are_seeded_per_point(device):
    base = OperatingPoint(v_dc=50.0)
    axis = SweepAxis("n_c", (50.0, 100.0, 232.0))
    config = SweepConfig(device, base, (axis,), outputs=("eta_ext", "fourport"), seed=5, noise=0.01)
    serial = run_sweep(config)
    pd.testing.assert_frame_equal(serial, run_sweep(config, workers=2))
    assert serial["sweep.seed"].tolist() == [5, 5, 5]
    estimate, truth = serial["fourport.eta_ext_est"], serial["metrics.eta_ext"]
    assert not np.allclose(estimate, truth, rtol=1e-6)
    np.testing.assert_allclose(estimate, truth, rtol=0.05)
    reseeded = run_sweep(replace(config, seed=6))
    assert not np.array_equal(reseeded["fourport.eta_ext_est"], estimate)


def test_sweep_noise_must_be_non_negative(device, cooling_op):
    with pytest.raises(ConfigError, match="noise"):
        SweepConfig(device, cooling_op, (SweepAxis("V_DC", (1.0,)),), noise=-0.1)
