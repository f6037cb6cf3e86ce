from eomlab.metrics.efficiency import (
    bandwidth,
    eta_ext,
    eta_ext_at,
    eta_int,
    pulse_efficiency,
    s_oe_analytic,
    s_oe_exact,
    throughput,
    tune_photons_for_efficiency,
)
from eomlab.metrics.noise import (
    added_noise,
    added_noise_from_occupancy,
    added_noise_numeric,
    occupancies,
    optical_output_noise,
    optical_route,
)
from eomlab.metrics.report import MetricsReport, evaluate_point

__all__ = [
    "MetricsReport",
    "added_noise",
    "added_noise_from_occupancy",
    "added_noise_numeric",
    "bandwidth",
    "eta_ext",
    "eta_ext_at",
    "eta_int",
    "evaluate_point",
    "occupancies",
    "optical_output_noise",
    "optical_route",
    "pulse_efficiency",
    "s_oe_analytic",
    "s_oe_exact",
    "throughput",
    "tune_photons_for_efficiency",
]
