"""Scalar figures of merit for one operating point."""
import math
from dataclasses import dataclass

from eomlab.device import bath_rates, derive_rates
from eomlab.errors import UndefinedReferralError
from eomlab.metrics.efficiency import bandwidth, eta_ext, eta_int, throughput
from eomlab.metrics.noise import added_noise, occupancies


@dataclass(frozen=True)
class MetricsReport:
    eta_ext: float
    eta_int: float
    bandwidth_hz: float
    n_mw: float
    n_m: float
    # None when the referral is undefined (Gamma_em = 0)
    n_add: float
    throughput_hz: float
    rates: object

    def to_record(self):
        record = {
            "metrics.eta_ext": self.eta_ext,
            "metrics.eta_int": self.eta_int,
            "metrics.B_Hz": self.bandwidth_hz,
            "metrics.n_mw": self.n_mw,
            "metrics.n_m": self.n_m,
            "metrics.n_add": math.nan if self.n_add is None else self.n_add,
            "metrics.throughput_Hz": self.throughput_hz,
        }
        record.update(self.rates.to_record())
        return record


def evaluate_point(dev, op):
    rates = derive_rates(dev, op)
    baths = bath_rates(dev, op)
    n_mw, n_m = occupancies(rates, baths)
    try:
        n_add = added_noise(rates, baths)
    except UndefinedReferralError:
        n_add = None
    eta = eta_ext(rates)
    return MetricsReport(
        eta_ext=eta,
        eta_int=eta_int(rates),
        bandwidth_hz=bandwidth(rates),
        n_mw=n_mw,
        n_m=n_m,
        n_add=n_add,
        throughput_hz=throughput(eta, bandwidth(rates), op.duty_cycle),
        rates=rates,
    )
