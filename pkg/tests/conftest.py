import pytest

from eomlab.device import HotBathModel, OperatingPoint, reference_device


@pytest.fixture
def device():
    return reference_device()


@pytest.fixture
def max_bias_op():
    """Highest bias and pump of the measured device: 50 V, n_c = 232, cold baths."""
    return OperatingPoint(v_dc=50.0, n_c=232.0)


@pytest.fixture
def warm_op():
    """50 V, n_c = 232 with warm baths: n_e,int = 0.12, n_f = 0.3, Gamma_p = 446 Hz, n_p = 40."""
    return OperatingPoint(v_dc=50.0, n_c=232.0, n_f=0.3, n_e_int=0.12,
                          hot_bath=HotBathModel.constant(446.0, 40.0))


@pytest.fixture
def weak_op():
    """Deep weak coupling: Gamma_em / kappa_e ~ 1e-4, Gamma_om / kappa_o ~ 2e-7."""
    return OperatingPoint(v_dc=2.0, n_c=1.0, n_f=0.3, n_e_int=0.5,
                          hot_bath=HotBathModel.constant(300.0, 20.0))
