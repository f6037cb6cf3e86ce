import numpy as np
import pytest

from eomlab.device import BATH_LABELS, OperatingPoint, assemble, derive_rates
from eomlab.errors import DeclarationError, InstabilityError, UnknownLabelError
from eomlab.metrics import eta_ext_at, s_oe_exact
from eomlab.network import (
    BathDecl,
    CouplingDecl,
    ModeDecl,
    build_system,
    check_passivity,
    mode_resonances,
    transfer_matrices,
    transfer_matrix,
)
from eomlab.network import state_space

TWO_PI = 2 * np.pi


def single_cavity(f0=1e6, kappa=1e3):
    return build_system([ModeDecl("a", f0)], [], [BathDecl("in", "a", kappa, is_port=True)])


def band(rates, half_width=5, num=201):
    return np.linspace(rates.f_m - half_width * rates.Gamma_tot, rates.f_m + half_width * rates.Gamma_tot, num)


def test_transducer_network_shapes(device, max_bias_op):
    system, _ = assemble(device, max_bias_op)
    assert system.A.shape == (6, 6)
    assert system.B.shape == (6, 12)
    assert system.C.shape == (4, 6)
    assert system.D.shape == (4, 12)
    assert system.output_port_labels == ("e_ext", "o_ext")
    assert system.input_port_labels == BATH_LABELS


def test_creation_block_is_conjugate_of_annihilation_block(device, max_bias_op):
    system, _ = assemble(device, max_bias_op)
    M = system.n_modes
    np.testing.assert_array_equal(system.A[M:, M:], system.A[:M, :M].conj())
    np.testing.assert_array_equal(system.A[:M, M:], 0)


def test_single_mode_matrix():
    system = single_cavity(f0=2e6, kappa=4e3)
    expected = np.diag([-(1j * TWO_PI * 2e6 + TWO_PI * 4e3 / 2), -(-1j * TWO_PI * 2e6 + TWO_PI * 4e3 / 2)])
    np.testing.assert_allclose(system.A, expected, rtol=1e-15)
    assert system.mode_frequency("a") == pytest.approx(2e6, rel=1e-15)
    assert system.mode_linewidth("a") == pytest.approx(4e3, rel=1e-12)


def test_lossless_cavity_reflects_everything():
    system = single_cavity()
    xi = transfer_matrix(system, 1e6)
    assert xi[0, 0] == pytest.approx(1.0, abs=1e-12)
    for f in (1e6 - 3e3, 1e6 + 250.0, 2e6):
        assert abs(transfer_matrix(system, f)[0, 0]) == pytest.approx(1.0, abs=1e-12)
    assert check_passivity(system, 1e6 + 123.0) < 1e-12


def test_decoupled_modes_do_not_transmit():
    system = build_system(
        [ModeDecl("a", 1e6), ModeDecl("b", 1e6)],
        [CouplingDecl("a", "b", 0.0)],
        [BathDecl("pa", "a", 1e3, is_port=True), BathDecl("pb", "b", 2e3, is_port=True)],
    )
    xi = transfer_matrices(system, np.linspace(0.9e6, 1.1e6, 11))
    np.testing.assert_array_equal(xi[:, 0, 1], 0)
    np.testing.assert_array_equal(xi[:, 1, 0], 0)


def test_zero_couplings_give_zero_conversion(device):
    system, _ = assemble(device, OperatingPoint())
    xi = transfer_matrices(system, np.linspace(device.f_m - 1e6, device.f_m + 1e6, 21))
    np.testing.assert_array_equal(xi[:, system.output_index("o_ext"), system.input_index("e_ext")], 0)


def test_state_space_matches_susceptibility_form(device, max_bias_op):
    system, rates = assemble(device, max_bias_op)
    f = band(rates)
    xi = transfer_matrices(system, f)[:, system.output_index("o_ext"), system.input_index("e_ext")]
    np.testing.assert_allclose(xi, s_oe_exact(rates, f, device.kappa_e, device.kappa_o), rtol=1e-9)


def test_state_space_matches_weak_coupling_lorentzian(device, weak_op):
    system, rates = assemble(device, weak_op)
    assert rates.Gamma_em / device.kappa_e < 5e-4
    f = band(rates)
    xi = transfer_matrices(system, f)[:, system.output_index("o_ext"), system.input_index("e_ext")]
    np.testing.assert_allclose(np.abs(xi) ** 2, eta_ext_at(rates, f), rtol=1e-3)


def test_conversion_is_exact_on_resonance_at_any_coupling(device, max_bias_op):
    system, rates = assemble(device, max_bias_op)
    xi = transfer_matrix(system, device.f_m)
    eta = abs(xi[system.output_index("o_ext"), system.input_index("e_ext")]) ** 2
    assert eta == pytest.approx(float(eta_ext_at(rates, device.f_m)), rel=1e-9)
    assert eta == pytest.approx(0.59, abs=0.005)


def test_all_ports_scatter_unitarily(device, warm_op):
    system, rates = assemble(device, warm_op, ports=BATH_LABELS)
    for f in band(rates, num=101):
        assert check_passivity(system, f) < 1e-10


def test_absorbing_bath_breaks_passivity(device, warm_op):
    system, _ = assemble(device, warm_op)
    assert check_passivity(system, device.f_m) > 1e-3


def test_conversion_is_reciprocal(device, warm_op):
    system, rates = assemble(device, warm_op)
    xi = transfer_matrices(system, band(rates, num=41))
    e, o = system.input_index("e_ext"), system.input_index("o_ext")
    oe = xi[:, system.output_index("o_ext"), e]
    eo = xi[:, system.output_index("e_ext"), o]
    np.testing.assert_allclose(np.abs(oe), np.abs(eo), rtol=1e-12)


def test_creation_block_of_xi_mirrors_negative_frequency(device, warm_op):
    system, _ = assemble(device, warm_op)
    f = device.f_m + 3.3e4
    Q, P = system.n_outputs, system.n_inputs
    plus, minus = transfer_matrices(system, [f, -f])
    np.testing.assert_allclose(plus[Q:, P:], minus[:Q, :P].conj(), rtol=1e-12, atol=1e-15)


def test_solve_chunking_does_not_change_results(device, warm_op, monkeypatch):
    system, rates = assemble(device, warm_op)
    f = band(rates, num=50)
    reference = transfer_matrices(system, f)
    monkeypatch.setattr(state_space, "SOLVE_CHUNK", 7)
    np.testing.assert_allclose(transfer_matrices(system, f), reference, rtol=1e-14, atol=0)
    np.testing.assert_array_equal(transfer_matrices(system, f), transfer_matrices(system, f))


def test_stable_system_eigenvalues(device, warm_op):
    system, _ = assemble(device, warm_op)
    assert system.is_stable
    assert np.max(system.eigenvalues.real) < 0


def test_undamped_mode_is_unstable():
    system = build_system([ModeDecl("a", 1e6)], [], [BathDecl("in", "a", 0.0, is_port=True)])
    assert not system.is_stable
    with pytest.raises(InstabilityError):
        transfer_matrix(system, 1e6)


def test_mode_resonances_single_cavity():
    centers, widths = mode_resonances(single_cavity(f0=3e6, kappa=5e3))
    assert centers[0] == pytest.approx(3e6, rel=1e-12)
    assert widths[0] == pytest.approx(5e3, rel=1e-9)


def test_mode_resonances_follow_hybridization(device, max_bias_op):
    system, rates = assemble(device, max_bias_op)
    _, widths = mode_resonances(system)
    # narrowest normal mode is the dressed mechanics
    assert min(widths) == pytest.approx(rates.Gamma_tot, rel=0.1)


@pytest.mark.parametrize(
    "modes, couplings, baths",
    [
        ([ModeDecl("a", 1.0), ModeDecl("a", 2.0)], [], []),
        ([ModeDecl("a", 1.0)], [], [BathDecl("x", "b", 1.0)]),
        ([ModeDecl("a", 1.0)], [CouplingDecl("a", "b", 1.0)], []),
        ([ModeDecl("a", 1.0)], [], [BathDecl("x", "a", 1.0), BathDecl("x", "a", 2.0)]),
    ],
)
def test_bad_declarations_are_rejected(modes, couplings, baths):
    with pytest.raises(DeclarationError):
        build_system(modes, couplings, baths)


def test_declaration_value_checks():
    with pytest.raises(DeclarationError, match="rate"):
        BathDecl("x", "a", -1.0)
    with pytest.raises(DeclarationError, match="frequency"):
        ModeDecl("a", float("nan"))
    with pytest.raises(DeclarationError):
        CouplingDecl("a", "a", 1.0)
    assert ModeDecl.optical("o", 192.9e12, 192.9e12 - 5e9).frequency == pytest.approx(5e9, rel=1e-6)


def test_unknown_port_label(device, warm_op):
    system, _ = assemble(device, warm_op)
    with pytest.raises(UnknownLabelError):
        system.output_index("e_int")
    with pytest.raises(KeyError):
        system.occupancy_vector({"nope": 1.0})


def test_default_occupancies_follow_operating_point(device, warm_op):
    system, _ = assemble(device, warm_op)
    n = system.occupancy_vector()
    assert n[system.input_index("e_int")] == 0.12
    assert n[system.input_index("f")] == 0.3
    assert n[system.input_index("p")] == 40.0
    assert derive_rates(device, warm_op).Gamma_i == pytest.approx(892.0 + 446.0)
