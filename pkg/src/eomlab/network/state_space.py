"""Compile declared modes, baths and couplings into a state-space model.

Doubled basis: ``[a_1..a_M, a_1^dag..a_M^dag]``. Input ports are all baths in
declared order followed by their daggered copies; output ports are the
``is_port`` baths in declared order followed by their daggered copies.

    d/dt a = A a + B a_in
    a_out  = C a + D a_in
    xi(f)  = C (-i w I - A)^-1 B + D,   w = 2 pi f
"""
import logging
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType

import numpy as np

from eomlab.constants import TWO_PI
from eomlab.errors import DeclarationError, InstabilityError, UnknownLabelError

logger = logging.getLogger(__name__)

# frequencies per batched solve; results do not depend on it
SOLVE_CHUNK = 2048


def _frozen(arr):
    arr = np.array(arr, dtype=complex)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class LinearSystem:
    """Compiled state-space model. Immutable; safe to share between workers."""

    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    D: np.ndarray
    mode_labels: tuple
    input_port_labels: tuple
    output_port_labels: tuple
    # per input bath, in input order
    bath_modes: tuple = ()
    bath_rates: tuple = ()
    # declared occupancies, used when callers pass none
    default_occupancies: MappingProxyType = field(default_factory=lambda: MappingProxyType({}))

    @property
    def n_modes(self):
        return len(self.mode_labels)

    @property
    def n_inputs(self):
        return len(self.input_port_labels)

    @property
    def n_outputs(self):
        return len(self.output_port_labels)

    def mode_index(self, label):
        return _index(self.mode_labels, label, "mode")

    def input_index(self, label):
        return _index(self.input_port_labels, label, "bath")

    def output_index(self, label):
        return _index(self.output_port_labels, label, "output port")

    def mode_frequency(self, label):
        """Bare (uncoupled) frequency of a mode, Hz."""
        j = self.mode_index(label)
        return float(-self.A[j, j].imag / TWO_PI)

    def mode_linewidth(self, label):
        """Total bath damping of a mode (FWHM), Hz."""
        j = self.mode_index(label)
        return float(-2.0 * self.A[j, j].real / TWO_PI)

    @cached_property
    def eigenvalues(self):
        return np.linalg.eigvals(np.asarray(self.A))

    @property
    def is_stable(self):
        return bool(np.max(self.eigenvalues.real) < 0)

    def occupancy_vector(self, bath_occupancies=None):
        """Occupancy per input bath; labels missing from the map count as 0."""
        if bath_occupancies is None:
            bath_occupancies = self.default_occupancies
        for label in bath_occupancies:
            self.input_index(label)
        return np.array([float(bath_occupancies.get(label, 0.0)) for label in self.input_port_labels])


def _index(labels, label, what):
    try:
        return labels.index(label)
    except ValueError:
        raise UnknownLabelError(f"unknown {what} {label!r}; declared: {list(labels)}") from None


def build_system(modes, couplings, baths):
    """Compile declarations into a LinearSystem.

    Parameters
    ----------
    modes : list of ModeDecl
    couplings : list of CouplingDecl
    baths : list of BathDecl
        Declaration order fixes matrix layout.
    """
    mode_labels = tuple(m.label for m in modes)
    if len(set(mode_labels)) != len(mode_labels):
        dup = next(m for i, m in enumerate(modes) if m.label in mode_labels[:i])
        raise DeclarationError("duplicate mode label", dup)
    bath_labels = tuple(b.label for b in baths)
    if len(set(bath_labels)) != len(bath_labels):
        dup = next(b for i, b in enumerate(baths) if b.label in bath_labels[:i])
        raise DeclarationError("duplicate bath label", dup)
    index = {label: j for j, label in enumerate(mode_labels)}
    for bath in baths:
        if bath.attached_mode not in index:
            raise DeclarationError("bath attached to undeclared mode", bath)
    for coupling in couplings:
        if coupling.mode_a not in index or coupling.mode_b not in index:
            raise DeclarationError("coupling references undeclared mode", coupling)

    M, P = len(modes), len(baths)
    ports = [k for k, b in enumerate(baths) if b.is_port]
    Q = len(ports)

    damping = np.zeros(M)
    for bath in baths:
        damping[index[bath.attached_mode]] += TWO_PI * bath.rate

    A = np.zeros((2 * M, 2 * M), dtype=complex)
    for j, mode in enumerate(modes):
        w = TWO_PI * mode.frequency
        A[j, j] = -(1j * w + damping[j] / 2)
        A[M + j, M + j] = -(-1j * w + damping[j] / 2)
    for coupling in couplings:
        a, b = index[coupling.mode_a], index[coupling.mode_b]
        g = TWO_PI * coupling.rate
        A[a, b] += -1j * g
        A[b, a] += -1j * g
        A[M + a, M + b] += 1j * g
        A[M + b, M + a] += 1j * g

    B = np.zeros((2 * M, 2 * P), dtype=complex)
    for k, bath in enumerate(baths):
        j = index[bath.attached_mode]
        B[j, k] = B[M + j, P + k] = np.sqrt(TWO_PI * bath.rate)

    C = np.zeros((2 * Q, 2 * M), dtype=complex)
    D = np.zeros((2 * Q, 2 * P), dtype=complex)
    for p, k in enumerate(ports):
        j = index[baths[k].attached_mode]
        C[p, j] = C[Q + p, M + j] = np.sqrt(TWO_PI * baths[k].rate)
        D[p, k] = D[Q + p, P + k] = -1.0

    logger.debug("built system: %d modes, %d baths, %d ports", M, P, Q)
    return LinearSystem(
        A=_frozen(A),
        B=_frozen(B),
        C=_frozen(C),
        D=_frozen(D),
        mode_labels=mode_labels,
        input_port_labels=bath_labels,
        output_port_labels=tuple(bath_labels[k] for k in ports),
        bath_modes=tuple(b.attached_mode for b in baths),
        bath_rates=tuple(float(b.rate) for b in baths),
        default_occupancies=MappingProxyType({b.label: float(b.occupancy) for b in baths}),
    )


def _check_stable(system):
    if not system.is_stable:
        worst = float(np.max(system.eigenvalues.real))
        raise InstabilityError(f"system is not stable: max Re eig(A) = {worst!r}")


def _solve(system, frequencies, rhs):
    """(-i w I - A)^-1 rhs for every frequency, batched in fixed chunks."""
    n = 2 * system.n_modes
    eye = np.eye(n)
    A = np.asarray(system.A)
    out = np.empty((len(frequencies), n, rhs.shape[1]), dtype=complex)
    for start in range(0, len(frequencies), SOLVE_CHUNK):
        f = frequencies[start:start + SOLVE_CHUNK]
        w = TWO_PI * f
        K = -1j * w[:, None, None] * eye - A
        try:
            out[start:start + len(f)] = np.linalg.solve(K, np.broadcast_to(rhs, (len(f),) + rhs.shape))
        except np.linalg.LinAlgError:
            for fk, Kk in zip(f, K):
                try:
                    np.linalg.solve(Kk, rhs)
                except np.linalg.LinAlgError:
                    raise InstabilityError("(-i w I - A) is singular", float(fk)) from None
            raise
    return out


def internal_response(system, frequencies):
    """X(f) = (-i w I - A)^-1 B, shape (N, 2M, 2P_in)."""
    _check_stable(system)
    frequencies = np.atleast_1d(np.asarray(frequencies, dtype=float))
    return _solve(system, frequencies, np.asarray(system.B))


def transfer_matrices(system, frequencies):
    """xi(f) on a grid, shape (N, 2P_out, 2P_in)."""
    X = internal_response(system, frequencies)
    return np.asarray(system.C) @ X + np.asarray(system.D)


def transfer_matrix(system, frequency):
    """Scattering matrix xi at one frequency (Hz), shape (2P_out, 2P_in)."""
    return transfer_matrices(system, [frequency])[0]


def check_passivity(system, frequency):
    """Largest deviation from unitarity of the annihilation block of xi.

    Returns max(|xi xi^dag - I|, |xi^dag xi - I|). When some bath is not a
    port the second term exposes the flux it absorbs.
    """
    xi = transfer_matrix(system, frequency)[: system.n_outputs, : system.n_inputs]
    rows = np.abs(xi @ xi.conj().T - np.eye(system.n_outputs)).max(initial=0.0)
    cols = np.abs(xi.conj().T @ xi - np.eye(system.n_inputs)).max(initial=0.0)
    return float(max(rows, cols))


def mode_resonances(system):
    """(center frequency, FWHM) in Hz for each normal mode, sorted by center."""
    M = system.n_modes
    lam = np.linalg.eigvals(np.asarray(system.A)[:M, :M])
    centers = -lam.imag / TWO_PI
    widths = -2.0 * lam.real / TWO_PI
    order = np.argsort(centers, kind="stable")
    return centers[order], widths[order]
