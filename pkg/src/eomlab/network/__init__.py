from eomlab.network.declarations import BathDecl, CouplingDecl, ModeDecl
from eomlab.network.spectra import Spectrum, SpectrumKind, mode_occupancy_numeric, mode_psd, output_flux_psd
from eomlab.network.state_space import (
    LinearSystem,
    build_system,
    check_passivity,
    internal_response,
    mode_resonances,
    transfer_matrices,
    transfer_matrix,
)

__all__ = [
    "BathDecl",
    "CouplingDecl",
    "LinearSystem",
    "ModeDecl",
    "Spectrum",
    "SpectrumKind",
    "build_system",
    "check_passivity",
    "internal_response",
    "mode_occupancy_numeric",
    "mode_psd",
    "mode_resonances",
    "output_flux_psd",
    "transfer_matrices",
    "transfer_matrix",
]
