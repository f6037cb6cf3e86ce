"""Declarations a network is compiled from: modes, baths and couplings.

Frequencies and rates are ordinary frequencies in Hz.
"""
import math
from dataclasses import dataclass

from eomlab.errors import DeclarationError


@dataclass(frozen=True)
class ModeDecl:
    """A bosonic mode.

    ``frequency`` is the rotating-frame frequency on the diagonal of A: the
    lab frequency for microwave and mechanical modes, the detuning
    Delta_o for the optical mode.
    """

    label: str
    frequency: float

    def __post_init__(self):
        if not self.label:
            raise DeclarationError("mode label must be non-empty", self)
        if not math.isfinite(self.frequency) or self.frequency < 0:
            raise DeclarationError("mode frequency must be finite and >= 0", self)

    @classmethod
    def optical(cls, label, f_cavity, f_laser):
        """Optical mode from cavity and laser frequencies, stored as Delta_o = f_o - f_L."""
        return cls(label, f_cavity - f_laser)


@dataclass(frozen=True)
class BathDecl:
    """White thermal bath damping ``attached_mode`` at ``rate`` with mean ``occupancy``.

    Port baths appear both as inputs and outputs of the scattering matrix;
    the rest only inject noise.
    """

    label: str
    attached_mode: str
    rate: float
    occupancy: float = 0.0
    is_port: bool = False

    def __post_init__(self):
        if not self.label:
            raise DeclarationError("bath label must be non-empty", self)
        if not math.isfinite(self.rate) or self.rate < 0:
            raise DeclarationError("bath rate must be finite and >= 0", self)
        if not math.isfinite(self.occupancy) or self.occupancy < 0:
            raise DeclarationError("bath occupancy must be finite and >= 0", self)


@dataclass(frozen=True)
class CouplingDecl:
    """Beam-splitter coupling G between two modes."""

    mode_a: str
    mode_b: str
    rate: float

    def __post_init__(self):
        if self.mode_a == self.mode_b:
            raise DeclarationError("coupling must join two different modes", self)
        if not math.isfinite(self.rate):
            raise DeclarationError("coupling rate must be finite", self)
