"""Laser-power-dependent hot bath Gamma_p(n_c), n_p(n_c).

No microscopic law is assumed. Three phenomenological forms are offered:
a constant, a power law in n_c, and a linear interpolation table that
refuses to extrapolate.
"""
import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from eomlab.errors import HotBathRangeError, UnphysicalInputError


class HotBathKind(str, Enum):
    CONSTANT = "constant"
    POWER_LAW = "power_law"
    TABLE = "table"


@dataclass(frozen=True)
class HotBathModel:
    kind: HotBathKind = HotBathKind.CONSTANT
    gamma_p0: float = 0.0
    n_p0: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0
    table_n_c: tuple = ()
    table_gamma_p: tuple = ()
    table_n_p: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "kind", HotBathKind(self.kind))
        for name in ("gamma_p0", "n_p0", "alpha", "beta"):
            value = getattr(self, name)
            if not math.isfinite(value) or value < 0:
                raise UnphysicalInputError(f"hot bath {name} must be finite and >= 0, got {value!r}")
        if self.kind is HotBathKind.TABLE:
            n_c = np.asarray(self.table_n_c, dtype=float)
            if n_c.size < 2 or not (len(self.table_gamma_p) == len(self.table_n_p) == n_c.size):
                raise UnphysicalInputError("hot bath table needs >= 2 rows of equal length")
            if not np.all(np.diff(n_c) > 0):
                raise UnphysicalInputError("hot bath table n_c grid must be strictly increasing")
            if min(self.table_gamma_p) < 0 or min(self.table_n_p) < 0:
                raise UnphysicalInputError("hot bath table entries must be >= 0")
            for name in ("table_n_c", "table_gamma_p", "table_n_p"):
                object.__setattr__(self, name, tuple(float(x) for x in getattr(self, name)))

    @classmethod
    def constant(cls, gamma_p, n_p):
        return cls(HotBathKind.CONSTANT, gamma_p0=gamma_p, n_p0=n_p)

    @classmethod
    def power_law(cls, gamma_p0, n_p0, alpha, beta):
        """Gamma_p = gamma_p0 * n_c**alpha, n_p = n_p0 * n_c**beta."""
        return cls(HotBathKind.POWER_LAW, gamma_p0=gamma_p0, n_p0=n_p0, alpha=alpha, beta=beta)

    @classmethod
    def table(cls, n_c, gamma_p, n_p):
        return cls(HotBathKind.TABLE, table_n_c=tuple(n_c), table_gamma_p=tuple(gamma_p), table_n_p=tuple(n_p))

    def evaluate(self, n_c):
        """Return (Gamma_p in Hz, n_p) at intracavity photon number ``n_c``."""
        if self.kind is HotBathKind.CONSTANT:
            return self.gamma_p0, self.n_p0
        if self.kind is HotBathKind.POWER_LAW:
            return self.gamma_p0 * n_c ** self.alpha, self.n_p0 * n_c ** self.beta
        lo, hi = self.table_n_c[0], self.table_n_c[-1]
        if not lo <= n_c <= hi:
            raise HotBathRangeError(n_c, lo, hi)
        return (
            float(np.interp(n_c, self.table_n_c, self.table_gamma_p)),
            float(np.interp(n_c, self.table_n_c, self.table_n_p)),
        )
