"""Seeded Gaussian noise for synthetic measurements."""
import numpy as np

from eomlab.errors import ConfigError


def make_rng(seed=None, rng=None):
    return rng if rng is not None else np.random.default_rng(seed)


def add_measurement_noise(values, sigma, seed=None, rng=None, relative_to="sample"):
    """Return ``values`` with Gaussian noise of relative size ``sigma``.

    ``relative_to="sample"`` scales the noise by each sample's magnitude;
    ``"peak"`` uses one white level, sigma * max|values|.
    """
    values = np.asarray(values, dtype=float)
    if sigma == 0:
        return values.copy()
    draw = make_rng(seed, rng).standard_normal(values.shape)
    if relative_to == "sample":
        return values * (1.0 + sigma * draw)
    if relative_to == "peak":
        return values + sigma * np.max(np.abs(values)) * draw
    raise ConfigError(f"relative_to must be 'sample' or 'peak', got {relative_to!r}")
