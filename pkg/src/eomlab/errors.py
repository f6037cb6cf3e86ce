"""Exception hierarchy.

Every error raised on purpose by eomlab derives from ``TransducerError`` so
callers (and the CLI) can catch one type and still report the specific class.
"""


class TransducerError(Exception):
    """Base class. ``error_class`` is the name printed by the CLI."""

    @property
    def error_class(self):
        return type(self).__name__


class DeclarationError(TransducerError, ValueError):
    """A mode, bath or coupling declaration is invalid."""

    def __init__(self, message, declaration=None):
        if declaration is not None:
            message = f"{message}: {declaration!r}"
        super().__init__(message)
        self.declaration = declaration


class UnknownLabelError(DeclarationError, KeyError):
    """Lookup of a mode, bath or port label that the network does not declare."""

    def __str__(self):
        return self.args[0]


class InstabilityError(TransducerError, ArithmeticError):
    """(-i*omega*I - A) is singular, or A has an eigenvalue with Re >= 0."""

    def __init__(self, message, frequency=None):
        if frequency is not None:
            message = f"{message} (at f = {frequency!r} Hz)"
        super().__init__(message)
        self.frequency = frequency


class ConvergenceError(TransducerError, RuntimeError):
    """A quadrature or optimizer did not converge."""

    def __init__(self, message, tail_estimate=None, iterations=None):
        super().__init__(message)
        self.tail_estimate = tail_estimate
        self.iterations = iterations


class FitError(ConvergenceError):
    """Lorentzian fit failed (too few points, flat data, FWHM not resolved)."""


class HotBathRangeError(TransducerError, ValueError):
    """Tabulated hot-bath model asked to extrapolate."""

    def __init__(self, n_c, lo, hi):
        super().__init__(f"n_c = {n_c!r} outside hot-bath table range [{lo!r}, {hi!r}]")
        self.n_c = n_c
        self.range = (lo, hi)


class UndefinedReferralError(TransducerError, ZeroDivisionError):
    """Noise referral with zero efficiency, zero Gamma_em or zero coherent power."""


class UnphysicalInputError(TransducerError, ValueError):
    """Inputs that would produce negative occupancies, rates or duty cycles."""


class ConfigError(TransducerError, ValueError):
    """Bad configuration file or sweep definition."""
