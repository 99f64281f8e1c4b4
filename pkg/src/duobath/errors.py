"""Exception types raised by the library.

Every failure mode that callers are expected to handle gets its own class so
the CLI can map them onto per-row error columns and exit codes.
"""


class DuobathError(Exception):
    """Base class for all library errors."""


class Unstable(DuobathError):
    """Coupling exceeds the static stability bound |lambda| <= w01*w02*sqrt(M1*M2)."""


class OverdampedMode(DuobathError):
    """A squared normal-mode frequency is non-positive; the oscillatory
    propagator construction does not apply."""


class DegenerateRatios(DuobathError):
    """1 - r1*r2 vanishes and the mode-amplitude weights are singular."""


class CausticTime(DuobathError):
    """sin(Omega_k * t) vanishes at the requested time; endpoint weights are
    singular there and the time must be nudged."""


class QuadratureNonConvergence(DuobathError):
    """A quadrature failed to reach the requested tolerance within the
    refinement budget."""


class SingularAssembly(DuobathError):
    """A denominator in the exponent assembly chain vanished."""


class NonNormalizable(DuobathError):
    """The assembled quadratic form is not positive definite, so it does not
    describe a normalizable state."""


class NoConvergence(DuobathError):
    """Steady-state detection hit the time cap without the moments settling."""


class ConfigError(DuobathError):
    """Invalid configuration input (CLI / config file)."""
