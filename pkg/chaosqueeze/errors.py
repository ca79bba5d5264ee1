"""
Exceptions raised by the simulator. Every class carries the exit code used by the command line interface.
"""

from chaosqueeze.object import Tau


class ChaosqueezeError(Exception):
    exit_code = 1


class NonFiniteState(ChaosqueezeError):
    """The integrated state left the finite floating point range (blow-up or overflow)."""

    def __init__(self, tau: Tau, component: str):
        super().__init__(f"non-finite `{component}` at tau={tau!r}.")
        self.tau = tau
        self.component = component


class InvariantDriftExceeded(ChaosqueezeError):
    exit_code = 3

    def __init__(self, tau: Tau, drift: float, tolerance: float):
        super().__init__(f"accuracy monitor drift {drift:.3e} exceeds tolerance {tolerance:.3e} at tau={tau!r}.")
        self.tau = tau
        self.drift = drift
        self.tolerance = tolerance


class ValidityRadiusExceeded(ChaosqueezeError):
    """The convergence radius went above the 1/N expansion validity bound."""

    exit_code = 4

    def __init__(self, tau: Tau, radius: float):
        super().__init__(f"convergence radius {radius:.3e} exceeds the validity bound at tau={tau!r}.")
        self.tau = tau
        self.radius = radius


class WindowOutOfRange(ChaosqueezeError, ValueError):
    pass


class IncommensurateStep(ChaosqueezeError, ValueError):
    pass


class ConfigError(ChaosqueezeError, ValueError):
    exit_code = 2

    def __init__(self, key: str, reason: str):
        super().__init__(f"invalid configuration `{key}`: {reason}")
        self.key = key
        self.reason = reason


class OutputError(ChaosqueezeError):
    exit_code = 5
