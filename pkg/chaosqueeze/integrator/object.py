import enum
import math
from typing import Optional

import attrs
import numpy as np
from attrs.validators import ge, gt, instance_of, optional

from chaosqueeze.model.object import FullState, ModelParams
from chaosqueeze.object import Tau

# s_pp s_xx - s_px^2 of the initial coherent state, conserved by the fluctuation flow.
COHERENT_DETERMINANT = 9.0

# Bound on Trajectory.determinant_deviations for a converged run.
DETERMINANT_TOLERANCE = 9e-6


class DriftMonitor(enum.Enum):
    Invariant = "invariant"  # |L(tau) - L(0)|
    StepHalving = "step_halving"  # Richardson estimate from a parallel run at half the step.


@attrs.define(frozen=True)
class IntegrationConfig:
    tau_end: Tau = attrs.field(converter=float, validator=gt(0.0))
    dt: float = attrs.field(converter=float, validator=gt(0.0), default=1e-3)
    sample_every: int = attrs.field(validator=(instance_of(int), ge(1)), default=10)
    drift_tolerance: float = attrs.field(converter=float, validator=gt(0.0), default=1e-9)

    # If false, exceeding the drift tolerance is logged instead of raised.
    strict: bool = attrs.field(validator=instance_of(bool), default=True)

    @property
    def n_full_steps(self) -> int:
        # Tolerates the rounding of tau_end / dt (e.g. 0.3 / 0.1 = 2.9999999999999996).
        return int(math.floor(self.tau_end / self.dt + 1e-9))

    @property
    def final_step(self) -> float:
        """Length of the trailing step that lands on ``tau_end`` when ``dt`` does not divide it (0 otherwise)."""

        remainder = self.tau_end - self.n_full_steps * self.dt
        return remainder if remainder > 1e-12 * self.tau_end else 0.0

    @property
    def sample_spacing(self) -> Tau:
        return self.sample_every * self.dt

    def snapped_to_period(self, period: Tau) -> "IntegrationConfig":
        """Returns a copy whose step is the largest step not above ``dt`` dividing ``period`` exactly."""

        steps_per_period = math.ceil(period / self.dt - 1e-9)
        return attrs.evolve(self, dt=period / steps_per_period)

    def with_overrides(self, **changes) -> "IntegrationConfig":
        return attrs.evolve(self, **changes)


@attrs.define(eq=False)
class Trajectory:
    """
    Time-ordered samples of the full state.

    Samples are stored as NumPy arrays: ``states[i]`` is the state vector (x, p, psi, I, s_pp, s_xx, s_px) at
    ``taus[i]``.
    """

    params: ModelParams = attrs.field(validator=instance_of(ModelParams))
    config: IntegrationConfig = attrs.field(validator=instance_of(IntegrationConfig))

    taus: np.ndarray = attrs.field(validator=instance_of(np.ndarray))
    states: np.ndarray = attrs.field(validator=instance_of(np.ndarray))
    invariants: np.ndarray = attrs.field(validator=instance_of(np.ndarray))

    drift_monitor: DriftMonitor = attrs.field(validator=instance_of(DriftMonitor))
    max_drift: float = attrs.field(converter=float)

    # First sampled time at which the drift tolerance was exceeded (non-strict runs only).
    drift_exceeded_tau: Optional[Tau] = attrs.field(validator=optional(instance_of(float)), default=None)

    # First sampled time at which the convergence radius went above the validity bound.
    validity_breach_tau: Optional[Tau] = attrs.field(validator=optional(instance_of(float)), default=None)

    def __attrs_post_init__(self):
        if self.taus.ndim != 1 or len(self.taus) < 1 or self.taus[0] != 0.0:
            raise ValueError("a trajectory must start at tau=0.")

        if np.any(np.diff(self.taus) <= 0):
            raise ValueError("trajectory times must be strictly increasing.")

        if self.states.shape != (len(self.taus), 7):
            raise ValueError(f"expected {len(self.taus)} state vectors, got an array of shape {self.states.shape}.")

    def __len__(self) -> int:
        return len(self.taus)

    @property
    def tau_end(self) -> Tau:
        return float(self.taus[-1])

    @property
    def squeezing(self) -> np.ndarray:
        """S(tau) = N <(Delta p)^2>, i.e. the normalized s_pp component."""
        return self.states[:, 4]

    @property
    def radius(self) -> np.ndarray:
        """Convergence radius d(tau)."""
        return np.sqrt((self.states[:, 4] + self.states[:, 5]) / self.params.n_tls)

    @property
    def invariant_drift(self) -> np.ndarray:
        return self.invariants - self.invariants[0]

    @property
    def determinants(self) -> np.ndarray:
        return self.states[:, 4] * self.states[:, 5] - self.states[:, 6] ** 2

    @property
    def determinant_deviations(self) -> np.ndarray:
        """
        |det - 9| of the covariance, scaled down by s_pp s_xx / 9 once that product exceeds 9.

        Far from the coherent state the determinant is the difference of two nearly equal products, so its absolute
        error grows like s_pp s_xx times the float resolution.
        """

        scale = np.maximum(1.0, self.states[:, 4] * self.states[:, 5] / COHERENT_DETERMINANT)
        return np.abs(self.determinants - COHERENT_DETERMINANT) / scale

    def state_at(self, index: int) -> FullState:
        return FullState.from_vector(self.states[index], float(self.taus[index]))
