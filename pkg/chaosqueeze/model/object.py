import math
from typing import Tuple

import attrs
from attrs.validators import ge, gt, instance_of

from chaosqueeze.model.drive import DriveWaveform, Sinusoidal
from chaosqueeze.object import Tau

StateVector = Tuple[float, float, float, float, float, float, float]  # (x, p, psi, I, s_pp, s_xx, s_px)

STATE_COMPONENTS = ("x", "p", "psi", "i_action", "s_pp", "s_xx", "s_px")


def _finite(instance, attribute, value) -> None:
    if not math.isfinite(value):
        raise ValueError(f"`{attribute.name}` must be finite, got {value!r}.")


@attrs.define(frozen=True)
class ModelParams:
    """
    Dimensionless control parameters.

    Time is measured in units of the inverse cooperative frequency, so ``omega`` is the drive frequency relative to the
    cooperative frequency.
    """

    g: float = attrs.field(converter=float, validator=(_finite, ge(0.0)))
    omega: float = attrs.field(converter=float, validator=(_finite, gt(0.0)))
    p0: float = attrs.field(converter=float, validator=_finite, default=0.0)
    n_tls: int = attrs.field(validator=(instance_of(int), ge(1)), default=10**6)
    drive: DriveWaveform = attrs.field(validator=instance_of(DriveWaveform), factory=Sinusoidal)

    def with_overrides(self, **changes) -> "ModelParams":
        return attrs.evolve(self, **changes)


@attrs.define(frozen=True)
class PendulumState:
    x: float = attrs.field(converter=float, validator=_finite)
    p: float = attrs.field(converter=float, validator=_finite)
    psi: float = attrs.field(converter=float, validator=_finite, default=0.0)
    i_action: float = attrs.field(converter=float, validator=_finite, default=0.0)


@attrs.define(frozen=True)
class CovarianceState:
    """Fluctuation second moments, pre-multiplied by the atom count."""

    s_pp: float = attrs.field(converter=float, validator=(_finite, gt(0.0)))
    s_xx: float = attrs.field(converter=float, validator=(_finite, gt(0.0)))
    s_px: float = attrs.field(converter=float, validator=_finite, default=0.0)

    @property
    def determinant(self) -> float:
        return self.s_pp * self.s_xx - self.s_px * self.s_px


@attrs.define(frozen=True)
class FullState:
    pendulum: PendulumState = attrs.field(validator=instance_of(PendulumState))
    cov: CovarianceState = attrs.field(validator=instance_of(CovarianceState))
    tau: Tau = attrs.field(converter=float, validator=_finite, default=0.0)

    def as_vector(self) -> StateVector:
        return (
            self.pendulum.x,
            self.pendulum.p,
            self.pendulum.psi,
            self.pendulum.i_action,
            self.cov.s_pp,
            self.cov.s_xx,
            self.cov.s_px,
        )

    @classmethod
    def from_vector(cls, vector, tau: Tau) -> "FullState":
        x, p, psi, i_action, s_pp, s_xx, s_px = (float(v) for v in vector)
        return cls(PendulumState(x, p, psi, i_action), CovarianceState(s_pp, s_xx, s_px), tau)


@attrs.define(frozen=True)
class BlochObservables:
    j_plus: float = attrs.field()
    j_z: float = attrs.field()
    alpha: float = attrs.field()

    @property
    def spin_length_squared(self) -> float:
        return self.j_plus * self.j_plus + self.j_z * self.j_z
