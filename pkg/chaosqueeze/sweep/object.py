import enum
from typing import List, Optional

import attrs
import numpy as np
from attrs.validators import ge, gt, instance_of, le, optional

from chaosqueeze.diagnostics.object import ChaosClass, ChirikovConfig, ClassifierConfig
from chaosqueeze.integrator.object import IntegrationConfig
from chaosqueeze.model.object import ModelParams
from chaosqueeze.object import Interval, Tau


class SweepAxis(enum.Enum):
    G = "g"
    Omega = "omega"


class RowStatus(enum.Enum):
    Ok = "ok"
    Drift = "drift"  # The accuracy monitor went over its tolerance inside the window.
    Radius = "radius"  # The convergence radius went over the validity bound inside the window.
    Failed = "failed"


@attrs.define(frozen=True)
class SweepSpec:
    """
    A one-dimensional scan over the drive amplitude ``g`` or the drive frequency ``omega``, every other parameter being
    taken from ``fixed``.

    Every grid point is integrated over ``[0, window]`` for the squeezing minimum, and classified from a Lyapunov run
    over ``classify_horizon``.
    """

    axis: SweepAxis = attrs.field(validator=instance_of(SweepAxis))
    from_: float = attrs.field(converter=float)
    to: float = attrs.field(converter=float)
    points: int = attrs.field(validator=(instance_of(int), ge(2)))

    fixed: ModelParams = attrs.field(validator=instance_of(ModelParams), factory=lambda: ModelParams(g=2.0, omega=0.5))

    window: Tau = attrs.field(converter=float, validator=gt(0.0), default=10.0)
    classify_horizon: Tau = attrs.field(converter=float, validator=gt(0.0), default=200.0)

    integration: IntegrationConfig = attrs.field(
        validator=instance_of(IntegrationConfig), factory=lambda: IntegrationConfig(tau_end=10.0)
    )
    classifier: ClassifierConfig = attrs.field(validator=instance_of(ClassifierConfig), factory=ClassifierConfig)
    chirikov: ChirikovConfig = attrs.field(validator=instance_of(ChirikovConfig), factory=ChirikovConfig)

    @to.validator
    def _to_validator(self, attribute, value):
        if not self.from_ < value:
            raise ValueError(f"`to` must be greater than `from`, got [{self.from_}, {value}].")

    @from_.validator
    def _from_validator(self, attribute, value):
        if self.axis == SweepAxis.G and value < 0.0:
            raise ValueError(f"a G sweep must start at a non-negative value, got {value}.")

        if self.axis == SweepAxis.Omega and value <= 0.0:
            raise ValueError(f"an Omega sweep must start at a positive value, got {value}.")

    @classmethod
    def default_g_scan(cls, points: int = 50, window: Tau = 10.0) -> "SweepSpec":
        """G from 0.1 to 3 at Omega = 0.5, from the ground state p0 = 0."""
        return cls(SweepAxis.G, 0.1, 3.0, points, fixed=ModelParams(g=2.0, omega=0.5), window=window)

    @classmethod
    def default_omega_scan(cls, points: int = 50, window: Tau = 10.0) -> "SweepSpec":
        """Omega from 0.05 to 2 at G = 2, from the ground state p0 = 0."""
        return cls(SweepAxis.Omega, 0.05, 2.0, points, fixed=ModelParams(g=2.0, omega=0.5), window=window)

    @property
    def axis_values(self) -> np.ndarray:
        """Evenly spaced grid, both bounds included exactly."""
        return np.linspace(self.from_, self.to, self.points)

    @property
    def window_config(self) -> IntegrationConfig:
        # Grid points never raise on accuracy warnings, they are reported in the row status.
        return self.integration.with_overrides(tau_end=self.window, strict=False)

    def params_at(self, value: float) -> ModelParams:
        if self.axis == SweepAxis.G:
            return self.fixed.with_overrides(g=float(value))

        return self.fixed.with_overrides(omega=float(value))

    def with_overrides(self, **changes) -> "SweepSpec":
        return attrs.evolve(self, **changes)


def _optional_positive(instance, attribute, value):
    if value is not None and not value > 0.0:
        raise ValueError(f"`{attribute.name}` must be positive, got {value!r}.")


@attrs.define(frozen=True)
class SweepRow:
    """
    Result for a single grid point. Failed points only keep their parameters, status and failure reason.
    """

    g: float = attrs.field(converter=float)
    omega: float = attrs.field(converter=float)

    kappa: float = attrs.field(converter=float)
    k_param: float = attrs.field(converter=float)

    status: RowStatus = attrs.field(validator=instance_of(RowStatus))

    s_min: Optional[float] = attrs.field(validator=_optional_positive, default=None)
    tau_at_min: Optional[Tau] = attrs.field(default=None)
    d_end: Optional[float] = attrs.field(validator=_optional_positive, default=None)
    d_growth: Optional[float] = attrs.field(default=None)
    lambda_: Optional[float] = attrs.field(default=None)
    chaos_class: Optional[ChaosClass] = attrs.field(validator=optional(instance_of(ChaosClass)), default=None)

    failure_reason: Optional[str] = attrs.field(default=None)

    @property
    def is_failed(self) -> bool:
        return self.status == RowStatus.Failed

    def axis_value(self, axis: SweepAxis) -> float:
        return self.g if axis == SweepAxis.G else self.omega


@attrs.define(frozen=True)
class SensitivityResult:
    base_intervals: List[Interval] = attrs.field(validator=instance_of(list))
    perturbed_intervals: List[Interval] = attrs.field(validator=instance_of(list))

    # Measure of the intersection of both interval sets divided by the measure of their union.
    jaccard: float = attrs.field(converter=float, validator=(ge(0.0), le(1.0)))

    perturbation: str = attrs.field(validator=instance_of(str))
