import enum
from typing import List, Optional

import attrs
from attrs.validators import ge, gt, instance_of

from chaosqueeze.object import Interval, Tau


class ChaosClass(enum.Enum):
    Regular = "R"
    Chaotic = "C"
    AdiabaticChaos = "AC"


class ChirikovRegime(enum.Enum):
    Integrable = "integrable"  # No drive.
    NarrowLayer = "narrow_layer"  # Weak drive, fast modulation: thin stochastic layer around the separatrix.
    BroadLayer = "broad_layer"  # Weak drive, slow modulation: the layer fills most of the phase space.
    Regular = "regular"  # Strong drive, resonances do not overlap.
    GlobalChaos = "global_chaos"  # Strong drive, resonance overlap.
    AdiabaticChaos = "adiabatic_chaos"  # Chaos predicted at a very slow modulation.

    @property
    def predicts_chaos(self) -> bool:
        return self in (ChirikovRegime.BroadLayer, ChirikovRegime.GlobalChaos, ChirikovRegime.AdiabaticChaos)


@attrs.define(frozen=True)
class SqueezingReport:
    s_min: float = attrs.field(validator=gt(0.0))
    tau_at_min: Tau = attrs.field()
    intervals: List[Interval] = attrs.field(factory=list)

    @intervals.validator
    def _intervals_validator(self, attribute, value):
        for (start, end), (next_start, _) in zip(value, value[1:]):
            if not start < end <= next_start:
                raise ValueError("squeezing intervals must be ordered and disjoint.")

    @property
    def is_squeezed(self) -> bool:
        return self.s_min < 3.0


@attrs.define(frozen=True)
class LyapunovEstimate:
    lambda_: float = attrs.field()
    tau_total: Tau = attrs.field(validator=gt(0.0))
    renorm_count: int = attrs.field(validator=(instance_of(int), ge(0)))


@attrs.define(frozen=True)
class GrowthFit:
    """Least-squares fits of log d(tau), against tau (exponential law) and against log(1 + tau) (power law)."""

    exponential_r2: float = attrs.field()
    power_r2: float = attrs.field()

    # Slope of log d(tau) against tau, comparable to the maximal Lyapunov exponent.
    exponential_rate: float = attrs.field()
    power_exponent: float = attrs.field()

    @property
    def is_exponential(self) -> bool:
        return self.exponential_r2 > self.power_r2


@attrs.define(frozen=True)
class ChirikovConfig:
    # Approximate constant of the resonance overlap criterion.
    const: float = attrs.field(validator=gt(0.0), default=10.0)

    # kappa >= kappa_large is "much larger than one", kappa <= kappa_small is "much smaller than one".
    kappa_large: float = attrs.field(validator=gt(0.0), default=5.0)
    kappa_small: float = attrs.field(validator=gt(0.0), default=0.2)

    omega_ac: float = attrs.field(validator=gt(0.0), default=0.1)


@attrs.define(frozen=True)
class ChirikovReport:
    kappa: float = attrs.field()
    k_param: float = attrs.field()
    p_max: float = attrs.field()
    predicted: ChirikovRegime = attrs.field(validator=instance_of(ChirikovRegime))


@attrs.define(frozen=True)
class ClassifierConfig:
    lambda_threshold: float = attrs.field(validator=gt(0.0), default=0.01)
    omega_ac: float = attrs.field(validator=gt(0.0), default=0.1)

    renorm_every: Tau = attrs.field(validator=gt(0.0), default=1.0)
    dt: float = attrs.field(validator=gt(0.0), default=1e-2)


@attrs.define(frozen=True)
class ChaosReport:
    lyapunov: LyapunovEstimate = attrs.field(validator=instance_of(LyapunovEstimate))
    chirikov: ChirikovReport = attrs.field(validator=instance_of(ChirikovReport))
    chaos_class: ChaosClass = attrs.field(validator=instance_of(ChaosClass))

    # Prediction and measurement agree, None when the drive is too weak for the resonance overlap branch.
    concordant: Optional[bool] = attrs.field(default=None)
