"""
Amplitude modulations F of the external field.

Every waveform is evaluated at the drive phase ``psi``, so that the extended system (x, p, psi, I) stays autonomous.
The dimensionless time of a phase is ``psi / omega``.
"""

import abc
import enum
import math
from typing import List, Optional, Tuple

import attrs
from attrs.validators import deep_iterable, ge, gt, instance_of

from chaosqueeze.object import Tau


class DriveKind(enum.Enum):
    Sinusoidal = "sinusoidal"
    HarmonicSum = "harmonic_sum"
    PulseTrain = "pulse_train"


def _finite(instance, attribute, value) -> None:
    if not math.isfinite(value):
        raise ValueError(f"`{attribute.name}` must be finite, got {value!r}.")


@attrs.define(frozen=True)
class DriveWaveform(metaclass=abc.ABCMeta):
    @property
    @abc.abstractmethod
    def kind(self) -> DriveKind:
        raise NotImplementedError()

    @abc.abstractmethod
    def value(self, psi: float, omega: float) -> float:
        """Returns F at the drive phase ``psi``."""
        raise NotImplementedError()

    @abc.abstractmethod
    def phase_derivative(self, psi: float, omega: float) -> float:
        """Returns dF/dpsi at the drive phase ``psi``, used by the auxiliary action equation."""
        raise NotImplementedError()

    @abc.abstractmethod
    def tau_period(self, omega: float) -> Tau:
        """The period of the waveform, in dimensionless time."""
        raise NotImplementedError()

    @property
    def is_phase_periodic(self) -> bool:
        """True if the waveform repeats with every 2*pi of drive phase (stroboscopic sections are defined)."""
        return True

    @property
    def is_piecewise_constant(self) -> bool:
        return False

    @property
    def monitors_invariant(self) -> bool:
        """True if the extended phase-space invariant is trusted as the integration accuracy monitor."""
        return False

    def edges(self, tau_start: Tau, tau_end: Tau) -> List[Tau]:
        """Returns the discontinuity times strictly inside ``(tau_start, tau_end)``, in increasing order."""
        return []


@attrs.define(frozen=True)
class Sinusoidal(DriveWaveform):
    """F = sin(psi)."""

    @property
    def kind(self) -> DriveKind:
        return DriveKind.Sinusoidal

    def value(self, psi: float, omega: float) -> float:
        return math.sin(psi)

    def phase_derivative(self, psi: float, omega: float) -> float:
        return math.cos(psi)

    def tau_period(self, omega: float) -> Tau:
        return 2 * math.pi / omega

    @property
    def monitors_invariant(self) -> bool:
        return True


@attrs.define(frozen=True)
class HarmonicTerm:
    amplitude: float = attrs.field(converter=float, validator=_finite)
    multiple: int = attrs.field(validator=(instance_of(int), ge(1)))
    phase: float = attrs.field(converter=float, validator=_finite, default=0.0)


def _to_terms(values) -> Tuple[HarmonicTerm, ...]:
    return tuple(v if isinstance(v, HarmonicTerm) else HarmonicTerm(*v) for v in values)


def _non_empty(instance, attribute, value) -> None:
    if len(value) == 0:
        raise ValueError(f"`{attribute.name}` must contain at least one harmonic.")


@attrs.define(frozen=True)
class HarmonicSum(DriveWaveform):
    """F = sum of amplitude * sin(multiple * psi + phase) over the terms."""

    terms: Tuple[HarmonicTerm, ...] = attrs.field(
        converter=_to_terms, validator=(deep_iterable(instance_of(HarmonicTerm)), _non_empty)
    )

    @property
    def kind(self) -> DriveKind:
        return DriveKind.HarmonicSum

    def value(self, psi: float, omega: float) -> float:
        return math.fsum(t.amplitude * math.sin(t.multiple * psi + t.phase) for t in self.terms)

    def phase_derivative(self, psi: float, omega: float) -> float:
        return math.fsum(t.amplitude * t.multiple * math.cos(t.multiple * psi + t.phase) for t in self.terms)

    def tau_period(self, omega: float) -> Tau:
        return 2 * math.pi / omega


@attrs.define(frozen=True)
class PulseTrain(DriveWaveform):
    """Rectangular pulses of ``amplitude`` and ``width``, repeating every ``period`` (both in dimensionless time)."""

    period: float = attrs.field(converter=float, validator=(_finite, gt(0.0)))
    width: float = attrs.field(converter=float, validator=(_finite, gt(0.0)))
    amplitude: float = attrs.field(converter=float, validator=_finite, default=1.0)

    @width.validator
    def _width_validator(self, attribute, value):
        if value >= self.period:
            raise ValueError(f"pulse width ({value}) must be shorter than the pulse period ({self.period}).")

    @property
    def kind(self) -> DriveKind:
        return DriveKind.PulseTrain

    def value(self, psi: float, omega: float) -> float:
        return self.gate(psi / omega)

    def gate(self, tau: Tau) -> float:
        return self.amplitude if tau % self.period < self.width else 0.0

    def phase_derivative(self, psi: float, omega: float) -> float:
        # Zero between edges. The edges themselves are never straddled by an integration step.
        return 0.0

    def tau_period(self, omega: float) -> Tau:
        return self.period

    @property
    def is_phase_periodic(self) -> bool:
        return False

    @property
    def is_piecewise_constant(self) -> bool:
        return True

    def edges(self, tau_start: Tau, tau_end: Tau) -> List[Tau]:
        first = math.floor(tau_start / self.period)
        last = math.ceil(tau_end / self.period)

        candidates = (edge for k in range(first, last + 1) for edge in (k * self.period, k * self.period + self.width))

        return sorted(edge for edge in candidates if tau_start < edge < tau_end)


def drive_value(drive: DriveWaveform, omega: float, tau: Tau) -> float:
    """
    Evaluates the amplitude modulation F at the dimensionless time ``tau``.

    .. code:: python

        drive_value(Sinusoidal(), omega=2.0, tau=math.pi / 4)  # 1.0

    """

    if isinstance(drive, PulseTrain):
        return drive.gate(tau)

    return drive.value(omega * tau, omega)


def make_drive(
    kind: DriveKind,
    harmonics: Optional[List[Tuple[float, int, float]]] = None,
    pulse_period: Optional[float] = None,
    pulse_width: Optional[float] = None,
    pulse_amplitude: float = 1.0,
) -> DriveWaveform:
    """Builds a drive waveform from flat configuration values."""

    if kind == DriveKind.Sinusoidal:
        return Sinusoidal()

    if kind == DriveKind.HarmonicSum:
        if harmonics is None:
            raise ValueError("`harmonics` are required for a harmonic sum drive.")
        return HarmonicSum(harmonics)

    if pulse_period is None or pulse_width is None:
        raise ValueError("`pulse_period` and `pulse_width` are required for a pulse train drive.")

    return PulseTrain(pulse_period, pulse_width, pulse_amplitude)
