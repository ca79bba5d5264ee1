"""
Run configuration: a flat JSON object document, overridden by command line flags, over built-in defaults.
"""

import contextlib
import enum
import json
import re
from typing import Any, Dict, List, Mapping, Optional, Tuple

import attrs
from attrs.validators import ge, gt, instance_of, optional

from chaosqueeze.diagnostics.object import ChirikovConfig, ClassifierConfig
from chaosqueeze.errors import ConfigError
from chaosqueeze.integrator.object import IntegrationConfig
from chaosqueeze.model.drive import DriveKind, make_drive
from chaosqueeze.model.object import ModelParams
from chaosqueeze.object import Tau
from chaosqueeze.sweep.object import SweepAxis, SweepSpec


class Command(enum.Enum):
    Simulate = "simulate"
    Sweep = "sweep"
    Classify = "classify"
    Intervals = "intervals"
    Lyapunov = "lyapunov"
    Chirikov = "chirikov"
    Poincare = "poincare"

    @property
    def writes_table(self) -> bool:
        return self in (Command.Simulate, Command.Sweep, Command.Intervals, Command.Poincare)


DEFAULTS: Dict[str, Any] = {
    "command": None,
    "g": 2.0,
    "omega": 0.5,
    "p0": 0.0,
    "n": 10**6,
    "drive": DriveKind.Sinusoidal.value,
    "harmonics": None,
    "pulse_period": None,
    "pulse_width": None,
    "pulse_amplitude": 1.0,
    "dt": 1e-3,
    "tau_end": 10.0,
    "sample_every": 10,
    "drift_tolerance": 1e-9,
    "window": 10.0,
    "axis": SweepAxis.G.value,
    "from": None,
    "to": None,
    "points": 50,
    "classify_horizon": 200.0,
    "tau_total": 200.0,
    "renorm_every": 1.0,
    "lambda_threshold": 0.01,
    "omega_ac": 0.1,
    "delta": None,
    "out": None,
    "strict": False,
    "emit_plot": False,
    "workers": 1,
}

# Attribute names of the value types that differ from their configuration key.
_ATTRIBUTE_KEYS = {"n_tls": "n", "from_": "from", "period": "pulse_period", "width": "pulse_width"}


@attrs.define(frozen=True)
class RunConfig:
    command: Command = attrs.field(validator=instance_of(Command))
    model: ModelParams = attrs.field(validator=instance_of(ModelParams))
    integration: IntegrationConfig = attrs.field(validator=instance_of(IntegrationConfig))
    classifier: ClassifierConfig = attrs.field(validator=instance_of(ClassifierConfig))

    sweep: Optional[SweepSpec] = attrs.field(validator=optional(instance_of(SweepSpec)), default=None)

    output_path: Optional[str] = attrs.field(validator=optional(instance_of(str)), default=None)
    strict: bool = attrs.field(validator=instance_of(bool), default=False)
    emit_plot: bool = attrs.field(validator=instance_of(bool), default=False)
    workers: int = attrs.field(validator=(instance_of(int), ge(1)), default=1)

    classify_horizon: Tau = attrs.field(validator=gt(0.0), default=200.0)
    tau_total: Tau = attrs.field(validator=gt(0.0), default=200.0)
    delta: Optional[float] = attrs.field(validator=optional(gt(0.0)), default=None)

    def __attrs_post_init__(self):
        if self.command == Command.Sweep and self.sweep is None:
            raise ConfigError("sweep", "the sweep command requires a sweep definition.")

        if self.command.writes_table and self.output_path is None:
            raise ConfigError("out", f"the {self.command.value} command requires an output path.")

        if self.emit_plot and not self.command.writes_table:
            raise ConfigError("emit_plot", f"the {self.command.value} command does not produce plottable data.")


def parse_config(text: Optional[str] = None, overrides: Optional[Mapping[str, Any]] = None) -> RunConfig:
    """
    Builds the run configuration from a JSON object document and from command line overrides.

    Flag values override document values, which override :py:data:`DEFAULTS`. ``None`` overrides are ignored.

    .. code:: python

        parse_config('{"command": "simulate", "g": 1.0, "out": "run.csv"}', {"g": 2.0}).model.g  # 2.0

    :raises ConfigError: on malformed documents, unknown keys or invalid values.
    """

    document = _load_document(text)
    flags = {key: value for key, value in (overrides or {}).items() if value is not None}

    for key in list(document.keys()) + list(flags.keys()):
        if key not in DEFAULTS:
            raise ConfigError(key, "unknown key.")

    values = {**DEFAULTS, **document, **flags}

    if values["command"] is None:
        raise ConfigError("command", "no command given.")

    command = _enum(Command, values, "command")
    strict = _bool(values, "strict")

    with _invalid_value_as_config_error("drive"):
        drive = make_drive(
            _enum(DriveKind, values, "drive"),
            harmonics=_harmonics(values["harmonics"]),
            pulse_period=_optional_float(values, "pulse_period"),
            pulse_width=_optional_float(values, "pulse_width"),
            pulse_amplitude=_float(values, "pulse_amplitude"),
        )

    with _invalid_value_as_config_error("model"):
        model = ModelParams(
            g=_float(values, "g"),
            omega=_float(values, "omega"),
            p0=_float(values, "p0"),
            n_tls=_int(values, "n"),
            drive=drive,
        )

    with _invalid_value_as_config_error("integration"):
        integration = IntegrationConfig(
            tau_end=_float(values, "tau_end"),
            dt=_float(values, "dt"),
            sample_every=_int(values, "sample_every"),
            drift_tolerance=_float(values, "drift_tolerance"),
            strict=strict,
        )

    with _invalid_value_as_config_error("classifier"):
        classifier = ClassifierConfig(
            lambda_threshold=_float(values, "lambda_threshold"),
            omega_ac=_float(values, "omega_ac"),
            renorm_every=_float(values, "renorm_every"),
        )

    sweep = _sweep_spec(values, model, integration, classifier) if command == Command.Sweep else None

    with _invalid_value_as_config_error("config"):
        return RunConfig(
            command=command,
            model=model,
            integration=integration,
            classifier=classifier,
            sweep=sweep,
            output_path=_optional_str(values, "out"),
            strict=strict,
            emit_plot=_bool(values, "emit_plot"),
            workers=_int(values, "workers"),
            classify_horizon=_float(values, "classify_horizon"),
            tau_total=_float(values, "tau_total"),
            delta=_optional_float(values, "delta"),
        )


def parse_harmonics(text: str) -> List[Tuple[float, int, float]]:
    """Parses ``"amplitude:multiple:phase,..."`` (the phase can be omitted) into harmonic triples."""

    harmonics = []

    for term in text.split(","):
        parts = term.strip().split(":")

        if len(parts) not in (2, 3):
            raise ConfigError("harmonics", f"expected `amplitude:multiple[:phase]`, got {term!r}.")

        try:
            amplitude = float(parts[0])
            multiple = int(parts[1])
            phase = float(parts[2]) if len(parts) == 3 else 0.0
        except ValueError as e:
            raise ConfigError("harmonics", str(e)) from e

        harmonics.append((amplitude, multiple, phase))

    return harmonics


def _sweep_spec(
    values: Dict[str, Any], model: ModelParams, integration: IntegrationConfig, classifier: ClassifierConfig
) -> SweepSpec:
    axis = _enum(SweepAxis, values, "axis")
    default = SweepSpec.default_g_scan() if axis == SweepAxis.G else SweepSpec.default_omega_scan()

    from_ = _optional_float(values, "from")
    to = _optional_float(values, "to")

    with _invalid_value_as_config_error("sweep"):
        return SweepSpec(
            axis=axis,
            from_=default.from_ if from_ is None else from_,
            to=default.to if to is None else to,
            points=_int(values, "points"),
            fixed=model,
            window=_float(values, "window"),
            classify_horizon=_float(values, "classify_horizon"),
            integration=integration,
            classifier=classifier,
            chirikov=ChirikovConfig(omega_ac=classifier.omega_ac),
        )


def _load_document(text: Optional[str]) -> Dict[str, Any]:
    if text is None or text.strip() == "":
        return {}

    try:
        document = json.loads(text)
    except json.JSONDecodeError as e:
        raise ConfigError("<document>", f"malformed JSON: {e}") from e

    if not isinstance(document, dict):
        raise ConfigError("<document>", "expected a JSON object of key/value pairs.")

    return document


@contextlib.contextmanager
def _invalid_value_as_config_error(section: str):
    try:
        yield
    except ConfigError:
        raise
    except (ValueError, TypeError) as e:
        raise ConfigError(_offending_key(str(e), section), str(e)) from e


def _offending_key(message: str, section: str) -> str:
    # attrs and our validators quote the attribute name at the start of their messages.
    match = re.match(r"^['`](\w+)['`]", message)

    if match is None:
        return section

    name = match.group(1)
    return _ATTRIBUTE_KEYS.get(name, name)


def _float(values: Mapping[str, Any], key: str) -> float:
    value = values[key]

    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ConfigError(key, f"expected a number, got {value!r}.")

    return float(value)


def _optional_float(values: Mapping[str, Any], key: str) -> Optional[float]:
    return None if values[key] is None else _float(values, key)


def _int(values: Mapping[str, Any], key: str) -> int:
    value = values[key]

    if isinstance(value, float) and value.is_integer():
        value = int(value)

    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(key, f"expected an integer, got {value!r}.")

    return value


def _bool(values: Mapping[str, Any], key: str) -> bool:
    value = values[key]

    if not isinstance(value, bool):
        raise ConfigError(key, f"expected true or false, got {value!r}.")

    return value


def _optional_str(values: Mapping[str, Any], key: str) -> Optional[str]:
    value = values[key]

    if value is not None and not isinstance(value, str):
        raise ConfigError(key, f"expected a string, got {value!r}.")

    return value


def _enum(enum_type, values: Mapping[str, Any], key: str):
    try:
        return enum_type(values[key])
    except ValueError as e:
        choices = ", ".join(member.value for member in enum_type)
        raise ConfigError(key, f"expected one of {choices}, got {values[key]!r}.") from e


def _harmonics(value: Any) -> Optional[List[Tuple[float, int, float]]]:
    if value is None:
        return None

    if isinstance(value, str):
        return parse_harmonics(value)

    if not isinstance(value, list):
        raise ConfigError("harmonics", f"expected a list of [amplitude, multiple, phase] triples, got {value!r}.")

    harmonics = []
    for term in value:
        if not isinstance(term, list) or len(term) not in (2, 3):
            raise ConfigError("harmonics", f"expected [amplitude, multiple, phase], got {term!r}.")

        harmonics.append((term[0], term[1], term[2] if len(term) == 3 else 0.0))

    return harmonics
