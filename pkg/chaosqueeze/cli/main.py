"""
Command line interface.

.. code:: bash

    chaosqueeze simulate --g 2 --omega 0.5 --tau-end 20 --out run.csv --emit-plot
    chaosqueeze sweep --axis g --from 0.5 --to 3 --points 50 --workers 8 --out scan.csv
    chaosqueeze classify --g 2 --omega 0.5

Exit codes: 0 success, 2 configuration error, 3 accuracy drift over tolerance and 4 convergence radius over the
validity bound (both in ``--strict`` mode only), 5 I/O error.
"""

import argparse
import logging
import os
import sys
from typing import Any, Callable, Dict, List, Optional

from chaosqueeze.about import __version__
from chaosqueeze.cli.config import DEFAULTS, Command, RunConfig, parse_config
from chaosqueeze.cli.csv_io import write_intervals_csv, write_section_csv, write_sweep_csv, write_trajectory_csv
from chaosqueeze.cli.plot import PlotKind, emit_plot_script
from chaosqueeze.diagnostics.chirikov import chirikov
from chaosqueeze.diagnostics.classify import chaos_report
from chaosqueeze.diagnostics.lyapunov import lyapunov_max
from chaosqueeze.diagnostics.object import ChirikovConfig
from chaosqueeze.diagnostics.poincare import poincare_section
from chaosqueeze.diagnostics.squeezing import squeezing_intervals
from chaosqueeze.entry_point import add_parallel_options, backend_context_for_workers
from chaosqueeze.errors import ChaosqueezeError, ConfigError, InvariantDriftExceeded, ValidityRadiusExceeded
from chaosqueeze.integrator.functions import integrate
from chaosqueeze.integrator.object import Trajectory
from chaosqueeze.model.drive import DriveKind
from chaosqueeze.sweep.functions import MIN_TIMELINE_END, run_sweep, sensitivity
from chaosqueeze.sweep.object import RowStatus, SweepAxis


def main(argv: Optional[List[str]] = None) -> int:
    parser = make_parser()
    args = parser.parse_args(argv)

    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.INFO,
        format="%(asctime)s %(levelname)s %(message)s",
        stream=sys.stderr,
    )

    try:
        config = parse_config(_read_config_file(args.config), _overrides(args))
        return run(config)
    except ChaosqueezeError as e:
        logging.error(str(e))
        return e.exit_code
    except ValueError as e:
        # Arguments rejected by an operation, such as a too short classification horizon.
        logging.error(str(e))
        return ConfigError.exit_code


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chaosqueeze", description="Squeezing and dynamical chaos of a driven collective atom-field system."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")

    parser.add_argument("command", choices=[c.value for c in Command])
    parser.add_argument("--config", type=str, default=None, help="JSON object document of configuration keys.")

    model = parser.add_argument_group("model")
    model.add_argument("--g", type=float, help=f"Drive amplitude G (default: {DEFAULTS['g']}).")
    model.add_argument("--omega", type=float, help=f"Drive frequency Omega (default: {DEFAULTS['omega']}).")
    model.add_argument("--p0", type=float, help=f"Initial momentum (default: {DEFAULTS['p0']}).")
    model.add_argument("--n", type=int, help=f"Number of two-level atoms (default: {DEFAULTS['n']}).")
    model.add_argument("--drive", choices=[k.value for k in DriveKind], help="Drive waveform (default: sinusoidal).")
    model.add_argument("--harmonics", type=str, help="Harmonic sum terms, as `amplitude:multiple[:phase],...`.")
    model.add_argument("--pulse-period", dest="pulse_period", type=float)
    model.add_argument("--pulse-width", dest="pulse_width", type=float)
    model.add_argument("--pulse-amplitude", dest="pulse_amplitude", type=float)

    integration = parser.add_argument_group("integration")
    integration.add_argument("--dt", type=float, help=f"RK4 step (default: {DEFAULTS['dt']}).")
    integration.add_argument("--tau-end", dest="tau_end", type=float, help="Integration end time.")
    integration.add_argument("--sample-every", dest="sample_every", type=int, help="Records every n-th step.")
    integration.add_argument("--drift-tolerance", dest="drift_tolerance", type=float)
    integration.add_argument(
        "--strict",
        action="store_const",
        const=True,
        default=None,
        help="Fail on accuracy drift (exit 3) and on convergence radius breaches (exit 4).",
    )

    diagnostics = parser.add_argument_group("diagnostics")
    diagnostics.add_argument("--window", type=float, help="End of the squeezing minimum window (sweeps).")
    diagnostics.add_argument("--classify-horizon", dest="classify_horizon", type=float)
    diagnostics.add_argument("--tau-total", dest="tau_total", type=float, help="Lyapunov integration time.")
    diagnostics.add_argument("--renorm-every", dest="renorm_every", type=float, help="Tangent renormalization period.")
    diagnostics.add_argument("--lambda-threshold", dest="lambda_threshold", type=float)
    diagnostics.add_argument(
        "--omega-ac",
        dest="omega_ac",
        type=float,
        help=f"Adiabatic chaos bound on Omega (default: {DEFAULTS['omega_ac']}).",
    )
    diagnostics.add_argument("--delta", type=float, help="Relative p0 perturbation of the intervals command.")

    sweep = parser.add_argument_group("sweep")
    sweep.add_argument("--axis", choices=[a.value for a in SweepAxis])
    sweep.add_argument("--from", dest="from", type=float)
    sweep.add_argument("--to", type=float)
    sweep.add_argument("--points", type=int)

    output = parser.add_argument_group("output")
    output.add_argument("--out", type=str, help="Output CSV path.")
    output.add_argument(
        "--emit-plot", dest="emit_plot", action="store_const", const=True, default=None, help="Writes a gnuplot script."
    )
    output.add_argument("--verbose", action="store_true", help="Logs debug messages.")

    add_parallel_options(parser)

    return parser


def run(config: RunConfig) -> int:
    """Executes the configured command, returns the process exit code."""

    logging.debug(f"running {config.command.value} with {config}.")
    return _COMMANDS[config.command](config)


def _simulate(config: RunConfig) -> int:
    traj = integrate(config.model, config.integration)

    rows = write_trajectory_csv(traj, config.output_path)
    logging.info(f"wrote {rows} samples to {config.output_path}.")

    _emit_plot(config, PlotKind.Trajectory)

    _check_validity(config, traj)
    return 0


def _sweep(config: RunConfig) -> int:
    spec = config.sweep

    with backend_context_for_workers(config.workers):
        rows = run_sweep(spec)

    count = write_sweep_csv(rows, config.output_path)
    logging.info(f"wrote {count} sweep rows to {config.output_path}.")

    _emit_plot(config, PlotKind.Sweep, axis=spec.axis.value)

    if config.strict:
        statuses = {row.status for row in rows}

        if RowStatus.Drift in statuses:
            logging.error("accuracy drift over tolerance on at least one grid point.")
            return InvariantDriftExceeded.exit_code

        if RowStatus.Radius in statuses:
            logging.error("convergence radius over the validity bound on at least one grid point.")
            return ValidityRadiusExceeded.exit_code

    return 0


def _intervals(config: RunConfig) -> int:
    if config.integration.tau_end < MIN_TIMELINE_END:
        raise ConfigError("tau_end", f"interval timelines must extend to at least tau={MIN_TIMELINE_END}.")

    traj = integrate(config.model, config.integration)
    intervals = squeezing_intervals(traj)

    count = write_intervals_csv(intervals, config.output_path)
    logging.info(f"wrote {count} squeezing intervals to {config.output_path}.")

    _emit_plot(config, PlotKind.Intervals)

    if config.delta is not None:
        result = sensitivity(config.model, config.delta, config.integration.tau_end, config.integration)
        _print_values({"perturbation": result.perturbation, "jaccard": result.jaccard})

    _check_validity(config, traj)
    return 0


def _classify(config: RunConfig) -> int:
    report = chaos_report(config.model, config.classify_horizon, config.classifier)

    _print_values(
        {
            "class": report.chaos_class.value,
            "lambda": report.lyapunov.lambda_,
            "kappa": report.chirikov.kappa,
            "K": report.chirikov.k_param,
            "predicted": report.chirikov.predicted.value,
            "concordant": "" if report.concordant is None else str(report.concordant).lower(),
        }
    )
    return 0


def _lyapunov(config: RunConfig) -> int:
    estimate = lyapunov_max(
        config.model, tau_total=config.tau_total, renorm_every=config.classifier.renorm_every, dt=config.classifier.dt
    )

    _print_values(
        {"lambda": estimate.lambda_, "tau_total": estimate.tau_total, "renormalizations": estimate.renorm_count}
    )
    return 0


def _chirikov(config: RunConfig) -> int:
    report = chirikov(config.model, ChirikovConfig(omega_ac=config.classifier.omega_ac))

    _print_values({"kappa": report.kappa, "K": report.k_param, "p_max": report.p_max, "regime": report.predicted.value})
    return 0


def _poincare(config: RunConfig) -> int:
    model = config.model
    period = model.drive.tau_period(model.omega)

    integration = config.integration.snapped_to_period(period)
    integration = integration.with_overrides(sample_every=round(period / integration.dt))

    traj = integrate(model, integration)
    points = poincare_section(traj)

    count = write_section_csv(points, config.output_path)
    logging.info(f"wrote {count} section points to {config.output_path}.")

    _emit_plot(config, PlotKind.Poincare)

    _check_validity(config, traj)
    return 0


_COMMANDS: Dict[Command, Callable[[RunConfig], int]] = {
    Command.Simulate: _simulate,
    Command.Sweep: _sweep,
    Command.Classify: _classify,
    Command.Intervals: _intervals,
    Command.Lyapunov: _lyapunov,
    Command.Chirikov: _chirikov,
    Command.Poincare: _poincare,
}


def _check_validity(config: RunConfig, traj: Trajectory) -> None:
    """In strict mode, a convergence radius breach fails the run once its data has been written."""

    if not config.strict or traj.validity_breach_tau is None:
        return

    index = int((traj.taus >= traj.validity_breach_tau).argmax())
    raise ValidityRadiusExceeded(traj.validity_breach_tau, float(traj.radius[index]))


def _emit_plot(config: RunConfig, kind: PlotKind, axis: str = "g") -> None:
    if not config.emit_plot:
        return

    script_path = os.path.splitext(config.output_path)[0] + ".gp"
    emit_plot_script(kind, config.output_path, script_path, axis=axis)
    logging.info(f"wrote plot script {script_path}.")


def _print_values(values: Dict[str, Any]) -> None:
    for key, value in values.items():
        print(f"{key}={repr(value) if isinstance(value, float) else value}")


def _read_config_file(path: Optional[str]) -> Optional[str]:
    if path is None:
        return None

    try:
        with open(path, encoding="utf-8") as file:
            return file.read()
    except OSError as e:
        raise ConfigError("config", f"cannot read {path}: {e}") from e


def _overrides(args: argparse.Namespace) -> Dict[str, Any]:
    ignored = {"config", "verbose"}
    return {key: value for key, value in vars(args).items() if key not in ignored}
