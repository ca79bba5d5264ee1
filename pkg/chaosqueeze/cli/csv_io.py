"""
CSV exports. Floats are written with ``repr()``, the shortest decimal form that reads back bit-exactly, so every file
is locale-independent and lossless.
"""

import contextlib
import csv
from typing import Iterable, List, Optional, Sequence, Tuple

import numpy as np

from chaosqueeze.errors import OutputError
from chaosqueeze.integrator.object import Trajectory
from chaosqueeze.object import Interval
from chaosqueeze.sweep.object import SweepRow

TRAJECTORY_COLUMNS = ("tau", "x", "p", "psi", "i_action", "s_pp", "s_xx", "s_px", "S", "d", "L_drift")

SWEEP_COLUMNS = ("g", "omega", "kappa", "K", "class", "s_min", "tau_at_min", "d_end", "d_growth", "lambda", "status")

INTERVAL_COLUMNS = ("tau_start", "tau_end", "length")

SECTION_COLUMNS = ("x", "p")


def write_trajectory_csv(traj: Trajectory, path: str) -> int:
    """Writes one row per trajectory sample, returns the number of rows written (header excluded)."""

    radius = traj.radius
    drift = traj.invariant_drift

    def rows():
        for i in range(len(traj)):
            state = traj.states[i]
            yield [traj.taus[i], *state, state[4], radius[i], drift[i]]

    return _write_rows(path, TRAJECTORY_COLUMNS, ([_format(v) for v in row] for row in rows()))


def read_trajectory_csv(path: str) -> np.ndarray:
    """Reads back a file written by :py:func:`write_trajectory_csv`, one array row per sample."""

    try:
        with open(path, newline="", encoding="utf-8") as file:
            reader = csv.reader(file)
            header = next(reader, None)

            if header is None or tuple(header) != TRAJECTORY_COLUMNS:
                raise OutputError(f"{path} is not a trajectory file (header {header}).")

            values = [[float(v) for v in row] for row in reader]
    except OSError as e:
        raise OutputError(f"cannot read {path}: {e}") from e

    return np.array(values, dtype=float).reshape(-1, len(TRAJECTORY_COLUMNS))


def write_sweep_csv(rows: Sequence[SweepRow], path: str) -> int:
    """Failed grid points keep their parameters and status, every other field is left empty."""

    def export_row(row: SweepRow) -> List[str]:
        if row.is_failed:
            return [_format(row.g), _format(row.omega)] + [""] * (len(SWEEP_COLUMNS) - 3) + [row.status.value]

        return [
            _format(row.g),
            _format(row.omega),
            _format(row.kappa),
            _format(row.k_param),
            row.chaos_class.value if row.chaos_class is not None else "",
            _format(row.s_min),
            _format(row.tau_at_min),
            _format(row.d_end),
            _format(row.d_growth),
            _format(row.lambda_),
            row.status.value,
        ]

    return _write_rows(path, SWEEP_COLUMNS, (export_row(row) for row in rows))


def write_intervals_csv(intervals: Iterable[Interval], path: str) -> int:
    return _write_rows(
        path, INTERVAL_COLUMNS, ([_format(start), _format(end), _format(end - start)] for start, end in intervals)
    )


def write_section_csv(points: Iterable[Tuple[float, float]], path: str) -> int:
    return _write_rows(path, SECTION_COLUMNS, ([_format(x), _format(p)] for x, p in points))


def _format(value: Optional[float]) -> str:
    if value is None:
        return ""

    return repr(float(value))


@contextlib.contextmanager
def _output_file(path: str):
    try:
        with open(path, "w", newline="", encoding="utf-8") as file:
            yield file
    except OSError as e:
        raise OutputError(f"cannot write {path}: {e}") from e


def _write_rows(path: str, header: Sequence[str], rows: Iterable[List[str]]) -> int:
    count = 0

    with _output_file(path) as file:
        writer = csv.writer(file, lineterminator="\n")
        writer.writerow(header)

        for row in rows:
            writer.writerow(row)
            count += 1

    return count
