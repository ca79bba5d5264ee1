"""
Squeezing observables of the normalized fluctuation covariance.
"""

import math
from typing import List, Tuple

import numpy as np

from chaosqueeze.diagnostics.object import SqueezingReport
from chaosqueeze.dynamics.functions import rhs_vector
from chaosqueeze.errors import WindowOutOfRange
from chaosqueeze.integrator.object import Trajectory
from chaosqueeze.integrator.rk4 import advance_vector
from chaosqueeze.model.object import CovarianceState
from chaosqueeze.object import SQUEEZING_THRESHOLD, VALIDITY_RADIUS, Interval, Tau

# Bisection stops when both the time and the value tolerances are met, or when the time bracket cannot shrink anymore.
MAX_BISECTIONS = 80

# |S - 3| at a refined crossing, unless the time bracket collapses first.
CROSSING_VALUE_TOLERANCE = 3e-7

# The minimum is refined by re-integrating around the discrete minimum at this multiple of the sampling density.
MIN_REFINEMENT_DENSITY = 10


def squeezing(cov: CovarianceState) -> float:
    """S = N <(Delta p)^2>. The field is squeezed iff S < 3 (S = 3 is the coherent state)."""

    return cov.s_pp


def is_squeezed(s: float) -> bool:
    return s < SQUEEZING_THRESHOLD


def convergence_radius(cov: CovarianceState, n_tls: int) -> float:
    """d = sqrt((s_pp + s_xx) / N). Use :py:func:`within_validity` to check the 1/N expansion bound."""

    if n_tls < 1:
        raise ValueError(f"`n_tls` must be positive, got {n_tls!r}.")

    return math.sqrt((cov.s_pp + cov.s_xx) / n_tls)


def within_validity(radius: float) -> bool:
    return radius <= VALIDITY_RADIUS


def squeezing_intervals(traj: Trajectory, refine_tol: Tau = 1e-6) -> List[Interval]:
    """
    Returns the maximal time intervals during which S < 3.

    Crossings of S = 3 are detected between consecutive samples, then refined by bisection, re-integrating from the
    preceding sample. An interval still open at the end of the trajectory is closed at its last sample. Excursions
    shorter than the sampling interval can be missed.
    """

    if len(traj) < 2:
        raise ValueError("squeezing intervals require at least two samples.")

    inside = traj.squeezing < SQUEEZING_THRESHOLD
    taus = traj.taus

    intervals: List[Interval] = []
    start = float(taus[0]) if inside[0] else None

    for i in np.flatnonzero(inside[1:] != inside[:-1]):
        crossing = _refine_crossing(traj, int(i), refine_tol)

        if inside[i + 1]:
            start = crossing
        else:
            assert start is not None
            if crossing > start:
                intervals.append((start, crossing))
            start = None

    if start is not None and traj.tau_end > start:
        intervals.append((start, traj.tau_end))

    return intervals


def min_squeezing(traj: Trajectory, window: Interval) -> Tuple[float, Tau]:
    """
    Returns the smallest S over ``window`` and the time at which it is reached (earliest time on ties).

    The discrete minimum over the recorded samples is refined by re-integrating the neighbouring sample intervals at 10
    times the sampling density.

    :raises WindowOutOfRange: if the window is empty or not within the trajectory time span.
    """

    window_start, window_end = window
    eps = 1e-9 * max(1.0, traj.tau_end)

    if not (window_start < window_end and window_start >= traj.taus[0] - eps and window_end <= traj.tau_end + eps):
        raise WindowOutOfRange(f"window {window} is not within the trajectory span [0, {traj.tau_end}].")

    indices = np.flatnonzero((traj.taus >= window_start - eps) & (traj.taus <= window_end + eps))

    if len(indices) == 0:
        raise WindowOutOfRange(f"window {window} does not contain any trajectory sample.")

    best = indices[int(np.argmin(traj.squeezing[indices]))]
    s_min = float(traj.squeezing[best])
    tau_at_min = float(traj.taus[best])

    first = max(best - 1, indices[0])
    last = min(best + 1, indices[-1])

    if first == last:
        return s_min, tau_at_min

    params = traj.params
    n_points = MIN_REFINEMENT_DENSITY * (last - first)
    sub_taus = np.linspace(traj.taus[first], traj.taus[last], n_points + 1)
    max_step = min(traj.config.dt, (sub_taus[1] - sub_taus[0]))

    y = tuple(float(v) for v in traj.states[first])
    for tau_from, tau_to in zip(sub_taus[:-1], sub_taus[1:]):
        y = advance_vector(rhs_vector, y, float(tau_from), float(tau_to), params, max_step)

        if window_start - eps <= tau_to <= window_end + eps and y[4] < s_min:
            s_min = float(y[4])
            tau_at_min = float(tau_to)

    return s_min, tau_at_min


def squeezing_report(traj: Trajectory, window: Interval, refine_tol: Tau = 1e-6) -> SqueezingReport:
    """Bundles the minimum over ``window`` and the squeezing intervals clipped to ``window``."""

    s_min, tau_at_min = min_squeezing(traj, window)

    window_start, window_end = window
    clipped = [
        (max(start, window_start), min(end, window_end))
        for start, end in squeezing_intervals(traj, refine_tol)
        if end > window_start and start < window_end
    ]

    return SqueezingReport(s_min=s_min, tau_at_min=tau_at_min, intervals=clipped)


def interval_measure(intervals: List[Interval]) -> float:
    return math.fsum(end - start for start, end in intervals)


def intersect_intervals(a: List[Interval], b: List[Interval]) -> List[Interval]:
    """Intersection of two ordered lists of disjoint intervals."""

    result: List[Interval] = []
    i = j = 0

    while i < len(a) and j < len(b):
        start = max(a[i][0], b[j][0])
        end = min(a[i][1], b[j][1])

        if start < end:
            result.append((start, end))

        if a[i][1] < b[j][1]:
            i += 1
        else:
            j += 1

    return result


def _refine_crossing(traj: Trajectory, index: int, refine_tol: Tau) -> Tau:
    """Bisects the S = 3 crossing between samples ``index`` and ``index + 1``."""

    params = traj.params
    max_step = traj.config.dt

    tau_origin = float(traj.taus[index])
    y_origin = tuple(float(v) for v in traj.states[index])

    def s_at(tau: Tau) -> float:
        return advance_vector(rhs_vector, y_origin, tau_origin, tau, params, max_step)[4]

    low, high = tau_origin, float(traj.taus[index + 1])
    s_low, s_high = float(traj.squeezing[index]), float(traj.squeezing[index + 1])
    low_inside = s_low < SQUEEZING_THRESHOLD

    for _ in range(MAX_BISECTIONS):
        best_tau, best_s = _closest_to_threshold((low, s_low), (high, s_high))

        if high - low <= refine_tol and abs(best_s - SQUEEZING_THRESHOLD) < CROSSING_VALUE_TOLERANCE:
            return best_tau

        middle = 0.5 * (low + high)
        if middle <= low or middle >= high:
            break

        s_middle = s_at(middle)

        if (s_middle < SQUEEZING_THRESHOLD) == low_inside:
            low, s_low = middle, s_middle
        else:
            high, s_high = middle, s_middle

    return _closest_to_threshold((low, s_low), (high, s_high))[0]


def _closest_to_threshold(a: Tuple[Tau, float], b: Tuple[Tau, float]) -> Tuple[Tau, float]:
    return a if abs(a[1] - SQUEEZING_THRESHOLD) <= abs(b[1] - SQUEEZING_THRESHOLD) else b
