import math
from typing import List, Tuple

import numpy as np

from chaosqueeze.errors import IncommensurateStep
from chaosqueeze.integrator.object import Trajectory

# Tolerance on the number of integration steps per drive period.
COMMENSURABILITY_TOLERANCE = 1e-6


def poincare_section(traj: Trajectory) -> List[Tuple[float, float]]:
    """
    Stroboscopic section of the trajectory: (x mod 2 pi, p) once per drive period, starting at tau = 0.

    Use :py:meth:`IntegrationConfig.snapped_to_period` to get a step dividing the drive period.

    :raises IncommensurateStep: if the drive does not repeat with its phase, or if neither the integration step nor the
        recording stride divide the drive period.
    """

    params = traj.params
    if not params.drive.is_phase_periodic:
        raise IncommensurateStep(f"{type(params.drive).__name__} drive has no stroboscopic section.")

    period = params.drive.tau_period(params.omega)
    dt = traj.config.dt

    steps_per_period = period / dt
    rounded = round(steps_per_period)

    if rounded < 1 or abs(steps_per_period - rounded) > COMMENSURABILITY_TOLERANCE:
        raise IncommensurateStep(f"step {dt} does not divide the drive period {period} ({steps_per_period} steps).")

    if rounded % traj.config.sample_every != 0:
        raise IncommensurateStep(
            f"recording stride {traj.config.sample_every} does not divide the {rounded} steps of a drive period."
        )

    step_indices = np.rint(traj.taus / dt).astype(np.int64)
    on_section = np.flatnonzero(
        (step_indices % rounded == 0) & (np.abs(traj.taus - step_indices * dt) <= COMMENSURABILITY_TOLERANCE * dt)
    )

    return [(float(traj.states[i, 0]) % (2 * math.pi), float(traj.states[i, 1])) for i in on_section]
