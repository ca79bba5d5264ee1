"""
Classic fourth-order Runge-Kutta steps over plain tuples.

Piecewise constant drives (pulse trains) are handled by never letting a step straddle a discontinuity, and by
freezing the drive value over every step to its value at the step midpoint.
"""

import math
from typing import Callable, Optional, Sequence, Tuple

from chaosqueeze.dynamics.functions import rhs_vector
from chaosqueeze.errors import NonFiniteState
from chaosqueeze.model.drive import drive_value
from chaosqueeze.model.object import STATE_COMPONENTS, FullState, ModelParams
from chaosqueeze.object import Tau

Vector = Tuple[float, ...]
RightHandSide = Callable[[Vector, ModelParams, Optional[float]], Vector]


def rk4_step(state: FullState, params: ModelParams, h: float) -> FullState:
    """
    Advances the 7-dimensional state by one RK4 step of length ``h``.

    :raises NonFiniteState: if any component of the updated state is not finite.
    """

    if not h > 0:
        raise ValueError(f"step must be positive, got {h!r}.")

    y = step_vector(rhs_vector, state.as_vector(), state.tau, h, params)
    check_finite(y, state.tau + h)

    return FullState.from_vector(y, state.tau + h)


def rk4_increment(f: RightHandSide, y: Vector, tau: Tau, h: float, params: ModelParams) -> Vector:
    """The change of ``y`` over one RK4 step of length ``h``."""

    if params.drive.is_piecewise_constant:
        forcing: Optional[float] = drive_value(params.drive, params.omega, tau + 0.5 * h)
    else:
        forcing = None

    half = 0.5 * h

    k1 = f(y, params, forcing)
    k2 = f(tuple(a + half * b for a, b in zip(y, k1)), params, forcing)
    k3 = f(tuple(a + half * b for a, b in zip(y, k2)), params, forcing)
    k4 = f(tuple(a + h * b for a, b in zip(y, k3)), params, forcing)

    sixth = h / 6.0
    return tuple(sixth * (b1 + 2.0 * b2 + 2.0 * b3 + b4) for b1, b2, b3, b4 in zip(k1, k2, k3, k4))


def step_vector(f: RightHandSide, y: Vector, tau: Tau, h: float, params: ModelParams) -> Vector:
    return tuple(a + d for a, d in zip(y, rk4_increment(f, y, tau, h, params)))


def compensated_step(
    f: RightHandSide, y: Vector, carry: Vector, tau: Tau, h: float, params: ModelParams
) -> Tuple[Vector, Vector]:
    """
    RK4 step whose update is accumulated with Kahan summation.

    ``carry`` holds the low-order bits lost by the previous updates, start with :py:func:`zero_carry`.
    """

    return compensated_add(y, carry, rk4_increment(f, y, tau, h, params))


def compensated_add(y: Vector, carry: Vector, increment: Vector) -> Tuple[Vector, Vector]:
    values = []
    carries = []

    for a, c, d in zip(y, carry, increment):
        corrected = d - c
        total = a + corrected
        carries.append((total - a) - corrected)
        values.append(total)

    return tuple(values), tuple(carries)


def zero_carry(y: Vector) -> Vector:
    return (0.0,) * len(y)


def advance_vector(
    f: RightHandSide, y: Vector, tau_start: Tau, tau_end: Tau, params: ModelParams, max_step: float
) -> Vector:
    """
    Integrates from ``tau_start`` to ``tau_end`` with equal steps no longer than ``max_step``, splitting the range at
    the drive's discontinuities.
    """

    return advance_compensated(f, y, zero_carry(y), tau_start, tau_end, params, max_step)[0]


def advance_compensated(
    f: RightHandSide, y: Vector, carry: Vector, tau_start: Tau, tau_end: Tau, params: ModelParams, max_step: float
) -> Tuple[Vector, Vector]:
    """Same as :py:func:`advance_vector`, carrying the summation compensation in and out."""

    if tau_end <= tau_start:
        return y, carry

    bounds = [tau_start, *params.drive.edges(tau_start, tau_end), tau_end]

    for segment_start, segment_end in zip(bounds[:-1], bounds[1:]):
        length = segment_end - segment_start
        n_steps = max(1, math.ceil(length / max_step - 1e-9))
        h = length / n_steps

        for i in range(n_steps):
            y, carry = compensated_step(f, y, carry, segment_start + i * h, h, params)

    return y, carry


def advance(state: FullState, tau_target: Tau, params: ModelParams, max_step: float) -> FullState:
    """Re-integrates ``state`` up to ``tau_target``, e.g. from a recorded trajectory sample."""

    if tau_target < state.tau:
        raise ValueError(f"cannot integrate backward from tau={state.tau!r} to tau={tau_target!r}.")

    y = advance_vector(rhs_vector, state.as_vector(), state.tau, tau_target, params, max_step)
    check_finite(y, tau_target)

    return FullState.from_vector(y, tau_target)


def check_finite(y: Sequence[float], tau: Tau, components: Sequence[str] = STATE_COMPONENTS) -> None:
    for name, value in zip(components, y):
        if not math.isfinite(value):
            raise NonFiniteState(tau, name)
