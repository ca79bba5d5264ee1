"""
Right-hand sides of the mean-field, fluctuation and tangent systems.

The sign convention is p = -dx/dtau, so that the driven pendulum x'' + sin(x) = -2 G F reads

    dx/dtau = -p,    dp/dtau = sin(x) + 2 G F(psi),    dpsi/dtau = Omega,    dI/dtau = -2 G x dF/dpsi

and the fluctuation second moments obey

    ds_pp/dtau = 2 cos(x) s_px,    ds_xx/dtau = -2 s_px,    ds_px/dtau = cos(x) s_xx - s_pp.

The ``*_vector`` functions work on plain tuples and are the integrator's hot path.
"""

import math
from typing import Optional, Tuple

from chaosqueeze.dynamics.object import StateDerivative, TangentVector
from chaosqueeze.model.object import FullState, ModelParams, StateVector

LinearizedVector = Tuple[float, float, float, float, float]  # (x, p, psi, dx, dp)


def rhs(state: FullState, params: ModelParams) -> StateDerivative:
    """
    Evaluates the coupled mean-field and covariance equations at ``state``.

    .. code:: python

        rhs(build_initial_state(ModelParams(g=0.0, omega=1.0)), ModelParams(g=0.0, omega=1.0))
        # StateDerivative(0.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0)

    """

    return StateDerivative(*rhs_vector(state.as_vector(), params))


def rhs_vector(y: StateVector, params: ModelParams, forcing: Optional[float] = None) -> StateVector:
    """
    :param forcing: overrides the drive value F. Used for piecewise constant drives, for which the value is frozen over
        every integration step.
    """

    x, p, psi, _, s_pp, s_xx, s_px = y

    drive = params.drive
    omega = params.omega
    two_g = 2.0 * params.g

    if forcing is None:
        forcing = drive.value(psi, omega)

    cos_x = math.cos(x)

    return (
        -p,
        math.sin(x) + two_g * forcing,
        omega,
        -two_g * x * drive.phase_derivative(psi, omega),
        2.0 * cos_x * s_px,
        -2.0 * s_px,
        cos_x * s_xx - s_pp,
    )


def tangent_rhs(state: FullState, v: TangentVector) -> TangentVector:
    """Linearization of the mean-field flow around ``state``, applied to the perturbation ``v``."""

    return TangentVector(-v.dp, math.cos(state.pendulum.x) * v.dx)


def linearized_rhs_vector(
    y: LinearizedVector, params: ModelParams, forcing: Optional[float] = None
) -> LinearizedVector:
    """Mean-field pendulum co-integrated with one tangent vector, as required by the Lyapunov estimator."""

    x, p, psi, dx, dp = y

    if forcing is None:
        forcing = params.drive.value(psi, params.omega)

    return (-p, math.sin(x) + 2.0 * params.g * forcing, params.omega, -dp, math.cos(x) * dx)
