import logging
import math

import numpy as np
from sklearn.base import BaseEstimator
from sklearn.linear_model import LinearRegression
from sklearn.pipeline import Pipeline
from sklearn.preprocessing import FunctionTransformer

from chaosqueeze.diagnostics.object import GrowthFit, LyapunovEstimate
from chaosqueeze.dynamics.functions import linearized_rhs_vector
from chaosqueeze.integrator.object import Trajectory
from chaosqueeze.integrator.rk4 import advance_vector, check_finite
from chaosqueeze.model.object import ModelParams
from chaosqueeze.object import Tau

LINEARIZED_COMPONENTS = ("x", "p", "psi", "dx", "dp")


def lyapunov_max(
    params: ModelParams,
    tau_total: Tau = 200.0,
    renorm_every: Tau = 1.0,
    dt: float = 1e-2,
    tangent_angle: float = 0.0,
) -> LyapunovEstimate:
    """
    Estimates the maximal Lyapunov exponent by co-integrating one tangent vector with the mean-field trajectory.

    The tangent vector is renormalized to unit length every ``renorm_every``, and the exponent is the accumulated sum of
    the logarithms of its norms divided by ``tau_total``.

    :param tangent_angle: direction of the initial unit tangent vector. The default (dx, dp) = (1, 0) is tangent to the
        unperturbed flow at x = 0.
    :raises NonFiniteState: if the tangent system blows up.
    """

    if renorm_every <= 0 or tau_total < 100 * renorm_every * (1 - 1e-9):
        raise ValueError(
            f"`tau_total` ({tau_total}) must cover at least 100 renormalizations of `renorm_every` ({renorm_every})."
        )

    y = (0.0, params.p0, 0.0, math.cos(tangent_angle), math.sin(tangent_angle))

    log_sum = 0.0
    renorm_count = 0
    tau = 0.0

    n_segments = math.ceil(tau_total / renorm_every - 1e-9)

    for segment in range(n_segments):
        tau_next = min(tau_total, (segment + 1) * renorm_every)

        y = advance_vector(linearized_rhs_vector, y, tau, tau_next, params, dt)
        check_finite(y, tau_next, LINEARIZED_COMPONENTS)

        norm = math.hypot(y[3], y[4])
        log_sum += math.log(norm)
        renorm_count += 1

        y = (y[0], y[1], y[2], y[3] / norm, y[4] / norm)
        tau = tau_next

    estimate = LyapunovEstimate(lambda_=log_sum / tau_total, tau_total=tau_total, renorm_count=renorm_count)

    logging.debug(f"maximal Lyapunov exponent of {params}: {estimate.lambda_:.4e} ({renorm_count} renormalizations).")

    return estimate


def fit_growth_laws(traj: Trajectory) -> GrowthFit:
    """
    Fits the convergence radius d(tau) with an exponential law and with a power law.

    Chaotic motion makes d grow exponentially, at a rate close to the maximal Lyapunov exponent, while regular motion
    makes it grow as a power of time.
    """

    taus = traj.taus.reshape(-1, 1)
    log_radius = np.log(traj.radius)

    exponential = exponential_regressor()
    exponential.fit(taus, log_radius)

    power = power_law_regressor()
    power.fit(taus, log_radius)

    return GrowthFit(
        exponential_r2=float(exponential.score(taus, log_radius)),
        power_r2=float(power.score(taus, log_radius)),
        exponential_rate=float(dict(exponential.steps)["linear"].coef_[0]),
        power_exponent=float(dict(power.steps)["linear"].coef_[0]),
    )


def exponential_regressor() -> BaseEstimator:
    """log d = a + rate * tau"""
    return Pipeline(steps=[("linear", LinearRegression())])


def power_law_regressor() -> BaseEstimator:
    """log d = a + exponent * log(1 + tau)"""
    return Pipeline(steps=[("log", FunctionTransformer(func=np.log1p)), ("linear", LinearRegression())])
