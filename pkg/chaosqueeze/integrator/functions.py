import logging
from typing import List, Optional

import numpy as np

from chaosqueeze.dynamics.functions import rhs_vector
from chaosqueeze.errors import InvariantDriftExceeded
from chaosqueeze.integrator.object import DriftMonitor, IntegrationConfig, Trajectory
from chaosqueeze.integrator.rk4 import Vector, advance_compensated, check_finite, compensated_step, zero_carry
from chaosqueeze.model.functions import build_initial_state, invariant_of
from chaosqueeze.model.object import ModelParams
from chaosqueeze.object import VALIDITY_RADIUS, Tau


def integrate(params: ModelParams, config: IntegrationConfig) -> Trajectory:
    """
    Propagates the initial coherent state up to ``config.tau_end`` with fixed RK4 steps of ``config.dt``.

    Every ``config.sample_every``-th step is recorded, as well as the final state. The accuracy is monitored at every
    recorded sample: with the extended invariant L for the sinusoidal drive, and with a parallel run at half the step
    (Richardson estimate) for the other drives.

    .. code:: python

        trajectory = integrate(ModelParams(g=2.0, omega=0.5), IntegrationConfig(tau_end=10.0))
        trajectory.squeezing.min()

    :raises InvariantDriftExceeded: in strict mode, when the monitored drift exceeds ``config.drift_tolerance``.
    :raises NonFiniteState: when the state leaves the finite range.
    """

    drive = params.drive
    monitor = DriftMonitor.Invariant if drive.monitors_invariant else DriftMonitor.StepHalving

    y: Vector = build_initial_state(params).as_vector()
    y_half: Vector = y

    # Kahan compensations of y and y_half, carried over the whole run.
    carry = zero_carry(y)
    carry_half = carry

    initial_invariant = _invariant(y, params)

    taus: List[Tau] = [0.0]
    states: List[Vector] = [y]
    invariants: List[float] = [initial_invariant]

    max_drift = 0.0
    drift_exceeded_tau: Optional[Tau] = None
    validity_breach_tau: Optional[Tau] = _validity_breach(y, params, 0.0)

    dt = config.dt
    n_full_steps = config.n_full_steps
    final_step = config.final_step
    split_at_edges = drive.is_piecewise_constant

    logging.debug(f"integrating {params} up to tau={config.tau_end} ({n_full_steps} steps, {monitor.value} monitor).")

    def record(tau: Tau) -> None:
        nonlocal max_drift, drift_exceeded_tau, validity_breach_tau

        check_finite(y, tau)

        invariant = _invariant(y, params)

        if monitor == DriftMonitor.Invariant:
            drift = abs(invariant - initial_invariant)
        else:
            drift = _step_halving_error(y, y_half)

        max_drift = max(max_drift, drift)

        if drift > config.drift_tolerance and drift_exceeded_tau is None:
            if config.strict:
                raise InvariantDriftExceeded(tau, drift, config.drift_tolerance)

            drift_exceeded_tau = tau
            logging.warning(
                f"accuracy drift {drift:.3e} exceeds tolerance {config.drift_tolerance:.3e} at tau={tau}, "
                f"continuing (non-strict mode)."
            )

        if validity_breach_tau is None:
            validity_breach_tau = _validity_breach(y, params, tau)

        taus.append(tau)
        states.append(y)
        invariants.append(invariant)

    for step in range(n_full_steps):
        tau_start = step * dt
        tau_next = (step + 1) * dt

        if split_at_edges:
            y, carry = advance_compensated(rhs_vector, y, carry, tau_start, tau_next, params, dt)
        else:
            y, carry = compensated_step(rhs_vector, y, carry, tau_start, dt, params)

        if monitor == DriftMonitor.StepHalving:
            y_half, carry_half = advance_compensated(
                rhs_vector, y_half, carry_half, tau_start, tau_next, params, 0.5 * dt
            )

        if (step + 1) % config.sample_every == 0 or (step + 1 == n_full_steps and final_step == 0.0):
            record(tau_next)

    if final_step > 0.0:
        tau_start = n_full_steps * dt
        y, carry = advance_compensated(rhs_vector, y, carry, tau_start, config.tau_end, params, final_step)

        if monitor == DriftMonitor.StepHalving:
            y_half, carry_half = advance_compensated(
                rhs_vector, y_half, carry_half, tau_start, config.tau_end, params, 0.5 * final_step
            )

        record(config.tau_end)

    trajectory = Trajectory(
        params=params,
        config=config,
        taus=np.array(taus),
        states=np.array(states),
        invariants=np.array(invariants),
        drift_monitor=monitor,
        max_drift=max_drift,
        drift_exceeded_tau=drift_exceeded_tau,
        validity_breach_tau=validity_breach_tau,
    )

    if validity_breach_tau is not None:
        logging.warning(
            f"convergence radius exceeds {VALIDITY_RADIUS} from tau={validity_breach_tau} with N={params.n_tls}, the "
            f"1/N expansion is not reliable beyond that time."
        )

    logging.debug(f"integrated {len(trajectory)} samples, max. drift {max_drift:.3e}.")

    return trajectory


def _invariant(y: Vector, params: ModelParams) -> float:
    return invariant_of(y[0], y[1], y[2], y[3], params)


def _step_halving_error(y: Vector, y_half: Vector) -> float:
    # RK4 global error of the h-run is about 16/15 of its difference with the h/2-run.
    return max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(y, y_half)) * 16.0 / 15.0


def _validity_breach(y: Vector, params: ModelParams, tau: Tau) -> Optional[Tau]:
    radius = ((y[4] + y[5]) / params.n_tls) ** 0.5
    return tau if radius > VALIDITY_RADIUS else None
