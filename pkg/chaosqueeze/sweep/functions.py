import logging
from collections import Counter
from typing import List, Optional

from chaosqueeze.diagnostics.chirikov import chirikov, chirikov_concordance
from chaosqueeze.diagnostics.classify import classify_estimate, measure_lyapunov
from chaosqueeze.diagnostics.squeezing import intersect_intervals, interval_measure, min_squeezing, squeezing_intervals
from chaosqueeze.errors import ChaosqueezeError
from chaosqueeze.functions import parallel_timed_map
from chaosqueeze.integrator.functions import integrate
from chaosqueeze.integrator.object import IntegrationConfig
from chaosqueeze.model.object import ModelParams
from chaosqueeze.object import Interval, Tau
from chaosqueeze.profiler.functions import log_sweep_trace
from chaosqueeze.profiler.object import GridPointTrace, SweepTrace
from chaosqueeze.sweep.object import RowStatus, SensitivityResult, SweepRow, SweepSpec

MIN_TIMELINE_END = 10.0

# Below this fraction of agreeing strongly driven rows, the resonance overlap estimate is reported as unreliable.
CONCORDANCE_WARNING_THRESHOLD = 0.8


def run_sweep(spec: SweepSpec) -> List[SweepRow]:
    """
    Evaluates every grid point of ``spec``, on the current parallel backend when one is set.

    Rows are returned in increasing axis value order. A grid point that fails is returned as a
    :py:attr:`RowStatus.Failed` row and never aborts the sweep.

    .. code:: python

        with set_parallel_backend_context("local_multiprocessing", max_workers=4):
            rows = run_sweep(SweepSpec.default_g_scan())

    """

    values = [float(v) for v in spec.axis_values]
    params = [spec.params_at(v) for v in values]

    logging.info(
        f"sweeping {spec.axis.value} over [{spec.from_:g}, {spec.to:g}] ({spec.points} points, window "
        f"tau={spec.window:g})."
    )

    rows: List[SweepRow] = []
    trace = SweepTrace()

    for value, (row, duration) in zip(values, parallel_timed_map(evaluate_sweep_point, params, [spec] * len(params))):
        logging.debug(f"{spec.axis.value}={value:g}: {row.status.value} ({duration / 1e6 if duration else 0:.1f}ms).")

        rows.append(row)
        trace.point_traces.append(GridPointTrace(axis_value=value, duration=duration))

    log_sweep_trace(trace)

    statuses = Counter(row.status for row in rows)
    logging.info("sweep statuses: " + ", ".join(f"{s.value}={statuses[s]}" for s in RowStatus))

    _log_concordance(rows, spec)

    return rows


def evaluate_sweep_point(params: ModelParams, spec: SweepSpec) -> SweepRow:
    """Computes a single sweep row. Must stay at module level, as it is sent to worker processes."""

    prediction = chirikov(params, spec.chirikov)
    row_fields = dict(g=params.g, omega=params.omega, kappa=prediction.kappa, k_param=prediction.k_param)

    try:
        traj = integrate(params, spec.window_config)

        s_min, tau_at_min = min_squeezing(traj, (0.0, spec.window))

        radius = traj.radius
        d_end = float(radius[-1])
        d_growth = float(radius[-1] / radius[0])

        estimate = measure_lyapunov(params, spec.classify_horizon, spec.classifier)
        chaos_class = classify_estimate(estimate, params, spec.classifier)
    except (ChaosqueezeError, ArithmeticError, ValueError) as e:
        logging.warning(f"sweep point {params} failed: {e}")
        return SweepRow(status=RowStatus.Failed, failure_reason=f"{e.__class__.__name__}: {e}", **row_fields)

    if traj.drift_exceeded_tau is not None:
        status = RowStatus.Drift
        reason: Optional[str] = f"accuracy drift over tolerance from tau={traj.drift_exceeded_tau:g}"
    elif traj.validity_breach_tau is not None:
        status = RowStatus.Radius
        reason = f"convergence radius over the validity bound from tau={traj.validity_breach_tau:g}"
    else:
        status = RowStatus.Ok
        reason = None

    return SweepRow(
        status=status,
        s_min=s_min,
        tau_at_min=tau_at_min,
        d_end=d_end,
        d_growth=d_growth,
        lambda_=estimate.lambda_,
        chaos_class=chaos_class,
        failure_reason=reason,
        **row_fields,
    )


def interval_timeline(params: ModelParams, tau_end: Tau, config: Optional[IntegrationConfig] = None) -> List[Interval]:
    """
    Integrates up to ``tau_end`` and returns the squeezing intervals (S < 3) over ``[0, tau_end]``.

    :param config: integration settings, its ``tau_end`` is replaced. Defaults to a non-strict run at the default step.
    """

    if tau_end < MIN_TIMELINE_END:
        raise ValueError(f"interval timelines must extend to at least tau={MIN_TIMELINE_END}, got {tau_end}.")

    if config is None:
        config = IntegrationConfig(tau_end=tau_end, strict=False)
    else:
        config = config.with_overrides(tau_end=tau_end)

    return squeezing_intervals(integrate(params, config))


def sensitivity(
    params: ModelParams, delta: float, tau_end: Tau = 50.0, config: Optional[IntegrationConfig] = None
) -> SensitivityResult:
    """
    Compares the squeezing intervals of ``params`` with those of a run where the initial momentum is changed by the
    relative amount ``delta`` (by the absolute amount ``delta`` when ``p0 = 0``).
    """

    if not delta > 0.0:
        raise ValueError(f"the perturbation must be positive, got {delta!r}.")

    if params.p0 == 0.0:
        perturbed_p0 = delta
        description = f"p0: 0 -> {delta:g} (additive)"
    else:
        perturbed_p0 = params.p0 * (1.0 + delta)
        description = f"p0: {params.p0:g} -> {perturbed_p0:g} (relative {delta:g})"

    perturbed = params.with_overrides(p0=perturbed_p0)

    base_intervals = interval_timeline(params, tau_end, config)

    if perturbed == params:
        perturbed_intervals = list(base_intervals)
    else:
        perturbed_intervals = interval_timeline(perturbed, tau_end, config)

    jaccard = jaccard_index(base_intervals, perturbed_intervals)

    logging.info(f"squeezing interval overlap under {description}: {jaccard:.3f}.")

    return SensitivityResult(
        base_intervals=base_intervals,
        perturbed_intervals=perturbed_intervals,
        jaccard=jaccard,
        perturbation=description,
    )


def jaccard_index(a: List[Interval], b: List[Interval]) -> float:
    """Time measure of the intersection over time measure of the union. Two empty sets fully overlap."""

    intersection = interval_measure(intersect_intervals(a, b))
    union = interval_measure(a) + interval_measure(b) - intersection

    if union <= 0.0:
        return 1.0

    return min(1.0, max(0.0, intersection / union))


def _log_concordance(rows: List[SweepRow], spec: SweepSpec) -> None:
    evaluated = [row for row in rows if row.chaos_class is not None]

    reports = [chirikov(ModelParams(g=row.g, omega=row.omega), spec.chirikov) for row in evaluated]
    classes = [row.chaos_class for row in evaluated]

    concordance = chirikov_concordance(reports, classes, spec.chirikov)

    if concordance is None:
        logging.info(f"no strongly driven point (kappa >= {spec.chirikov.kappa_large:g}) to compare with K.")
    elif concordance < CONCORDANCE_WARNING_THRESHOLD:
        logging.warning(f"resonance overlap prediction agrees with the measured class on {concordance:.0%} of points.")
    else:
        logging.info(f"resonance overlap prediction agrees with the measured class on {concordance:.0%} of points.")
