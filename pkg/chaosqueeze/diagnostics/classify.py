import logging

from chaosqueeze.diagnostics.chirikov import chirikov, is_concordant
from chaosqueeze.diagnostics.lyapunov import lyapunov_max
from chaosqueeze.diagnostics.object import ChaosClass, ChaosReport, ChirikovConfig, ClassifierConfig, LyapunovEstimate
from chaosqueeze.model.object import ModelParams
from chaosqueeze.object import Tau

MIN_HORIZON = 50.0


def classify(params: ModelParams, horizon: Tau = 200.0, config: ClassifierConfig = ClassifierConfig()) -> ChaosClass:
    """
    Classifies the motion as regular, chaotic or adiabatically chaotic from the maximal Lyapunov exponent measured
    over ``horizon``.
    """

    return classify_estimate(measure_lyapunov(params, horizon, config), params, config)


def classify_estimate(estimate: LyapunovEstimate, params: ModelParams, config: ClassifierConfig) -> ChaosClass:
    if estimate.lambda_ <= config.lambda_threshold:
        return ChaosClass.Regular

    if params.omega <= config.omega_ac:
        return ChaosClass.AdiabaticChaos

    return ChaosClass.Chaotic


def measure_lyapunov(params: ModelParams, horizon: Tau, config: ClassifierConfig) -> LyapunovEstimate:
    if horizon < MIN_HORIZON:
        raise ValueError(f"classification horizon must be at least {MIN_HORIZON}, got {horizon}.")

    # Short horizons get more frequent renormalizations, to keep at least 100 of them.
    renorm_every = min(config.renorm_every, horizon / 100)

    return lyapunov_max(params, tau_total=horizon, renorm_every=renorm_every, dt=config.dt)


def chaos_report(
    params: ModelParams,
    horizon: Tau = 200.0,
    config: ClassifierConfig = ClassifierConfig(),
    chirikov_config: ChirikovConfig = ChirikovConfig(),
) -> ChaosReport:
    """Measured class and exponent next to the resonance overlap prediction. The prediction never overrides the
    measurement."""

    estimate = measure_lyapunov(params, horizon, config)
    chaos_class = classify_estimate(estimate, params, config)
    prediction = chirikov(params, chirikov_config)

    concordant = is_concordant(prediction, chaos_class, chirikov_config)

    if concordant is False:
        logging.info(
            f"{params}: K={prediction.k_param:.3g} disagrees with the measured class {chaos_class.name} "
            f"(lambda={estimate.lambda_:.3e})."
        )

    return ChaosReport(lyapunov=estimate, chirikov=prediction, chaos_class=chaos_class, concordant=concordant)
