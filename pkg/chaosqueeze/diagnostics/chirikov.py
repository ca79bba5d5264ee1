"""
Resonance overlap predictions for the sinusoidally modulated pendulum.

With kappa = 2 G / Omega^2 (unit cooperative frequency):

* kappa >> 1 (and, numerically, kappa ~ 1): chaos when K = const / (Omega kappa^(1/4)) > 1, with oscillations up to
  p_max = 2 G / Omega. At Omega -> 0 chaos is always present but slow (adiabatic chaos).
* kappa << 1: a narrow stochastic layer around the separatrix when Omega > 1, a broad one otherwise.
"""

import math
from typing import Iterable, Optional

from chaosqueeze.diagnostics.object import ChaosClass, ChirikovConfig, ChirikovRegime, ChirikovReport
from chaosqueeze.model.object import ModelParams


def chirikov(params: ModelParams, config: ChirikovConfig = ChirikovConfig()) -> ChirikovReport:
    """
    .. code:: python

        chirikov(ModelParams(g=2.0, omega=0.5))  # kappa=16, K=10, p_max=8, GlobalChaos

    """

    g, omega = params.g, params.omega

    kappa = 2.0 * g / omega**2
    k_param = config.const / (omega * kappa**0.25) if kappa > 0 else math.inf
    p_max = 2.0 * g / omega

    return ChirikovReport(kappa=kappa, k_param=k_param, p_max=p_max, predicted=_regime(kappa, k_param, omega, config))


def _regime(kappa: float, k_param: float, omega: float, config: ChirikovConfig) -> ChirikovRegime:
    if kappa == 0:
        return ChirikovRegime.Integrable

    if kappa <= config.kappa_small:
        return ChirikovRegime.NarrowLayer if omega > 1.0 else ChirikovRegime.BroadLayer

    # Intermediate kappa values behave as the kappa >> 1 case.
    if k_param <= 1.0:
        return ChirikovRegime.Regular

    if omega <= config.omega_ac:
        return ChirikovRegime.AdiabaticChaos

    return ChirikovRegime.GlobalChaos


def is_concordant(
    report: ChirikovReport, chaos_class: ChaosClass, config: ChirikovConfig = ChirikovConfig()
) -> Optional[bool]:
    """
    Compares the resonance overlap prediction with a measured class, for strongly driven points only.

    :returns None when ``kappa`` is below ``config.kappa_large``.
    """

    if report.kappa < config.kappa_large:
        return None

    return (report.k_param > 1.0) == (chaos_class != ChaosClass.Regular)


def chirikov_concordance(
    reports: Iterable[ChirikovReport], classes: Iterable[ChaosClass], config: ChirikovConfig = ChirikovConfig()
) -> Optional[float]:
    """Fraction of strongly driven points where the prediction matches the measured class, None if there is none."""

    matches = [is_concordant(report, chaos_class, config) for report, chaos_class in zip(reports, classes)]
    matches = [m for m in matches if m is not None]

    if len(matches) == 0:
        return None

    return sum(matches) / len(matches)
