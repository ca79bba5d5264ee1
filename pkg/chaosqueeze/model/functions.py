import math

from chaosqueeze.model.object import BlochObservables, CovarianceState, FullState, ModelParams, PendulumState

# Coherent field and spin states give N * 4 <(delta alpha)^2> = N * 4 R^2 <(delta beta)^2> = 1, to which the
# normalized variances add their 2/N offset (2 once multiplied by N).
COHERENT_VARIANCE = 1.0 + 2.0


def build_initial_state(params: ModelParams) -> FullState:
    """
    Field in a coherent state, atoms in their ground state: x = 0, p = p0, and isotropic fluctuations.

    .. code:: python

        build_initial_state(ModelParams(g=2.0, omega=0.5, p0=1.0)).cov  # CovarianceState(3.0, 3.0, 0.0)

    """

    return FullState(
        pendulum=PendulumState(x=0.0, p=params.p0, psi=0.0, i_action=0.0),
        cov=CovarianceState(s_pp=COHERENT_VARIANCE, s_xx=COHERENT_VARIANCE, s_px=0.0),
        tau=0.0,
    )


def extended_invariant(state: FullState, params: ModelParams) -> float:
    """
    Returns L = p^2/2 - cos(x) + 2 G x F(psi) + Omega I.

    L is conserved by the extended autonomous flow. For the sinusoidal drive F(psi) = sin(psi).
    """

    pendulum = state.pendulum
    return invariant_of(pendulum.x, pendulum.p, pendulum.psi, pendulum.i_action, params)


def invariant_of(x: float, p: float, psi: float, i_action: float, params: ModelParams) -> float:
    forcing = params.drive.value(psi, params.omega)
    return 0.5 * p * p - math.cos(x) + 2.0 * params.g * x * forcing + params.omega * i_action


def bloch_observables(state: FullState) -> BlochObservables:
    """Atomic polarization, inversion and field amplitude of the mean-field state."""

    x = state.pendulum.x
    return BlochObservables(j_plus=-0.5 * math.sin(x), j_z=-0.5 * math.cos(x), alpha=0.5 * state.pendulum.p)
