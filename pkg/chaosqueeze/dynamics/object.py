import math

import attrs


@attrs.define(frozen=True)
class StateDerivative:
    """Rates of change per unit of dimensionless time of every component of :py:class:`FullState`."""

    d_x: float = attrs.field()
    d_p: float = attrs.field()
    d_psi: float = attrs.field()
    d_i: float = attrs.field()
    d_spp: float = attrs.field()
    d_sxx: float = attrs.field()
    d_spx: float = attrs.field()


@attrs.define(frozen=True)
class TangentVector:
    """A perturbation (dx, dp) of the mean-field trajectory."""

    dx: float = attrs.field(converter=float)
    dp: float = attrs.field(converter=float)

    @property
    def norm(self) -> float:
        return math.hypot(self.dx, self.dp)

    @classmethod
    def from_angle(cls, angle: float) -> "TangentVector":
        """Unit vector making ``angle`` with the x axis."""
        return cls(math.cos(angle), math.sin(angle))
