import math
import unittest

from chaosqueeze.diagnostics.poincare import poincare_section
from chaosqueeze.errors import IncommensurateStep
from chaosqueeze.integrator.functions import integrate
from chaosqueeze.integrator.object import IntegrationConfig
from chaosqueeze.model.drive import PulseTrain
from chaosqueeze.model.object import ModelParams

PARAMS = ModelParams(g=0.0, omega=1.0, p0=0.5)
PERIOD = 2 * math.pi


class TestPoincareSection(unittest.TestCase):
    def _snapped_config(self, periods: int) -> IntegrationConfig:
        config = IntegrationConfig(tau_end=periods * PERIOD, dt=1e-2, strict=False).snapped_to_period(PERIOD)
        return config.with_overrides(sample_every=round(PERIOD / config.dt))

    def test_section(self):
        points = poincare_section(integrate(PARAMS, self._snapped_config(10)))

        self.assertEqual(len(points), 11)
        self.assertEqual(points[0], (0.0, 0.5))

        for x, p in points:
            self.assertTrue(0.0 <= x < 2 * math.pi)
            # Undriven pendulum: the section lies on the energy level of the initial state.
            self.assertAlmostEqual(0.5 * p * p - math.cos(x), 0.125 - 1.0, places=6)

    def test_incommensurate_step(self):
        with self.assertRaises(IncommensurateStep):
            poincare_section(integrate(PARAMS, IntegrationConfig(tau_end=20.0, dt=0.3, strict=False)))

    def test_incommensurate_stride(self):
        config = self._snapped_config(2)
        config = config.with_overrides(sample_every=config.sample_every + 1)

        with self.assertRaises(IncommensurateStep):
            poincare_section(integrate(PARAMS, config))

    def test_pulse_train_has_no_section(self):
        params = ModelParams(g=1.0, omega=1.0, p0=0.5, drive=PulseTrain(period=PERIOD, width=1.0))
        traj = integrate(params, self._snapped_config(2))

        with self.assertRaises(IncommensurateStep):
            poincare_section(traj)


if __name__ == "__main__":
    unittest.main()
