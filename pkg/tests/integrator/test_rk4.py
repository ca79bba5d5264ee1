import math
import unittest

from chaosqueeze.dynamics.functions import rhs_vector
from chaosqueeze.errors import NonFiniteState
from chaosqueeze.integrator.rk4 import advance, advance_vector, check_finite, compensated_add, rk4_step, zero_carry
from chaosqueeze.model.drive import PulseTrain
from chaosqueeze.model.functions import build_initial_state
from chaosqueeze.model.object import ModelParams


class TestRK4(unittest.TestCase):
    def test_step(self):
        params = ModelParams(g=1.0, omega=0.5, p0=0.3)
        state = rk4_step(build_initial_state(params), params, 0.01)

        self.assertAlmostEqual(state.tau, 0.01)
        self.assertAlmostEqual(state.pendulum.x, -0.003, places=4)
        self.assertAlmostEqual(state.pendulum.psi, 0.005)

        with self.assertRaises(ValueError):
            rk4_step(state, params, 0.0)

    def test_fourth_order_convergence(self):
        params = ModelParams(g=0.0, omega=1.0, p0=0.5)
        y0 = build_initial_state(params).as_vector()

        def solve(h):
            return advance_vector(rhs_vector, y0, 0.0, 5.0, params, h)

        reference = solve(0.0125)

        def error(h):
            return max(abs(a - b) for a, b in zip(solve(h)[:2], reference[:2]))

        self.assertGreater(error(0.1) / error(0.05), 10.0)

    def test_advance(self):
        params = ModelParams(g=0.5, omega=1.0, p0=0.2)
        state = build_initial_state(params)

        later = advance(state, 1.0, params, max_step=0.01)
        self.assertEqual(later.tau, 1.0)

        self.assertEqual(advance(state, 0.0, params, max_step=0.01), state)

        with self.assertRaises(ValueError):
            advance(later, 0.5, params, max_step=0.01)

    def test_steps_split_at_pulse_edges(self):
        params = ModelParams(g=1.0, omega=1.0, drive=PulseTrain(period=1.0, width=0.45))
        y0 = build_initial_state(params).as_vector()

        coarse = advance_vector(rhs_vector, y0, 0.0, 2.0, params, 0.1)
        fine = advance_vector(rhs_vector, y0, 0.0, 2.0, params, 0.001)

        for a, b in zip(coarse, fine):
            self.assertAlmostEqual(a, b, delta=1e-4)

    def test_compensated_add(self):
        y = (1.0, 0.0)
        carry = zero_carry(y)

        for _ in range(10):
            y, carry = compensated_add(y, carry, (1e-16, 1e-16))

        # A plain sum would stay at 1.0, each increment being below half an ulp.
        self.assertLessEqual(abs(y[0] - (1.0 + 1e-15)), 2.5e-16)
        self.assertAlmostEqual(y[1], 1e-15, places=25)

    def test_check_finite(self):
        check_finite((0.0, 1.0, 2.0), 0.0, ("x", "p", "psi"))

        with self.assertRaises(NonFiniteState) as context:
            check_finite((0.0, math.inf, 2.0), 1.5, ("x", "p", "psi"))

        self.assertEqual(context.exception.component, "p")
        self.assertEqual(context.exception.tau, 1.5)


if __name__ == "__main__":
    unittest.main()
