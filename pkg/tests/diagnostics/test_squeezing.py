import math
import unittest

import numpy as np

from chaosqueeze.diagnostics.squeezing import (
    convergence_radius,
    intersect_intervals,
    interval_measure,
    is_squeezed,
    min_squeezing,
    squeezing,
    squeezing_intervals,
    squeezing_report,
    within_validity,
)
from chaosqueeze.dynamics.functions import rhs_vector
from chaosqueeze.errors import WindowOutOfRange
from chaosqueeze.integrator.functions import integrate
from chaosqueeze.integrator.object import IntegrationConfig
from chaosqueeze.integrator.rk4 import advance_vector
from chaosqueeze.model.object import CovarianceState, ModelParams

MARGIN = 1e-9


class TestSqueezingObservables(unittest.TestCase):
    def test_squeezing(self):
        self.assertEqual(squeezing(CovarianceState(2.5, 4.0, 0.3)), 2.5)

        self.assertTrue(is_squeezed(2.999))
        self.assertFalse(is_squeezed(3.0))

    def test_convergence_radius(self):
        self.assertAlmostEqual(convergence_radius(CovarianceState(3.0, 3.0), 10**6), math.sqrt(6e-6))
        self.assertTrue(within_validity(0.01))
        self.assertFalse(within_validity(0.0101))

        with self.assertRaises(ValueError):
            convergence_radius(CovarianceState(3.0, 3.0), 0)

    def test_interval_algebra(self):
        a = [(0.0, 2.0), (3.0, 5.0)]
        b = [(1.0, 4.0), (4.5, 6.0)]

        self.assertListEqual(intersect_intervals(a, b), [(1.0, 2.0), (3.0, 4.0), (4.5, 5.0)])
        self.assertListEqual(intersect_intervals(a, []), [])
        self.assertEqual(interval_measure(a), 4.0)
        self.assertEqual(interval_measure([]), 0.0)


class TestSqueezingOnTrajectories(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.traj = integrate(ModelParams(g=2.0, omega=0.5), IntegrationConfig(tau_end=10.0, strict=False))

    def test_no_drive_no_squeezing(self):
        traj = integrate(ModelParams(g=0.0, omega=0.5), IntegrationConfig(tau_end=10.0))

        self.assertListEqual(squeezing_intervals(traj), [])
        self.assertEqual(min_squeezing(traj, (0.0, 10.0)), (3.0, 0.0))

    def test_intervals_match_samples(self):
        intervals = squeezing_intervals(self.traj)

        self.assertGreater(len(intervals), 0)

        for (start, end), (next_start, _) in zip(intervals, intervals[1:]):
            self.assertLess(start, end)
            self.assertLessEqual(end, next_start)

        self.assertGreaterEqual(intervals[0][0], 0.0)
        self.assertLessEqual(intervals[-1][1], self.traj.tau_end)

        for tau, s in zip(self.traj.taus, self.traj.squeezing):
            if any(start + MARGIN < tau < end - MARGIN for start, end in intervals):
                self.assertLess(s, 3.0)
            elif not any(start - MARGIN <= tau <= end + MARGIN for start, end in intervals):
                self.assertGreaterEqual(s, 3.0)

    def test_crossing_accuracy(self):
        taus = self.traj.taus
        intervals = squeezing_intervals(self.traj)
        crossings = [tau for interval in intervals for tau in interval if 0.0 < tau < self.traj.tau_end]

        self.assertGreater(len(crossings), 0)

        for tau in crossings:
            index = int(np.searchsorted(taus, tau, side="right")) - 1
            y = tuple(float(v) for v in self.traj.states[index])

            s = advance_vector(rhs_vector, y, float(taus[index]), tau, self.traj.params, self.traj.config.dt)[4]
            self.assertLess(abs(s - 3.0), 3e-6)

    def test_min_squeezing(self):
        s_min, tau_at_min = min_squeezing(self.traj, (0.0, 10.0))

        self.assertLessEqual(s_min, float(self.traj.squeezing.min()))
        self.assertGreater(s_min, 0.0)
        self.assertLess(s_min, 3.0)
        self.assertTrue(0.0 <= tau_at_min <= 10.0)

        s_min, tau_at_min = min_squeezing(self.traj, (2.0, 4.0))
        self.assertTrue(2.0 - MARGIN <= tau_at_min <= 4.0 + MARGIN)

    def test_window_out_of_range(self):
        for window in ((0.0, 11.0), (5.0, 5.0), (-1.0, 5.0), (6.0, 4.0)):
            with self.assertRaises(WindowOutOfRange):
                min_squeezing(self.traj, window)

    def test_report(self):
        report = squeezing_report(self.traj, (2.0, 8.0))

        self.assertEqual((report.s_min, report.tau_at_min), min_squeezing(self.traj, (2.0, 8.0)))
        self.assertTrue(report.is_squeezed)

        for start, end in report.intervals:
            self.assertTrue(2.0 <= start < end <= 8.0)


if __name__ == "__main__":
    unittest.main()
