import unittest
from unittest import mock

from chaosqueeze.diagnostics.object import ChaosClass
from chaosqueeze.entry_point import set_parallel_backend_context
from chaosqueeze.errors import NonFiniteState
from chaosqueeze.model.object import ModelParams
from chaosqueeze.sweep.functions import evaluate_sweep_point, interval_timeline, jaccard_index, run_sweep, sensitivity
from chaosqueeze.sweep.object import RowStatus, SweepAxis, SweepSpec


def _spec(**changes) -> SweepSpec:
    spec = SweepSpec(SweepAxis.G, 0.0, 2.0, 3, fixed=ModelParams(g=0.0, omega=0.5), window=5.0, classify_horizon=100.0)
    return spec.with_overrides(**changes)


class TestSweep(unittest.TestCase):
    def test_integrable_point(self):
        row = evaluate_sweep_point(ModelParams(g=0.0, omega=0.5), _spec())

        self.assertEqual(row.status, RowStatus.Ok)
        self.assertEqual(row.chaos_class, ChaosClass.Regular)
        self.assertLess(abs(row.lambda_), 0.01)
        self.assertEqual(row.s_min, 3.0)
        self.assertEqual(row.d_growth, 1.0)
        self.assertEqual(row.kappa, 0.0)
        self.assertIsNone(row.failure_reason)

    def test_run_sweep(self):
        with self.assertLogs(level="INFO"):
            rows = run_sweep(_spec())

        self.assertListEqual([row.g for row in rows], [0.0, 1.0, 2.0])
        self.assertTrue(all(row.omega == 0.5 for row in rows))
        self.assertEqual(rows[0].chaos_class, ChaosClass.Regular)
        self.assertTrue(all(row.s_min is not None and row.s_min > 0.0 for row in rows))

    def test_independent_of_backend(self):
        spec = _spec(points=2, from_=1.0)

        sequential = run_sweep(spec)

        with set_parallel_backend_context("local_multiprocessing", max_workers=2):
            parallel = run_sweep(spec)

        self.assertListEqual(sequential, parallel)

    def test_failed_point(self):
        with mock.patch("chaosqueeze.sweep.functions.integrate", side_effect=NonFiniteState(1.0, "x")):
            with self.assertLogs(level="WARNING"):
                rows = run_sweep(_spec(points=2))

        for row in rows:
            self.assertEqual(row.status, RowStatus.Failed)
            self.assertIn("NonFiniteState", row.failure_reason)
            self.assertIsNone(row.s_min)
            self.assertIsNone(row.chaos_class)

        self.assertEqual(rows[1].kappa, 16.0)

    def test_radius_status(self):
        row = evaluate_sweep_point(ModelParams(g=0.0, omega=0.5, n_tls=1), _spec())

        self.assertEqual(row.status, RowStatus.Radius)
        self.assertIsNotNone(row.s_min)
        self.assertIn("convergence radius", row.failure_reason)


class TestIntervalTimeline(unittest.TestCase):
    def test_no_drive(self):
        self.assertListEqual(interval_timeline(ModelParams(g=0.0, omega=0.5), 10.0), [])

    def test_short_horizon(self):
        with self.assertRaises(ValueError):
            interval_timeline(ModelParams(g=1.0, omega=0.5), 5.0)

    def test_jaccard_index(self):
        self.assertEqual(jaccard_index([], []), 1.0)
        self.assertEqual(jaccard_index([(0.0, 1.0)], []), 0.0)
        self.assertAlmostEqual(jaccard_index([(0.0, 2.0)], [(1.0, 3.0)]), 1.0 / 3.0)
        self.assertEqual(jaccard_index([(0.0, 1.0), (2.0, 3.0)], [(0.0, 1.0), (2.0, 3.0)]), 1.0)

    def test_unresolvable_perturbation(self):
        result = sensitivity(ModelParams(g=2.0, omega=0.5, p0=0.5), 1e-20, tau_end=10.0)

        self.assertEqual(result.jaccard, 1.0)
        self.assertListEqual(result.base_intervals, result.perturbed_intervals)

    def test_additive_perturbation(self):
        result = sensitivity(ModelParams(g=2.0, omega=0.5), 0.01, tau_end=10.0)

        self.assertIn("additive", result.perturbation)
        self.assertTrue(0.0 <= result.jaccard <= 1.0)
        self.assertGreater(len(result.base_intervals), 0)

    def test_invalid_perturbation(self):
        with self.assertRaises(ValueError):
            sensitivity(ModelParams(g=2.0, omega=0.5), 0.0)


if __name__ == "__main__":
    unittest.main()
