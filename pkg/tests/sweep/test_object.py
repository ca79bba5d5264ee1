import unittest

from chaosqueeze.integrator.object import IntegrationConfig
from chaosqueeze.model.object import ModelParams
from chaosqueeze.sweep.object import RowStatus, SensitivityResult, SweepAxis, SweepRow, SweepSpec


class TestSweepSpec(unittest.TestCase):
    def test_validation(self):
        with self.assertRaises(ValueError):
            SweepSpec(SweepAxis.G, 0.0, 0.0, 2)

        with self.assertRaises(ValueError):
            SweepSpec(SweepAxis.G, 1.0, 0.5, 10)

        with self.assertRaises(ValueError):
            SweepSpec(SweepAxis.G, 0.0, 1.0, 1)

        with self.assertRaises(ValueError):
            SweepSpec(SweepAxis.G, -0.5, 1.0, 5)

        with self.assertRaises(ValueError):
            SweepSpec(SweepAxis.Omega, 0.0, 1.0, 5)

        with self.assertRaises(ValueError):
            SweepSpec(SweepAxis.G, 0.0, 1.0, 5, window=0.0)

    def test_axis_values(self):
        spec = SweepSpec.default_g_scan()
        values = spec.axis_values

        self.assertEqual(len(values), 50)
        self.assertEqual(values[0], 0.1)
        self.assertEqual(values[-1], 3.0)
        self.assertTrue(all(a < b for a, b in zip(values, values[1:])))

    def test_params_at(self):
        g_scan = SweepSpec.default_g_scan()
        self.assertEqual(g_scan.params_at(1.5), ModelParams(g=1.5, omega=0.5))

        omega_scan = SweepSpec.default_omega_scan()
        self.assertEqual(omega_scan.from_, 0.05)
        self.assertEqual(omega_scan.to, 2.0)
        self.assertEqual(omega_scan.params_at(1.5), ModelParams(g=2.0, omega=1.5))

    def test_window_config(self):
        spec = SweepSpec(SweepAxis.G, 0.0, 1.0, 2, window=20.0, integration=IntegrationConfig(tau_end=1.0, dt=1e-2))

        self.assertEqual(spec.window_config.tau_end, 20.0)
        self.assertEqual(spec.window_config.dt, 1e-2)
        self.assertFalse(spec.window_config.strict)


class TestSweepResults(unittest.TestCase):
    def test_row_validation(self):
        with self.assertRaises(ValueError):
            SweepRow(g=1.0, omega=0.5, kappa=8.0, k_param=1.0, status=RowStatus.Ok, s_min=-1.0)

        failed = SweepRow(g=1.0, omega=0.5, kappa=8.0, k_param=1.0, status=RowStatus.Failed, failure_reason="boom")
        self.assertTrue(failed.is_failed)
        self.assertIsNone(failed.s_min)
        self.assertEqual(failed.axis_value(SweepAxis.Omega), 0.5)

    def test_sensitivity_validation(self):
        with self.assertRaises(ValueError):
            SensitivityResult([], [], 1.5, "p0")


if __name__ == "__main__":
    unittest.main()
