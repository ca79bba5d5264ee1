import unittest

from chaosqueeze.diagnostics.classify import chaos_report, classify, classify_estimate, measure_lyapunov
from chaosqueeze.diagnostics.object import ChaosClass, ClassifierConfig, LyapunovEstimate
from chaosqueeze.model.object import ModelParams


class TestClassify(unittest.TestCase):
    def test_decision_rule(self):
        config = ClassifierConfig()

        def estimate(value):
            return LyapunovEstimate(lambda_=value, tau_total=200.0, renorm_count=200)

        self.assertEqual(classify_estimate(estimate(0.005), ModelParams(g=1.0, omega=0.5), config), ChaosClass.Regular)
        self.assertEqual(classify_estimate(estimate(0.01), ModelParams(g=1.0, omega=0.5), config), ChaosClass.Regular)
        self.assertEqual(classify_estimate(estimate(0.2), ModelParams(g=1.0, omega=0.5), config), ChaosClass.Chaotic)
        self.assertEqual(
            classify_estimate(estimate(0.2), ModelParams(g=1.0, omega=0.05), config), ChaosClass.AdiabaticChaos
        )

    def test_integrable_limit(self):
        self.assertEqual(classify(ModelParams(g=0.0, omega=0.5, p0=0.5), horizon=100.0), ChaosClass.Regular)

    def test_chaotic(self):
        self.assertEqual(classify(ModelParams(g=2.0, omega=0.5)), ChaosClass.Chaotic)

    def test_short_horizon(self):
        with self.assertRaises(ValueError):
            classify(ModelParams(g=1.0, omega=0.5), horizon=20.0)

        # Renormalizes more often to keep 100 renormalizations.
        self.assertEqual(measure_lyapunov(ModelParams(g=1.0, omega=0.5), 50.0, ClassifierConfig()).renorm_count, 100)

    def test_report(self):
        report = chaos_report(ModelParams(g=2.0, omega=0.5))

        self.assertEqual(report.chaos_class, ChaosClass.Chaotic)
        self.assertGreater(report.lyapunov.lambda_, 0.01)
        self.assertAlmostEqual(report.chirikov.k_param, 10.0)
        self.assertTrue(report.concordant)

        self.assertIsNone(chaos_report(ModelParams(g=0.0, omega=0.5), horizon=100.0).concordant)


if __name__ == "__main__":
    unittest.main()
