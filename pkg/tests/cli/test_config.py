import unittest

from chaosqueeze.cli.config import Command, RunConfig, parse_config, parse_harmonics
from chaosqueeze.errors import ConfigError
from chaosqueeze.model.drive import HarmonicSum, PulseTrain
from chaosqueeze.sweep.object import SweepAxis


class TestParseConfig(unittest.TestCase):
    def test_defaults(self):
        config = parse_config("", {"command": "classify"})

        self.assertIsInstance(config, RunConfig)
        self.assertEqual(config.command, Command.Classify)
        self.assertEqual(config.model.g, 2.0)
        self.assertEqual(config.model.omega, 0.5)
        self.assertEqual(config.model.p0, 0.0)
        self.assertEqual(config.model.n_tls, 10**6)
        self.assertEqual(config.integration.dt, 1e-3)
        self.assertFalse(config.strict)
        self.assertFalse(config.integration.strict)
        self.assertIsNone(config.sweep)
        self.assertEqual(config.workers, 1)

    def test_invalid_value(self):
        with self.assertRaises(ConfigError) as context:
            parse_config(None, {"command": "chirikov", "omega": 0.0})

        self.assertEqual(context.exception.key, "omega")
        self.assertEqual(context.exception.exit_code, 2)

    def test_precedence(self):
        document = '{"command": "chirikov", "g": 1.0, "p0": 0.25}'

        self.assertEqual(parse_config(document).model.g, 1.0)

        config = parse_config(document, {"g": 2.0, "p0": None})
        self.assertEqual(config.model.g, 2.0)
        self.assertEqual(config.model.p0, 0.25)

    def test_unknown_key(self):
        with self.assertRaises(ConfigError) as context:
            parse_config('{"command": "chirikov", "gamma": 1.0}')

        self.assertEqual(context.exception.key, "gamma")

    def test_malformed_document(self):
        for document in ("{", "[1, 2]"):
            with self.assertRaises(ConfigError):
                parse_config(document, {"command": "chirikov"})

    def test_missing_command(self):
        with self.assertRaises(ConfigError) as context:
            parse_config("{}")

        self.assertEqual(context.exception.key, "command")

        with self.assertRaises(ConfigError):
            parse_config('{"command": "plot"}')

    def test_wrong_types(self):
        with self.assertRaises(ConfigError) as context:
            parse_config('{"command": "chirikov", "g": "two"}')
        self.assertEqual(context.exception.key, "g")

        with self.assertRaises(ConfigError) as context:
            parse_config('{"command": "chirikov", "n": 1.5}')
        self.assertEqual(context.exception.key, "n")

        with self.assertRaises(ConfigError):
            parse_config('{"command": "chirikov", "strict": "yes"}')

        self.assertEqual(parse_config('{"command": "chirikov", "n": 1e5}').model.n_tls, 100000)

    def test_output_required(self):
        with self.assertRaises(ConfigError) as context:
            parse_config(None, {"command": "simulate"})

        self.assertEqual(context.exception.key, "out")

        config = parse_config(None, {"command": "simulate", "out": "run.csv", "strict": True})
        self.assertEqual(config.output_path, "run.csv")
        self.assertTrue(config.integration.strict)

    def test_sweep(self):
        config = parse_config('{"command": "sweep", "axis": "omega", "points": 5, "out": "scan.csv", "window": 20}')

        self.assertEqual(config.sweep.axis, SweepAxis.Omega)
        self.assertEqual(config.sweep.from_, 0.05)
        self.assertEqual(config.sweep.to, 2.0)
        self.assertEqual(config.sweep.points, 5)
        self.assertEqual(config.sweep.window, 20.0)
        self.assertEqual(config.sweep.fixed.g, 2.0)

        config = parse_config(None, {"command": "sweep", "from": 0.5, "to": 3.0, "out": "scan.csv"})
        self.assertEqual(config.sweep.axis, SweepAxis.G)
        self.assertEqual((config.sweep.from_, config.sweep.to), (0.5, 3.0))

        config = parse_config(None, {"command": "sweep", "omega_ac": 0.5, "out": "scan.csv"})
        self.assertEqual(config.classifier.omega_ac, 0.5)
        self.assertEqual(config.sweep.chirikov.omega_ac, 0.5)

        with self.assertRaises(ConfigError) as context:
            parse_config(None, {"command": "sweep", "from": 3.0, "to": 0.5, "out": "scan.csv"})
        self.assertEqual(context.exception.key, "to")

    def test_drives(self):
        config = parse_config(None, {"command": "chirikov", "drive": "harmonic_sum", "harmonics": "1:1,0.5:3:0.1"})
        self.assertEqual(config.model.drive, HarmonicSum([(1.0, 1, 0.0), (0.5, 3, 0.1)]))

        config = parse_config('{"command": "chirikov", "drive": "harmonic_sum", "harmonics": [[1.0, 2]]}')
        self.assertEqual(config.model.drive, HarmonicSum([(1.0, 2, 0.0)]))

        config = parse_config(
            None, {"command": "chirikov", "drive": "pulse_train", "pulse_period": 2.0, "pulse_width": 0.5}
        )
        self.assertEqual(config.model.drive, PulseTrain(period=2.0, width=0.5))

        with self.assertRaises(ConfigError) as context:
            parse_config(None, {"command": "chirikov", "drive": "pulse_train"})
        self.assertEqual(context.exception.key, "pulse_period")

    def test_parse_harmonics(self):
        self.assertListEqual(parse_harmonics("1:1:0, 0.5:2"), [(1.0, 1, 0.0), (0.5, 2, 0.0)])

        with self.assertRaises(ConfigError):
            parse_harmonics("1")

        with self.assertRaises(ConfigError):
            parse_harmonics("1:x")

    def test_plot_needs_table(self):
        with self.assertRaises(ConfigError):
            parse_config(None, {"command": "lyapunov", "emit_plot": True})


if __name__ == "__main__":
    unittest.main()
