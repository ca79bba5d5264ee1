import contextlib
import io
import json
import os
import tempfile
import unittest

from chaosqueeze.cli.csv_io import SWEEP_COLUMNS, TRAJECTORY_COLUMNS
from chaosqueeze.cli.main import main


class TestCommandLine(unittest.TestCase):
    def setUp(self):
        self._directory = tempfile.TemporaryDirectory()

    def tearDown(self):
        self._directory.cleanup()

    def _path(self, name):
        return os.path.join(self._directory.name, name)

    def _run(self, *argv):
        stdout = io.StringIO()

        with contextlib.redirect_stdout(stdout):
            exit_code = main(list(argv))

        return exit_code, stdout.getvalue().splitlines()

    def _lines(self, path):
        with open(path, encoding="utf-8") as file:
            return file.read().splitlines()

    def test_chirikov(self):
        exit_code, output = self._run("chirikov", "--g", "2", "--omega", "0.5")

        self.assertEqual(exit_code, 0)
        self.assertIn("kappa=16.0", output)
        self.assertIn("K=10.0", output)
        self.assertIn("regime=global_chaos", output)

        exit_code, output = self._run("chirikov", "--g", "2", "--omega", "0.5", "--omega-ac", "1")

        self.assertEqual(exit_code, 0)
        self.assertIn("regime=adiabatic_chaos", output)

    def test_config_error(self):
        self.assertEqual(self._run("chirikov", "--omega", "0")[0], 2)
        self.assertEqual(self._run("simulate", "--tau-end", "1")[0], 2)

    def test_config_file(self):
        path = self._path("config.json")

        with open(path, "w") as file:
            json.dump({"g": 0.5, "omega": 0.5}, file)

        exit_code, output = self._run("chirikov", "--config", path)
        self.assertEqual(exit_code, 0)
        self.assertIn("kappa=4.0", output)

        with open(path, "w") as file:
            json.dump({"gamma": 0.5}, file)

        self.assertEqual(self._run("chirikov", "--config", path)[0], 2)
        self.assertEqual(self._run("chirikov", "--config", self._path("missing.json"))[0], 2)

    def test_simulate(self):
        out = self._path("run.csv")

        exit_code, _ = self._run("simulate", "--tau-end", "1", "--out", out, "--emit-plot")

        self.assertEqual(exit_code, 0)

        lines = self._lines(out)
        self.assertEqual(lines[0], ",".join(TRAJECTORY_COLUMNS))
        self.assertEqual(len(lines), 1 + 101)
        self.assertTrue(os.path.isfile(self._path("run.gp")))

    def test_strict_drift(self):
        out = self._path("run.csv")
        argv = ["simulate", "--tau-end", "5", "--dt", "0.1", "--drift-tolerance", "1e-12", "--out", out]

        self.assertEqual(self._run(*argv, "--strict")[0], 3)
        self.assertEqual(self._run(*argv)[0], 0)

    def test_strict_validity_radius(self):
        out = self._path("run.csv")
        argv = ["simulate", "--n", "1", "--tau-end", "1", "--out", out]

        self.assertEqual(self._run(*argv, "--strict")[0], 4)
        self.assertTrue(os.path.isfile(out))

        self.assertEqual(self._run(*argv)[0], 0)

    def test_output_error(self):
        out = self._path(os.path.join("missing", "run.csv"))
        self.assertEqual(self._run("simulate", "--tau-end", "1", "--out", out)[0], 5)

    def test_sweep(self):
        out = self._path("scan.csv")

        argv = ["sweep", "--from", "0", "--to", "1", "--points", "2", "--window", "2", "--classify-horizon", "50"]
        exit_code, _ = self._run(*argv, "--out", out, "--emit-plot")

        self.assertEqual(exit_code, 0)

        lines = self._lines(out)
        self.assertEqual(lines[0], ",".join(SWEEP_COLUMNS))
        self.assertEqual(len(lines), 3)
        self.assertTrue(lines[1].startswith("0.0,0.5,0.0,inf,R,"))
        self.assertTrue(os.path.isfile(self._path("scan.gp")))

    def test_intervals(self):
        out = self._path("intervals.csv")

        exit_code, output = self._run("intervals", "--tau-end", "10", "--delta", "0.01", "--out", out)

        self.assertEqual(exit_code, 0)
        self.assertEqual(self._lines(out)[0], "tau_start,tau_end,length")
        self.assertTrue(any(line.startswith("jaccard=") for line in output))

        self.assertEqual(self._run("intervals", "--tau-end", "5", "--out", out)[0], 2)

    def test_poincare(self):
        out = self._path("section.csv")

        exit_code, _ = self._run(
            "poincare", "--g", "0", "--omega", "1", "--p0", "0.5", "--tau-end", "63", "--dt", "0.01", "--out", out
        )

        self.assertEqual(exit_code, 0)

        lines = self._lines(out)
        self.assertEqual(lines[0], "x,p")
        self.assertEqual(lines[1], "0.0,0.5")
        self.assertEqual(len(lines), 1 + 11)

    def test_lyapunov_and_classify(self):
        exit_code, output = self._run("lyapunov", "--g", "0", "--p0", "0.5", "--tau-total", "100")

        self.assertEqual(exit_code, 0)
        self.assertIn("renormalizations=100", output)

        exit_code, output = self._run("classify", "--g", "0", "--p0", "0.5", "--classify-horizon", "100")

        self.assertEqual(exit_code, 0)
        self.assertIn("class=R", output)

        self.assertEqual(self._run("classify", "--classify-horizon", "20")[0], 2)


if __name__ == "__main__":
    unittest.main()
