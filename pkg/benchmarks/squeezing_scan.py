"""
Runs the default coupling scan at the squeezing windows tau=10 and tau=20 and reports the squeezing enhancement of the
chaotic rows, the effect of the longer window and the agreement of the resonance overlap criterion with the measured
classes.

Measure the scan duration when spreading the grid points over the selected backend.
"""

import argparse
import json
import logging
import timeit

import numpy as np

from chaosqueeze.diagnostics.chirikov import chirikov, chirikov_concordance
from chaosqueeze.diagnostics.object import ChaosClass
from chaosqueeze.entry_point import BACKEND_REGISTRY, set_parallel_backend_context
from chaosqueeze.model.object import ModelParams
from chaosqueeze.sweep.functions import run_sweep
from chaosqueeze.sweep.object import SweepSpec


def smallest_squeezing(rows, chaos_class: ChaosClass) -> float:
    values = [row.s_min for row in rows if not row.is_failed and row.chaos_class == chaos_class]
    return min(values) if values else float("nan")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("n_workers", action="store", type=int)
    parser.add_argument("--backend", type=str, choices=BACKEND_REGISTRY.keys(), default="local_multiprocessing")
    parser.add_argument("--backend_args", type=str, default="{}")
    parser.add_argument("--points", type=int, default=50)
    parser.add_argument("--verbose", action="store_true")

    args = parser.parse_args()

    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.INFO)

    backend_args = {"max_workers": args.n_workers, **json.loads(args.backend_args)}
    if args.backend != "local_multiprocessing":
        backend_args.pop("max_workers")

    with set_parallel_backend_context(args.backend, **backend_args):
        start = timeit.default_timer()
        rows_10 = run_sweep(SweepSpec.default_g_scan(points=args.points, window=10.0))
        print("Duration scan (window 10):", timeit.default_timer() - start)

        start = timeit.default_timer()
        rows_20 = run_sweep(SweepSpec.default_g_scan(points=args.points, window=20.0))
        print("Duration scan (window 20):", timeit.default_timer() - start)

    chaotic_min = smallest_squeezing(rows_10, ChaosClass.Chaotic)
    regular_min = smallest_squeezing(rows_10, ChaosClass.Regular)

    print("Smallest S_min over chaotic rows:", chaotic_min)
    print("Smallest S_min over regular rows:", regular_min)
    print("Chaotic row reaching S_min <= 1e-2:", chaotic_min <= 1e-2)
    print("Chaotic enhancement (<= 0.1 expected):", chaotic_min / regular_min)

    ratios = np.array(
        [
            row_20.s_min / row_10.s_min
            for row_10, row_20 in zip(rows_10, rows_20)
            if not (row_10.is_failed or row_20.is_failed)
        ]
    )

    if len(ratios) > 0:
        best = int(np.argmin(ratios))
        print("Best S_min(window 20) / S_min(window 10) (<= 0.1 expected):", ratios[best])

    classified = [row for row in rows_10 if not row.is_failed]
    concordance = chirikov_concordance(
        [chirikov(ModelParams(g=row.g, omega=row.omega)) for row in classified], [row.chaos_class for row in classified]
    )
    print("Resonance overlap concordance over kappa >= 5 (>= 0.8 expected):", concordance)
