"""
Reports the squeezing interval timelines of a regular and a chaotic point and their sensitivity to a 1% change of the
initial momentum.
"""

import argparse
import timeit

import numpy as np

from chaosqueeze.model.object import ModelParams
from chaosqueeze.sweep.functions import interval_timeline, sensitivity

REGULAR = ModelParams(g=0.05, omega=2.0, p0=0.5)
CHAOTIC = ModelParams(g=2.0, omega=0.5, p0=0.5)


def median_length(intervals, start: float, end: float) -> float:
    lengths = [b - a for a, b in intervals if a >= start and b <= end]
    return float(np.median(lengths)) if lengths else float("nan")


if __name__ == "__main__":
    parser = argparse.ArgumentParser()
    parser.add_argument("--tau_end", type=float, default=50.0)
    parser.add_argument("--delta", type=float, default=0.01)

    args = parser.parse_args()

    start = timeit.default_timer()

    regular = interval_timeline(REGULAR, args.tau_end)
    late_regular = [(a, b) for a, b in regular if a >= 10.0 and b - a >= 1.0]
    print("Regular intervals after tau=10 lasting >= 1:", len(late_regular))

    chaotic = interval_timeline(CHAOTIC, args.tau_end)
    print("Chaotic median interval length on [0, 10]:", median_length(chaotic, 0.0, 10.0))
    print("Chaotic median interval length on [30, 50] (smaller expected):", median_length(chaotic, 30.0, 50.0))

    regular_overlap = sensitivity(REGULAR, args.delta, tau_end=args.tau_end).jaccard
    chaotic_overlap = sensitivity(CHAOTIC, args.delta, tau_end=args.tau_end).jaccard
    print("Interval overlap under perturbation, regular / chaotic (regular larger expected):")
    print(regular_overlap, chaotic_overlap)

    print("Duration:", timeit.default_timer() - start)
