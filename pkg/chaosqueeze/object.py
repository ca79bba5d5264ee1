from typing import Tuple

Tau = float  # Dimensionless time, in units of the inverse cooperative frequency.

Interval = Tuple[Tau, Tau]  # Closed-open [start, end) span of dimensionless time.

SQUEEZING_THRESHOLD = 3.0  # S < 3 is squeezed, in the offset convention of the normalized variances.

VALIDITY_RADIUS = 0.01  # The 1/N truncation is trusted while the convergence radius stays below this value.
