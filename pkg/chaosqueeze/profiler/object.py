from typing import List, Optional

import attrs
from attrs.validators import instance_of

TraceTime = int  # Process time in nanoseconds.


@attrs.define
class ProfileDuration:
    """See :py:func:`chaosqueeze.profiler.functions.profile`."""

    value: Optional[TraceTime] = attrs.field(default=None)


@attrs.define
class GridPointTrace:
    """CPU time spent evaluating a single sweep grid point, including the scheduling overhead of the backend."""

    axis_value: float = attrs.field(validator=instance_of(float))
    duration: Optional[TraceTime] = attrs.field(default=None)


@attrs.define
class SweepTrace:
    point_traces: List[GridPointTrace] = attrs.field(validator=instance_of(list), factory=list)

    @property
    def point_count(self) -> int:
        return len(self.point_traces)

    @property
    def total_duration(self) -> TraceTime:
        return sum((t.duration for t in self.point_traces if t.duration is not None), 0)

    @property
    def slowest(self) -> Optional[GridPointTrace]:
        timed = [t for t in self.point_traces if t.duration is not None]
        return max(timed, key=lambda t: t.duration) if timed else None
