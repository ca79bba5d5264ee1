import datetime
import logging
import time
from contextlib import contextmanager
from typing import Any, Callable, Tuple

from chaosqueeze.profiler.object import ProfileDuration, SweepTrace, TraceTime


@contextmanager
def profile(timer_function: Callable[[], TraceTime] = time.process_time_ns):
    """
    Provides a Python ``with`` context that measures the execution time of the enclosing block.

    .. code:: python

        with profile() as duration:
            integrate(params, config)

        print(f"Integration duration: {duration.value}ns")

    """

    starts_at = timer_function()

    profile_duration = ProfileDuration()
    yield profile_duration

    profile_duration.value = timer_function() - starts_at


def timed_function(fn: Callable, *args, **kwargs) -> Tuple[TraceTime, Any]:
    """Runs ``fn`` and returns its CPU time along with its returned value."""

    with profile() as duration:
        result = fn(*args, **kwargs)

    return duration.value, result


def log_sweep_trace(trace: SweepTrace) -> None:
    """Logs a human-readable summary of the CPU time spent on a sweep."""

    if trace.point_count == 0:
        return

    total = datetime.timedelta(microseconds=trace.total_duration / 1000)
    logging.info(f"sweep of {trace.point_count} points: total CPU time {total}, avg. {total / trace.point_count}.")

    slowest = trace.slowest
    if slowest is not None:
        slowest_duration = datetime.timedelta(microseconds=slowest.duration / 1000)
        logging.info(f"slowest point at axis value {slowest.axis_value:g}: {slowest_duration}.")
