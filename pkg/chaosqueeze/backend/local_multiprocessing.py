import multiprocessing
from concurrent.futures import Executor, Future, ProcessPoolExecutor, ThreadPoolExecutor
from threading import BoundedSemaphore

import attrs
import psutil
from attrs.validators import instance_of

from chaosqueeze.backend.mixins import BackendEngine, BackendSession, ProfiledFuture
from chaosqueeze.profiler.functions import profile, timed_function


def default_worker_count() -> int:
    return max(1, (psutil.cpu_count(logical=False) or 1) - 1)


class LocalMultiprocessingSession(BackendSession):
    def __init__(self, underlying_executor: Executor, max_workers: int):
        self._underlying_executor = underlying_executor
        self._concurrent_task_guard = BoundedSemaphore(max_workers)

    def __enter__(self) -> "LocalMultiprocessingSession":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        return None

    def submit(self, fn, *args, **kwargs) -> ProfiledFuture:
        with profile() as submit_duration:
            future = ProfiledFuture()

            self._concurrent_task_guard.acquire()

            underlying_future = self._underlying_executor.submit(timed_function, fn, *args, **kwargs)

        def on_done_callback(underlying_future: Future):
            assert submit_duration.value is not None

            if underlying_future.cancelled():
                self._concurrent_task_guard.release()
                future.cancel()
                return

            exception = underlying_future.exception()

            if exception is None:
                function_duration, result = underlying_future.result()
            else:
                function_duration = 0
                result = None

            self._concurrent_task_guard.release()

            task_duration = submit_duration.value + function_duration

            if exception is None:
                future.set_result(result, duration=task_duration)
            else:
                future.set_exception(exception, duration=task_duration)

        underlying_future.add_done_callback(on_done_callback)

        return future


@attrs.define(init=False)
class LocalMultiprocessingBackend(BackendEngine):
    """Evaluates tasks on a pool of local processes (or threads), at most ``max_workers`` at a time."""

    _underlying_executor: Executor = attrs.field(validator=instance_of(Executor), init=False)
    _max_workers: int = attrs.field(validator=instance_of(int), init=False)

    def __init__(self, max_workers: int = default_worker_count(), is_process: bool = True, **kwargs):
        if max_workers < 1:
            raise ValueError(f"`max_workers` must be positive, got {max_workers}.")

        self._max_workers = max_workers

        if is_process:
            # Spawned processes do not inherit the parent's backend context, grid point tasks never nest.
            self._underlying_executor = ProcessPoolExecutor(
                max_workers=max_workers, mp_context=multiprocessing.get_context("spawn"), **kwargs
            )
        else:
            self._underlying_executor = ThreadPoolExecutor(max_workers=max_workers, **kwargs)

    @property
    def max_workers(self) -> int:
        return self._max_workers

    def session(self) -> LocalMultiprocessingSession:
        return LocalMultiprocessingSession(self._underlying_executor, self._max_workers)

    def shutdown(self, wait=True):
        self._underlying_executor.shutdown(wait=wait)
