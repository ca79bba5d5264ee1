import logging
from typing import Callable

from chaosqueeze.backend.mixins import BackendEngine, BackendSession, ProfiledFuture
from chaosqueeze.profiler.functions import profile


class LocalSingleProcessSession(BackendSession):
    """Evaluates every task inside the calling process, when it is submitted."""

    def __enter__(self) -> "LocalSingleProcessSession":
        return self

    def __exit__(self, exc_type, exc_val, exc_tb) -> None:
        return None

    def submit(self, fn: Callable, *args, **kwargs) -> ProfiledFuture:
        future = ProfiledFuture()

        with profile() as duration:
            try:
                result = fn(*args, **kwargs)
                error = None
            except Exception as e:
                error = e
                result = None

        if error is not None:
            logging.debug(f"task {getattr(fn, '__name__', fn)!s} raised {error!r}.")
            future.set_exception(error, duration=duration.value)
        else:
            future.set_result(result, duration=duration.value)

        return future


class LocalSingleProcessBackend(BackendEngine):
    """Sequential grid point evaluation, mostly intended for debugging scans."""

    def session(self) -> BackendSession:
        return LocalSingleProcessSession()

    def shutdown(self):
        pass
