import collections
import logging
import time
from typing import Any, Callable, Deque, Iterable, Iterator, Optional, Tuple

from chaosqueeze.backend.mixins import BackendSession, ProfiledFuture
from chaosqueeze.entry_point import get_parallel_backend
from chaosqueeze.profiler.functions import timed_function
from chaosqueeze.profiler.object import TraceTime


def parallel_timed_map(
    func: Callable, *iterables, backend_session: Optional[BackendSession] = None, timeout: Optional[float] = None
) -> Iterator[Tuple[Any, TraceTime]]:
    """
    Similar to :py:func:`parallel_map`, but also returns the CPU time (including scheduling) of every task.

    Results are yielded in submission order, whatever the order in which the tasks complete.

    :param backend_session: the backend session. If `None`, creates a new session from the current backend.
    """

    end_time = None if timeout is None else timeout + time.monotonic()

    # A generator lets deque.popleft() discard the futures' references as they are yielded.
    def result_generator(backend_session: BackendSession):
        futures: Deque[ProfiledFuture] = collections.deque()

        try:
            for args in zip(*iterables):
                futures.append(backend_session.submit(func, *args))

                while len(futures) > 0 and futures[0].done():
                    yield futures.popleft().result_and_duration()

            while len(futures) > 0:
                remaining = None if end_time is None else end_time - time.monotonic()
                yield futures.popleft().result_and_duration(timeout=remaining)
        finally:
            for future in futures:
                future.cancel()

    def session_generator(backend):
        with backend.session() as session:
            yield from result_generator(session)

    if backend_session is not None:
        return result_generator(backend_session)

    current_backend = get_parallel_backend()

    if current_backend is None:
        logging.debug(f"no parallel backend engine set, run `{func.__name__}()` sequentially.")
        return (tuple(reversed(timed_function(func, *args))) for args in zip(*iterables))

    return session_generator(current_backend)


def parallel_map(
    func: Callable, *iterables, backend_session: Optional[BackendSession] = None, timeout: Optional[float] = None
) -> Iterable:
    """
    Similar to :py:func:`concurrent.futures.Executor.map()` but lazily consumes the iterators' content as workers get
    available.

    .. code:: python

        parallel_map(chirikov, [ModelParams(g=g, omega=0.5) for g in (0.5, 1.0, 2.0)])

    """

    return map(
        lambda value: value[0], parallel_timed_map(func, *iterables, backend_session=backend_session, timeout=timeout)
    )
