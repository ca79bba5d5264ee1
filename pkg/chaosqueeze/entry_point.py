"""
APIs to select the worker pool used by parameter sweeps.
"""

import argparse
import contextlib
import logging
import os
from contextvars import ContextVar, Token
from typing import Callable, Dict, Optional, Union

from chaosqueeze.backend.local_multiprocessing import LocalMultiprocessingBackend
from chaosqueeze.backend.local_single_process import LocalSingleProcessBackend
from chaosqueeze.backend.mixins import BackendEngine

_backend_engine: ContextVar[Optional[BackendEngine]] = ContextVar("_backend_engine", default=None)

BACKEND_REGISTRY: Dict[str, Callable] = {
    "none": lambda *_args, **_kwargs: None,
    "local_single_process": LocalSingleProcessBackend,
    "local_multiprocessing": LocalMultiprocessingBackend,
}


def set_parallel_backend(backend: Union[str, BackendEngine], *args, **kwargs) -> None:
    """
    Initializes and sets the current worker pool.

    .. code:: python

        set_parallel_backend("local_multiprocessing", max_workers=4)
        rows = run_sweep(spec)

    :param backend:
        Supported backend options:

        * ``"none"``: sweeps evaluate their grid points sequentially, in the calling thread.

        * ``"local_single_process"``: grid points are submitted as tasks but run inside the calling Python process.

          Mostly intended for debugging purposes.

        * ``"local_multiprocessing"``: grid points run in parallel on a pool of local processes.

          See :py:class:`~chaosqueeze.backend.local_multiprocessing.LocalMultiprocessingBackend`.

    :param args: Additional positional parameters for the backend constructor
    :param kwargs: Additional keyword parameters for the backend constructor.
    """
    _set_parallel_backend(backend, *args, **kwargs)


@contextlib.contextmanager
def set_parallel_backend_context(backend: Union[str, BackendEngine], *args, **kwargs):
    """
    Sets a new worker pool for the duration of a ``with`` block, and shuts it down when leaving the block.

    .. code:: python

        with set_parallel_backend_context("local_multiprocessing", max_workers=8):
            rows = run_sweep(spec)

    :param backend: See :py:func:`set_parallel_backend`.
    """
    token = _set_parallel_backend(backend, *args, **kwargs)
    try:
        yield
    finally:
        engine = _backend_engine.get()

        if engine is not None:
            engine.shutdown()

        _backend_engine.reset(token)


def get_parallel_backend() -> Optional[BackendEngine]:
    """
    :return: the current backend instance, or :py:obj:`None` if no backend is currently set.
    """
    return _backend_engine.get()


def backend_context_for_workers(workers: int):
    """
    Context selecting the worker pool matching a ``--workers`` value: sequential execution for a single worker, a
    pool of ``workers`` local processes otherwise.
    """

    if workers < 1:
        raise ValueError(f"`workers` must be positive, got {workers}.")

    if workers == 1:
        return set_parallel_backend_context("none")

    return set_parallel_backend_context("local_multiprocessing", max_workers=workers)


def add_parallel_options(parser: argparse.ArgumentParser) -> None:
    """Adds the ``--workers`` option sizing the sweep worker pool."""

    group = parser.add_argument_group("execution")
    group.add_argument(
        "--workers",
        type=int,
        default=None,
        help="Number of worker processes evaluating sweep grid points. 1 disables parallel evaluation.",
    )


def _set_parallel_backend(backend: Union[str, BackendEngine], *args, **kwargs) -> Token:
    if isinstance(backend, BackendEngine):
        if len(args) > 0 or len(kwargs) > 0:
            raise ValueError("Cannot pass additional arguments when passing a backend instance")

        backend_instance = backend
        backend_name = backend.__class__.__name__
    elif backend in BACKEND_REGISTRY:
        backend_instance = BACKEND_REGISTRY[backend](*args, **kwargs)
        backend_name = backend
    else:
        raise ValueError(f"Supported parallel backends are: {set(BACKEND_REGISTRY.keys())}")

    if backend != "none":
        # One BLAS thread per worker, the pool already uses every core.
        os.environ["OPENBLAS_NUM_THREADS"] = "1"

    logging.debug(f"set up parallel backend: {backend_name}")

    return _backend_engine.set(backend_instance)
