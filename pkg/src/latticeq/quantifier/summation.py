"""Deterministic chunked summation with a floating-point error estimate.

Arrays are cut into fixed chunks of CHUNK_SIZE terms independent of the thread
count. Each chunk is summed by numpy's pairwise summation and the chunk
partials are combined with math.fsum, which is exactly rounded and therefore
independent of combine order. Results are bit-identical for any thread count.
"""

import contextlib
import contextvars
import logging
import math
from concurrent.futures import ThreadPoolExecutor
from typing import Iterator

import numpy as np

from latticeq.errors import TermsCeilingError

logger = logging.getLogger(__name__)

CHUNK_SIZE = 1 << 16
EPS = float(np.finfo(np.float64).eps)

_threads: contextvars.ContextVar[int] = contextvars.ContextVar("latticeq_threads", default=1)
_terms_ceiling: contextvars.ContextVar[int] = contextvars.ContextVar(
    "latticeq_terms_ceiling", default=500_000_000
)


@contextlib.contextmanager
def use_threads(count: int) -> Iterator[None]:
    """Run the enclosed summations with ``count`` worker threads."""
    token = _threads.set(max(1, int(count)))
    try:
        yield
    finally:
        _threads.reset(token)


@contextlib.contextmanager
def use_terms_ceiling(ceiling: int) -> Iterator[None]:
    token = _terms_ceiling.set(int(ceiling))
    try:
        yield
    finally:
        _terms_ceiling.reset(token)


def thread_count() -> int:
    return _threads.get()


def check_terms(terms: int) -> None:
    """Refuse summations above the configured ceiling."""
    ceiling = _terms_ceiling.get()
    if terms > ceiling:
        raise TermsCeilingError(terms, ceiling)


def _chunk_stats(chunk: np.ndarray) -> tuple[complex, float]:
    partial = complex(np.sum(chunk))
    running = np.cumsum(chunk)
    peak = float(np.max(np.abs(running))) if running.size else 0.0
    return partial, peak


def deterministic_sum(values: np.ndarray) -> tuple[complex, float]:
    """Sum a complex array; returns (value, fp_error_estimate).

    The estimate is terms × eps × the largest partial-sum magnitude seen
    along the fixed summation order.
    """
    values = np.ascontiguousarray(values, dtype=np.complex128)
    terms = values.size
    if terms == 0:
        return 0j, 0.0
    bounds = [(s, min(s + CHUNK_SIZE, terms)) for s in range(0, terms, CHUNK_SIZE)]
    workers = thread_count()
    if workers > 1 and len(bounds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            stats = list(pool.map(lambda b: _chunk_stats(values[b[0]:b[1]]), bounds))
    else:
        stats = [_chunk_stats(values[s:e]) for s, e in bounds]

    partials = [p for p, _ in stats]
    re = math.fsum(p.real for p in partials)
    im = math.fsum(p.imag for p in partials)

    # running offsets of chunk starts bound every partial sum
    peak = 0.0
    offset = 0j
    for partial, chunk_peak in stats:
        peak = max(peak, abs(offset) + chunk_peak)
        offset += partial
    logger.debug("Summed %d terms in %d chunks (%d threads)", terms, len(bounds), workers)
    return complex(re, im), terms * EPS * peak
