"""Worker-count control for the direct summation paths.

HYPERFOURIER_THREADS caps data parallelism: unset or "0" picks the CPU
count, a positive integer forces that many workers.  Results never depend
on the worker count; only wall time does.
"""

from __future__ import annotations

import os

_ENV = "HYPERFOURIER_THREADS"


def thread_count() -> int:
    raw = os.environ.get(_ENV, "0").strip()
    try:
        n = int(raw)
    except ValueError:
        raise ValueError(f"{_ENV} must be an integer, got {raw!r}") from None
    if n < 0:
        raise ValueError(f"{_ENV} must be >= 0, got {n}")
    if n == 0:
        return os.cpu_count() or 1
    return n
