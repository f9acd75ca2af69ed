"""Operation counters used by the benchmark.

Counting is off unless a :func:`counting` block is active in the current
context, so library calls outside the benchmark pay only a lookup.
"""

from __future__ import annotations

from collections import Counter
from contextlib import contextmanager
from contextvars import ContextVar
from typing import Iterator, Optional

_active: ContextVar[Optional[Counter]] = ContextVar("detfactor_counters", default=None)


def add(name: str, amount: int = 1) -> None:
    c = _active.get()
    if c is not None:
        c[name] += amount


def record_max(name: str, value: int) -> None:
    c = _active.get()
    if c is not None and value > c[name]:
        c[name] = value


@contextmanager
def counting() -> Iterator[Counter]:
    c: Counter = Counter()
    token = _active.set(c)
    try:
        yield c
    finally:
        _active.reset(token)
