"""Tagged result types shared by the search stages."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from detfactor.znum import ZnElement


@dataclass(frozen=True)
class Factors:
    """A split N = p * q with 1 < p <= q < N."""

    p: int
    q: int

    def __post_init__(self):
        if not 1 < self.p <= self.q:
            raise ValueError(f"bad split ({self.p}, {self.q})")


@dataclass(frozen=True)
class Prime:
    pass


@dataclass(frozen=True)
class NoFactorsFound:
    pass


@dataclass(frozen=True)
class Factor:
    """A nontrivial divisor of N."""

    d: int


@dataclass(frozen=True)
class LargeOrderElement:
    alpha: ZnElement


FactorOutcome = Union[Factors, Prime, NoFactorsFound]
OrderOutcome = Union[LargeOrderElement, Factor, Prime]


def split(N: int, d: int) -> Factors:
    """Factors from a nontrivial divisor d of N, checked by division."""
    if not 1 < d < N or N % d:
        raise ArithmeticError(f"{d} is not a nontrivial divisor of {N}")
    e = N // d
    return Factors(min(d, e), max(d, e))
