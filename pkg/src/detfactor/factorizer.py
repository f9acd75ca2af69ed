"""Complete prime factorisation of arbitrary N >= 1.

Small primes (up to the cube root of what remains) are peeled off first.
What is left has at most two prime factors: it is 1, a square of a prime,
something below 10**9 that trial division handles, or a prime/semiprime
handed to :func:`factor_semiprime_or_prime`.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass, field
from math import isqrt
from typing import Optional

from detfactor.orderfind import find_large_order_element
from detfactor.outcomes import Factor, FactorOutcome, Factors, Prime, split
from detfactor.search import DEFAULT_MAX_GIANT_STEPS, PreconditionError, SearchTrace, main_search
from detfactor.smallfactor import TRIAL_CROSSOVER, smallest_prime_divisor, trial_division
from detfactor.znum import iroot_ceil, is_perfect_square, is_prime, lg

log = logging.getLogger(__name__)

SEMIPRIME_THRESHOLD = 10**9


@dataclass(frozen=True)
class SearchParams:
    r: int
    m: int
    M: int
    D: int


def derive_params(N: int) -> SearchParams:
    """r = ceil((N / lg^4 N)^(1/5)), m = ceil((N lg^6 N)^(1/5)),
    M = ceil((N/r)^(1/2)), D = ceil(N^(2/5))."""
    if N < SEMIPRIME_THRESHOLD:
        raise ValueError(f"derive_params needs N >= 10**9, got {N}")
    L = lg(N)
    r = iroot_ceil(N, L**4, 1, 5)
    m = iroot_ceil(N * L**6, 1, 1, 5)
    M = iroot_ceil(N, r, 1, 2)
    D = iroot_ceil(N, 1, 2, 5)
    return SearchParams(r, m, M, D)


@dataclass
class Factorisation:
    """Prime factors with multiplicities, ascending by prime.

    ``path`` names the heaviest machinery used: "trial", "strassen" (the
    product-tree divisor search) or "onefifth" (the BSGS Lehman search).
    """

    factors: list[tuple[int, int]]
    path: str = "trial"
    trace: Optional[SearchTrace] = field(default=None, compare=False, repr=False)

    def value(self) -> int:
        out = 1
        for p, e in self.factors:
            out *= p**e
        return out

    def __str__(self) -> str:
        if not self.factors:
            return "1"
        return " * ".join(str(p) if e == 1 else f"{p}^{e}" for p, e in self.factors)


def factor_semiprime_or_prime(
    N: int,
    *,
    r: Optional[int] = None,
    m: Optional[int] = None,
    max_giant_steps: int = DEFAULT_MAX_GIANT_STEPS,
    trace: Optional[SearchTrace] = None,
) -> FactorOutcome:
    """Factors(p, q) if N = pq is a semiprime, Prime if N is prime.

    N must be >= 10**9 and either prime or a product of two primes. For other
    inputs any returned split is still a correct split; a Prime verdict that
    a base-2 Fermat test refutes raises PreconditionError instead.
    """
    params = derive_params(N)
    if r is not None or m is not None:
        r = r or params.r
        m = m or params.m
        params = SearchParams(r, m, iroot_ceil(N, r, 1, 2), params.D)
    log.debug("N=%d params %s", N, params)

    p = smallest_prime_divisor(N, params.M)
    if p is not None:
        return split(N, p)

    found = find_large_order_element(N, params.D)
    if isinstance(found, Factor):
        return split(N, found.d)
    if isinstance(found, Prime):
        return Prime()

    out = main_search(N, params.r, params.m, found.alpha, max_giant_steps=max_giant_steps, trace=trace)
    if isinstance(out, Prime) and pow(2, N - 1, N) != 1:
        raise PreconditionError(f"{N} is neither prime nor a semiprime in range")
    return out


def factorise(
    N: int,
    *,
    r: Optional[int] = None,
    m: Optional[int] = None,
    max_giant_steps: int = DEFAULT_MAX_GIANT_STEPS,
    trace: Optional[SearchTrace] = None,
) -> Factorisation:
    if not isinstance(N, int) or N < 1:
        raise ValueError(f"cannot factorise {N!r}")
    found: Counter[int] = Counter()
    path = "trial"
    n = N
    # one copy of each small prime per round, recomputing the bound
    while n > 1:
        M = iroot_ceil(n, 1, 1, 3)
        if M >= TRIAL_CROSSOVER:
            path = "strassen"
        p = smallest_prime_divisor(n, M)
        if p is None:
            break
        found[p] += 1
        n //= p

    if n > 1:
        s = is_perfect_square(n)
        if s is not None:
            assert is_prime(s), s
            found[s] += 2
        elif n < SEMIPRIME_THRESHOLD:
            p = trial_division(n, isqrt(n))
            if p is None:
                found[n] += 1
            else:
                found[p] += 1
                found[n // p] += 1
        else:
            path = "onefifth"
            out = factor_semiprime_or_prime(n, r=r, m=m, max_giant_steps=max_giant_steps, trace=trace)
            if isinstance(out, Factors):
                found[out.p] += 1
                found[out.q] += 1
            else:
                found[n] += 1

    result = Factorisation(sorted(found.items()), path, trace)
    if result.value() != N:
        raise ArithmeticError(f"factorisation of {N} does not multiply back")
    return result
