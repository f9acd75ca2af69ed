"""Deterministic search for the smallest prime divisor below a bound."""

from __future__ import annotations

from math import gcd
from typing import Optional

from detfactor import stats
from detfactor.polyring import ModPoly, multipoint_eval, product_tree
from detfactor.znum import iroot_ceil

# below this bound plain trial division is used
TRIAL_CROSSOVER = 1 << 16


def trial_division(N: int, M: int) -> Optional[int]:
    """Smallest prime p <= M dividing N, testing 2, 3, 4, ... in order."""
    _check(N, M)
    if N % 2 == 0 and M >= 2:
        return 2
    d = 3
    limit = M
    while d <= limit:
        if N % d == 0:
            return d
        d += 2
        if d * d > N:
            # N itself is then prime
            return N if N <= M else None
    return None


def _check(N: int, M: int) -> None:
    if N < 2:
        raise ValueError(f"N must be >= 2, got {N}")
    if M < 1:
        raise ValueError(f"M must be >= 1, got {M}")


def smallest_prime_divisor(N: int, M: int, crossover: int = TRIAL_CROSSOVER) -> Optional[int]:
    """Smallest prime p <= M dividing N, or None.

    With d = ceil(sqrt(M)), the polynomial f(x) = (x+1)...(x+d) is evaluated
    at 0, d, ..., (d-1)d; f(jd) is the product of the block jd+1 .. jd+d,
    so the first block sharing a factor with N contains the answer.
    """
    _check(N, M)
    if M < crossover:
        return trial_division(N, M)
    d = iroot_ceil(M, 1, 1, 2)
    f: ModPoly = product_tree([-i for i in range(1, d + 1)], N)
    values = multipoint_eval(f, [j * d for j in range(d)])
    for j, fv in enumerate(values):
        stats.add("gcd")
        if gcd(N, fv) == 1:
            continue
        # gcd(N, fv) == N is handled by the same ascending scan
        for i in range(1, d + 1):
            c = j * d + i
            if c > M:
                return None
            stats.add("gcd")
            if gcd(N, c) > 1:
                return c
    return None
