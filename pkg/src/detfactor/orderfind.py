"""Finding an element of Z_N^* whose multiplicative order exceeds a bound.

Candidates 2, 3, 4, ... are tried in turn. A candidate sharing a factor
with N splits N; a candidate whose order is not found by a bounded
baby-step giant-step search has order above the bound. If the first few
candidates all have small order, a full small-divisor search up to
sqrt(N) settles the question, so the routine always terminates with a
correct answer.
"""

from __future__ import annotations

from math import gcd
from typing import Optional

from detfactor import stats
from detfactor.outcomes import Factor, LargeOrderElement, OrderOutcome, Prime
from detfactor.smallfactor import smallest_prime_divisor
from detfactor.znum import Modulus, NonInvertibleError, ZnElement, iroot_ceil, modinv, residue

DEFAULT_CANDIDATES = 4


def bsgs_order_bounded(alpha, D: int, N: Optional[int] = None) -> Optional[int]:
    """Least e in [1, D] with alpha**e == 1 (mod N), or None."""
    if D < 1:
        raise ValueError("D must be >= 1")
    if isinstance(alpha, ZnElement):
        N = alpha.N
    elif N is None:
        raise TypeError("modulus required when alpha is a plain int")
    a = residue(alpha, N)
    g = gcd(a, N)
    if g != 1:
        raise NonInvertibleError(a, N, g)

    c = iroot_ceil(D, 1, 1, 2)
    baby: dict[int, int] = {}
    x = 1
    for i in range(c):
        if i and x == 1:
            return i if i <= D else None
        baby[x] = i
        x = x * a % N
    stats.add("modmul", c)
    # baby powers are now distinct, so each giant step matches at most one i
    # and the first match is the least exponent
    giant = modinv(x, N)  # alpha^-c
    y = 1
    j = 0
    while j * c <= D:
        j += 1
        y = y * giant % N
        i = baby.get(y)
        if i is not None:
            e = i + j * c
            return e if e <= D else None
    return None


def find_large_order_element(N: int, D: int, candidates: int = DEFAULT_CANDIDATES) -> OrderOutcome:
    """Return an alpha with ord_N(alpha) > D, a nontrivial factor, or Prime.

    Requires N**(2/5) <= D <= N.
    """
    if N < 2:
        raise ValueError("N must be >= 2")
    if D > N or D ** 5 < N ** 2:
        raise ValueError(f"D = {D} outside [N^(2/5), N] for N = {N}")
    mod = Modulus(N)
    alpha = 2
    tried = 0
    while tried < candidates and alpha < N:
        g = gcd(alpha, N)
        stats.add("gcd")
        if g > 1:
            return Factor(g)
        if bsgs_order_bounded(alpha, D, N) is None:
            return LargeOrderElement(ZnElement(alpha, mod))
        tried += 1
        alpha += 1
    stats.add("orderfind_fallback")
    p = smallest_prime_divisor(N, iroot_ceil(N, 1, 1, 2))
    if p is not None and p < N:
        return Factor(p)
    return Prime()
