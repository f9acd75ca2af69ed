"""Lehman candidates u = a*q + b*p: recovery of p, q and the search windows.

Every real-valued inequality here is decided by squaring both sides and
comparing integers.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Optional

from detfactor.znum import iroot_ceil, is_perfect_square


@dataclass(frozen=True)
class CandidateWindow:
    """Candidates base + y with 0 <= y < sqrt(N) / (4 r sqrt(ab)), split as y = i + j*m."""

    a: int
    b: int
    base: int
    j_count: int


def in_lehman_interval(N: int, r: int, a: int, b: int, u: int) -> bool:
    """0 <= u - sqrt(4abN) < sqrt(N) / (4 r sqrt(ab)), exactly."""
    ab = a * b
    if u < 0 or u * u < 4 * ab * N:
        return False
    K = 16 * r * r * ab
    # u <= sqrt(N/K): left side is <= 0 < sqrt(4abN)
    if u * u * K <= N:
        return True
    # both sides positive: (u - sqrt(N/K))^2 < 4abN, times K
    lhs = K * (u * u - 4 * ab * N) + N
    return lhs < 0 or lhs * lhs < 4 * u * u * K * N


def j_admitted(N: int, r: int, m: int, a: int, b: int, j: int) -> bool:
    """0 <= j < sqrt(N) / (4 r m sqrt(ab)), exactly."""
    return j >= 0 and (4 * r * m * j) ** 2 * a * b < N


def window_j_count(N: int, r: int, m: int, a: int, b: int) -> int:
    return iroot_ceil(N, 16 * r * r * m * m * a * b, 1, 2)


def enumerate_windows(N: int, r: int, m: int) -> list[CandidateWindow]:
    """All (a, b) with ab <= r, ordered by a then b."""
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    out = []
    for a in range(1, r + 1):
        for b in range(1, r // a + 1):
            base = iroot_ceil(4 * a * b * N, 1, 1, 2)
            out.append(CandidateWindow(a, b, base, window_j_count(N, r, m, a, b)))
    return out


def _roots(N: int, ab: int, u: int) -> Optional[tuple[int, int]]:
    # integer roots of y^2 - u y + abN, larger first
    disc = u * u - 4 * ab * N
    s = is_perfect_square(disc)
    if s is None or (u - s) % 2:
        return None
    return (u + s) // 2, (u - s) // 2


def recover_from_candidate(N: int, a: int, b: int, u: int) -> Optional[tuple[int, int]]:
    """Return (p, q) with p <= q, pq = N and u = a*q + b*p, if they exist."""
    if a < 1 or b < 1:
        raise ValueError("a and b must be positive")
    roots = _roots(N, a * b, u)
    if roots is None:
        return None
    y1, y2 = roots
    for aq, bp in ((y1, y2), (y2, y1)):
        if aq <= 0 or bp <= 0 or aq % a or bp % b:
            continue
        q, p = aq // a, bp // b
        if 1 < p <= q and p * q == N:
            assert a * q + b * p == u
            return p, q
    return None


def recover_from_product(N: int, ab: int, u: int) -> Optional[tuple[int, int]]:
    """Like recover_from_candidate, knowing only the product ab (coprime to N)."""
    if ab < 1:
        raise ValueError("ab must be positive")
    if gcd(ab, N) != 1:
        raise ValueError(f"gcd(ab, N) = {gcd(ab, N)} != 1")
    roots = _roots(N, ab, u)
    if roots is None:
        return None
    for y in roots:
        g = gcd(y, N)
        if 1 < g < N:
            p, q = sorted((g, N // g))
            return p, q
    return None


def lehman_pair(N: int, p: int, q: int, r: int) -> Optional[tuple[int, int]]:
    """First (a, b) with ab <= r whose candidate a*q + b*p lies in its interval."""
    for a in range(1, r + 1):
        for b in range(1, r // a + 1):
            if in_lehman_interval(N, r, a, b, a * q + b * p):
                return a, b
    return None
