"""Baby-step giant-step sweep over all Lehman windows at once.

The baby steps are alpha^0 .. alpha^(m-1). Each window (a, b) contributes
giant steps v = alpha^(-jm) * alpha^(aN + b - base). An exact match
v == alpha^i proposes the candidate u = i + jm + base. Giant steps that match
nothing are handed to :func:`find_collisions`, which detects the weaker
congruence v == alpha^i modulo a prime factor of N through a GCD.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional, Sequence

from detfactor import stats
from detfactor.lehman import enumerate_windows, recover_from_candidate
from detfactor.outcomes import FactorOutcome, Factors, NoFactorsFound, Prime, split
from detfactor.polyring import eval_geometric, product_tree
from detfactor.znum import NonInvertibleError, modinv, residue

DEFAULT_MAX_GIANT_STEPS = 10_000_000


class SearchLimitExceeded(RuntimeError):
    """The requested search would materialise more giant steps than allowed."""

    def __init__(self, needed: int, limit: int):
        super().__init__(f"search needs {needed} giant steps, limit is {limit}")
        self.needed = needed
        self.limit = limit


class PreconditionError(ValueError):
    pass


@dataclass
class SearchTrace:
    m: int = 0
    r: int = 0
    windows: int = 0
    giant_steps: int = 0
    matches: int = 0
    collision_inputs: int = 0
    found_in: Optional[str] = None
    match_records: list = field(default_factory=list)

    def lines(self) -> list[str]:
        return [
            f"baby steps m = {self.m}",
            f"windows (a,b) with ab <= {self.r}: {self.windows}",
            f"giant steps s = {self.giant_steps}",
            f"exact matches = {self.matches}",
            f"collision search inputs n = {self.collision_inputs}",
            f"result from: {self.found_in or 'none (prime)'}",
        ]


def _alpha(alpha, N: int) -> int:
    a = residue(alpha, N)
    g = gcd(a, N)
    if g != 1:
        raise NonInvertibleError(a, N, g)
    return a


def find_collisions(N: int, alpha, m: int, v: Sequence) -> FactorOutcome:
    """Look for v_h == alpha^i modulo a prime factor of N, 0 <= i < m.

    Callers guarantee no v_h equals some alpha^i modulo N itself.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if len(v) == 0:
        return NoFactorsFound()
    a = _alpha(alpha, N)
    vs = [residue(x, N) for x in v]
    f = product_tree(vs, N)
    values = eval_geometric(f, a, m)
    power = 1
    for fv in values:
        g = gcd(N, fv)
        stats.add("gcd")
        if 1 < g < N:
            return split(N, g)
        if g == N:
            for vh in vs:
                gh = gcd(N, vh - power)
                stats.add("gcd")
                if 1 < gh < N:
                    return split(N, gh)
        power = power * a % N
    return NoFactorsFound()


def main_search(
    N: int,
    r: int,
    m: int,
    alpha,
    *,
    max_giant_steps: int = DEFAULT_MAX_GIANT_STEPS,
    trace: Optional[SearchTrace] = None,
) -> FactorOutcome:
    """Return Factors(p, q) if N is a semiprime pq with sqrt(N/r) <= p < sqrt(N), else Prime.

    Requires ord_N(alpha) >= m.
    """
    if r < 1 or m < 1:
        raise ValueError("r and m must be positive")
    a = _alpha(alpha, N)
    if trace is None:
        trace = SearchTrace()
    trace.m, trace.r = m, r

    # step 1: baby steps, screening alpha^i - 1 against N
    baby = [0] * m
    x = 1
    for i in range(m):
        baby[i] = x
        if i:
            g = gcd(N, x - 1)
            if g != 1:
                if g == N:
                    raise PreconditionError(f"ord_N(alpha) = {i} < m = {m}")
                trace.found_in = "baby-step screening"
                return split(N, g)
        x = x * a % N
    stats.add("modmul", m)
    stats.add("gcd", m - 1)
    inv_m = modinv(x, N)  # alpha^-m

    # step 2: giant steps for every window
    windows = enumerate_windows(N, r, m)
    s = sum(w.j_count for w in windows)
    trace.windows, trace.giant_steps = len(windows), s
    if s > max_giant_steps:
        raise SearchLimitExceeded(s, max_giant_steps)
    gvals = [0] * s
    owner = [0] * s  # index of the window
    jidx = [0] * s
    k = 0
    for w_idx, w in enumerate(windows):
        e = w.a * N + w.b - w.base
        t = pow(a, e, N) if e >= 0 else pow(modinv(a, N), -e, N)
        for j in range(w.j_count):
            gvals[k] = t
            owner[k] = w_idx
            jidx[k] = j
            k += 1
            t = t * inv_m % N
    stats.add("modpow", len(windows))
    stats.add("modmul", s)

    # step 3: sort both lists by value and merge
    border = sorted(range(m), key=baby.__getitem__)
    gorder = sorted(range(s), key=gvals.__getitem__)
    matched = bytearray(s)
    matches = []
    bi = 0
    for k in gorder:
        val = gvals[k]
        while bi < m and baby[border[bi]] < val:
            bi += 1
        if bi == m:
            break
        if baby[border[bi]] == val:
            matched[k] = 1
            matches.append((border[bi], k))
    trace.matches = len(matches)
    for i, k in matches:
        w = windows[owner[k]]
        j = jidx[k]
        u = i + j * m + w.base
        trace.match_records.append((i, w.a, w.b, j, u))
        pq = recover_from_candidate(N, w.a, w.b, u)
        if pq is not None:
            trace.found_in = "exact match"
            return Factors(*pq)

    # step 4: collisions modulo p or q among the unmatched giant steps
    rest = [gvals[k] for k in range(s) if not matched[k]]
    trace.collision_inputs = len(rest)
    if rest:
        out = find_collisions(N, a, m, rest)
        if isinstance(out, Factors):
            trace.found_in = "collision search"
            return out
    return Prime()
