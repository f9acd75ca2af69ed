from math import isqrt

import pytest

from detfactor.lehman import (
    enumerate_windows,
    in_lehman_interval,
    j_admitted,
    lehman_pair,
    recover_from_candidate,
    recover_from_product,
    window_j_count,
)
from detfactor.znum import iroot_ceil
from oracles import semiprimes_below


def test_recover_examples():
    assert recover_from_candidate(77, 1, 1, 18) == (7, 11)
    assert recover_from_candidate(77, 2, 1, 29) == (7, 11)
    assert recover_from_candidate(77, 1, 1, 17) is None


def test_recover_from_product_examples():
    assert recover_from_product(77, 1, 18) == (7, 11)
    assert recover_from_product(77, 2, 29) == (7, 11)
    assert recover_from_product(77, 2, 30) is None
    with pytest.raises(ValueError):
        recover_from_product(77, 7, 18)


def test_recover_double_root():
    # u = 2p for N = p^2 with a = b = 1: discriminant 0
    assert recover_from_candidate(49, 1, 1, 14) == (7, 7)


def test_recover_complete_and_sound():
    for N, p, q in semiprimes_below(20001):
        for a in range(1, 21):
            for b in range(1, 20 // a + 1):
                u = a * q + b * p
                assert recover_from_candidate(N, a, b, u) == (p, q), (N, a, b)
                for du in (-1, 1):
                    got = recover_from_candidate(N, a, b, u + du)
                    if got is not None:
                        gp, gq = got
                        assert gp * gq == N and gp <= gq and a * gq + b * gp == u + du


def test_windows_examples():
    assert [(w.a, w.b) for w in enumerate_windows(1000, 1, 3)] == [(1, 1)]
    assert [(w.a, w.b) for w in enumerate_windows(1000, 2, 3)] == [(1, 1), (1, 2), (2, 1)]
    w = enumerate_windows(77, 2, 4)[0]
    assert (w.a, w.b, w.base) == (1, 1, 18)


def test_window_invariants():
    N, r, m = 10**12 + 39, 30, 500
    windows = enumerate_windows(N, r, m)
    assert len(windows) == sum(r // a for a in range(1, r + 1))
    for w in windows:
        assert 1 <= w.a * w.b <= r
        assert w.base**2 >= 4 * w.a * w.b * N > (w.base - 1) ** 2
        assert all(j_admitted(N, r, m, w.a, w.b, j) for j in range(w.j_count))
        assert not j_admitted(N, r, m, w.a, w.b, w.j_count)


def test_j_count_against_enumeration():
    for N in (100, 997, 10**6 + 3, 123456789):
        for r in (1, 2, 5):
            for m in (1, 3, 7):
                for ab in (1, 2, 6):
                    j = 0
                    while (4 * r * m * j) ** 2 * ab < N:
                        j += 1
                    assert window_j_count(N, r, m, ab, 1) == j


def test_interval_predicate_against_fractions():
    # reference: compare using isqrt bounds on scaled quantities
    from fractions import Fraction

    def slow(N, r, a, b, u):
        # decide 0 <= u - sqrt(4abN) and u - sqrt(4abN) < sqrt(N)/(4 r sqrt(ab))
        # via high precision rational brackets of the square roots
        scale = 10**40
        s_lo = Fraction(isqrt(4 * a * b * N * scale * scale), scale)
        s_hi = s_lo + Fraction(1, scale)
        t_lo = Fraction(isqrt(N * scale * scale // (16 * r * r * a * b)), scale)
        t_hi = t_lo + Fraction(1, scale)
        if u < s_lo:
            return False
        if u >= s_hi and u - s_lo < t_lo:
            return True
        if u - s_hi >= t_hi:
            return False
        return None  # too close to call

    checked = 0
    for N in range(2, 600, 7):
        for r in (1, 2, 3, 5):
            for a in range(1, 4):
                for b in range(1, 4):
                    base = iroot_ceil(4 * a * b * N, 1, 1, 2)
                    for u in range(max(0, base - 2), base + 40):
                        ref = slow(N, r, a, b, u)
                        if ref is not None:
                            assert in_lehman_interval(N, r, a, b, u) == ref, (N, r, a, b, u)
                            checked += 1
    assert checked > 10_000


def test_lehman_pair_small():
    # 77 = 7 * 11, r = ceil(77/49) = 2
    a, b = lehman_pair(77, 7, 11, 2)
    assert a * b <= 2
    assert in_lehman_interval(77, 2, a, b, a * 11 + b * 7)
