import random
from math import gcd

import pytest

from detfactor.orderfind import bsgs_order_bounded, find_large_order_element
from detfactor.outcomes import Factor, LargeOrderElement, Prime
from detfactor.znum import Modulus, NonInvertibleError, iroot_ceil, is_prime
from oracles import multiplicative_order


def test_bsgs_examples():
    assert bsgs_order_bounded(1, 5, 7) == 1
    assert bsgs_order_bounded(Modulus(7)(1), 1) == 1
    assert bsgs_order_bounded(2, 10, 15) == 4
    assert bsgs_order_bounded(2, 3, 15) is None


def test_bsgs_non_unit():
    with pytest.raises(NonInvertibleError) as exc:
        bsgs_order_bounded(6, 10, 15)
    assert exc.value.factor == 3


def test_bsgs_matches_enumeration():
    rng = random.Random(21)
    for _ in range(2000):
        N = rng.randrange(2, 5000)
        a = rng.randrange(1, N) if N > 2 else 1
        if gcd(a, N) != 1:
            continue
        D = rng.randrange(1, 2 * N)
        assert bsgs_order_bounded(a, D, N) == multiplicative_order(a, N, D), (a, N, D)


def test_find_examples():
    out = find_large_order_element(15, 3)
    assert isinstance(out, LargeOrderElement) and out.alpha.value == 2
    assert find_large_order_element(9, 9) == Factor(3)


def test_find_prime_never_factor():
    N = 10**9 + 7
    D = iroot_ceil(N, 1, 2, 5)
    out = find_large_order_element(N, D)
    assert isinstance(out, (LargeOrderElement, Prime))


def test_find_precondition():
    with pytest.raises(ValueError):
        find_large_order_element(10**6, 100)  # 100^5 < 10^12
    with pytest.raises(ValueError):
        find_large_order_element(10, 11)


def test_fallback_path():
    # candidates=0 skips straight to the exhaustive divisor search
    assert find_large_order_element(101, 101, candidates=0) == Prime()
    assert find_large_order_element(91, 91, candidates=0) == Factor(7)


def test_outputs_reverify():
    rng = random.Random(22)
    for _ in range(1500):
        N = rng.randrange(2, 200_000)
        D = iroot_ceil(N, 1, 2, 5)
        out = find_large_order_element(N, D)
        if isinstance(out, LargeOrderElement):
            assert gcd(out.alpha.value, N) == 1
            assert bsgs_order_bounded(out.alpha, D) is None
            assert multiplicative_order(out.alpha.value, N, D) is None
        elif isinstance(out, Factor):
            assert 1 < out.d < N and N % out.d == 0
        else:
            assert is_prime(N)
