"""Exact integer and modular arithmetic primitives.

Everything here works on Python ints; no floating point is used anywhere,
so results are identical on every platform.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt
from typing import Optional, Union

from detfactor import stats


class NonInvertibleError(ArithmeticError):
    """Raised when an element of Z_N has no inverse.

    ``factor`` is gcd(x, N), which is a divisor of N greater than 1.
    """

    def __init__(self, value: int, modulus: int, factor: int):
        super().__init__(f"{value} is not invertible mod {modulus} (gcd {factor})")
        self.value = value
        self.modulus = modulus
        self.factor = factor


@dataclass(frozen=True)
class Modulus:
    N: int

    def __post_init__(self):
        if not isinstance(self.N, int) or self.N < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {self.N!r}")

    def __call__(self, value: int) -> "ZnElement":
        return ZnElement(value % self.N, self)


@dataclass(frozen=True)
class ZnElement:
    """A residue in [0, N) tied to its modulus."""

    value: int
    modulus: Modulus

    def __post_init__(self):
        if not 0 <= self.value < self.modulus.N:
            raise ValueError(f"residue {self.value} outside [0, {self.modulus.N})")

    @property
    def N(self) -> int:
        return self.modulus.N

    def _coerce(self, other) -> int:
        if isinstance(other, ZnElement):
            if other.modulus != self.modulus:
                raise ValueError("modulus mismatch")
            return other.value
        if isinstance(other, int):
            return other
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ZnElement((self.value + o) % self.N, self.modulus)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ZnElement((self.value - o) % self.N, self.modulus)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ZnElement((o - self.value) % self.N, self.modulus)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return ZnElement(self.value * o % self.N, self.modulus)

    __rmul__ = __mul__

    def __neg__(self):
        return ZnElement(-self.value % self.N, self.modulus)

    def __pow__(self, e: int):
        return modpow(self, e)

    def inverse(self) -> "ZnElement":
        return ZnElement(modinv(self.value, self.N), self.modulus)

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value


Residue = Union[int, ZnElement]


def residue(x: Residue, N: int) -> int:
    """Return the representative of ``x`` in [0, N)."""
    if isinstance(x, ZnElement):
        if x.N != N:
            raise ValueError(f"element lives mod {x.N}, expected mod {N}")
        return x.value
    return x % N


def lg(n: int) -> int:
    """ceil(log2 n) for n >= 2, and 1 for n = 1."""
    if n < 1:
        raise ValueError("lg is defined for n >= 1")
    if n == 1:
        return 1
    return (n - 1).bit_length()


def _iroot(x: int, k: int) -> int:
    """floor(x ** (1/k)) for x >= 0 by integer Newton iteration."""
    if x < 0:
        raise ValueError("negative radicand")
    if x < 2 or k == 1:
        return x
    if k == 2:
        return isqrt(x)
    # initial guess is >= the true root, so Newton decreases monotonically
    z = 1 << -(-x.bit_length() // k)
    while True:
        t = ((k - 1) * z + x // z ** (k - 1)) // k
        if t >= z:
            break
        z = t
    while z ** k > x:
        z -= 1
    while (z + 1) ** k <= x:
        z += 1
    return z


def iroot_floor(x: int, y: int = 1, u: int = 1, v: int = 1) -> int:
    """Exact floor((x/y) ** (u/v)).

    The result z satisfies z**v * y**u <= x**u < (z+1)**v * y**u.
    """
    if y <= 0:
        raise ValueError("y must be positive")
    if x < 0 or u <= 0 or v <= 0:
        raise ValueError("x must be >= 0 and u, v positive")
    num, den = x ** u, y ** u
    # floor((num/den)^(1/v)) == floor(floor(num/den)^(1/v))
    z = _iroot(num // den, v)
    assert z ** v * den <= num < (z + 1) ** v * den
    return z


def iroot_ceil(x: int, y: int = 1, u: int = 1, v: int = 1) -> int:
    """Exact ceil((x/y) ** (u/v))."""
    z = iroot_floor(x, y, u, v)
    if z ** v * y ** u == x ** u:
        return z
    return z + 1


def is_perfect_square(x: int) -> Optional[int]:
    if x < 0:
        return None
    s = isqrt(x)
    return s if s * s == x else None


def gcd_ext(x: int, y: int) -> tuple[int, int, int]:
    """Extended Euclid: returns (g, u, v) with u*x + v*y == g == gcd(|x|, |y|)."""
    if x == 0 and y == 0:
        raise ValueError("gcd_ext(0, 0) is undefined")
    old_r, r = x, y
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    return old_r, old_s, old_t


def modinv(x: int, N: int) -> int:
    x %= N
    g = gcd(x, N)
    if g != 1:
        raise NonInvertibleError(x, N, g)
    return pow(x, -1, N)


def modpow(x: Residue, e: int, N: Optional[int] = None):
    """x**e mod N by repeated squaring; negative e goes through the inverse.

    Returns a ZnElement when ``x`` is one, otherwise an int (``N`` is then
    required).
    """
    if isinstance(x, ZnElement):
        N_ = x.N
    elif N is None:
        raise TypeError("modulus required when x is a plain int")
    else:
        N_ = N
    base = residue(x, N_)
    if e < 0:
        base = modinv(base, N_)
        e = -e
    stats.add("modpow")
    out = pow(base, e, N_)
    if isinstance(x, ZnElement):
        return ZnElement(out, x.modulus)
    return out


_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Miller-Rabin with the bases above is exact for n below this bound
MR_DETERMINISTIC_LIMIT = 3317044064679887385961981


def is_prime(n: int) -> bool:
    """Miller-Rabin primality test.

    Deterministic for n < MR_DETERMINISTIC_LIMIT; a strong probable-prime
    test above it.
    """
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while not d & 1:
        d >>= 1
        s += 1
    for a in _MR_BASES:
        x = pow(a, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True
