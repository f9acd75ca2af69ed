"""Dense polynomials over Z_N.

Multiplication goes through Kronecker substitution: coefficients are packed
into one big integer per operand, the integers are multiplied, and the
product is cut back into slots. When gmpy2 is importable its GMP integers
are used for the big multiplication; otherwise Python ints are used.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Sequence

from detfactor import stats
from detfactor.znum import Modulus, NonInvertibleError, ZnElement, lg, modinv, residue

try:
    import gmpy2
except ImportError:  # pragma: no cover - exercised only without gmpy2
    gmpy2 = None

# below this degree a remainder-tree node is finished off by Horner
_HORNER_CUTOFF = 16
# below this divisor degree long division beats Newton inversion
_NEWTON_CUTOFF = 64


class ModPoly:
    """Polynomial in Z_N[x]; ``coeffs[i]`` is the coefficient of x**i.

    Coefficients are kept reduced and trailing zeros are stripped; the zero
    polynomial is ``[0]``.
    """

    __slots__ = ("coeffs", "N")

    def __init__(self, coeffs: Iterable, N: int | Modulus):
        if isinstance(N, Modulus):
            N = N.N
        if N < 2:
            raise ValueError("modulus must be >= 2")
        cs = [residue(c, N) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [0]
        self.coeffs = cs
        self.N = N

    @classmethod
    def _raw(cls, coeffs: list[int], N: int) -> "ModPoly":
        # trusted constructor: coeffs already reduced
        p = cls.__new__(cls)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs.pop()
        p.coeffs = coeffs if coeffs else [0]
        p.N = N
        return p

    @property
    def modulus(self) -> Modulus:
        return Modulus(self.N)

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        if len(self.coeffs) == 1 and self.coeffs[0] == 0:
            return -1
        return len(self.coeffs) - 1

    def is_monic(self) -> bool:
        return self.coeffs[-1] == 1

    def __eq__(self, other):
        if not isinstance(other, ModPoly):
            return NotImplemented
        return self.N == other.N and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.N, tuple(self.coeffs)))

    def __repr__(self):
        return f"ModPoly({self.coeffs}, N={self.N})"

    def __mul__(self, other: "ModPoly") -> "ModPoly":
        return poly_mul(self, other)

    def __call__(self, x):
        return horner(self.coeffs, residue(x, self.N), self.N)

    def elements(self) -> list[ZnElement]:
        mod = self.modulus
        return [ZnElement(c, mod) for c in self.coeffs]


def horner(coeffs: Sequence[int], x: int, N: int) -> int:
    acc = 0
    for c in reversed(coeffs):
        acc = (acc * x + c) % N
    return acc


def slot_bits(N: int, shorter: int) -> int:
    """Kronecker slot width: holds a sum of `shorter` products of residues < N."""
    return 2 * (N - 1).bit_length() + lg(shorter) + 1


def _kronecker_gmp(f, g, N: int, bits: int) -> list[int]:
    prod = gmpy2.pack(f, bits) * gmpy2.pack(g, bits)
    count = len(f) + len(g) - 1
    slots = gmpy2.unpack(prod, bits)
    Nz = gmpy2.mpz(N)
    out = [int(c % Nz) for c in slots[:count]]
    out.extend([0] * (count - len(out)))
    return out


def _kronecker_bytes(f, g, N: int, bits: int) -> list[int]:
    width = (bits + 7) // 8
    pack = lambda cs: int.from_bytes(b"".join(c.to_bytes(width, "little") for c in cs), "little")
    count = len(f) + len(g) - 1
    buf = (pack(f) * pack(g)).to_bytes(width * count, "little")
    fb = int.from_bytes
    return [fb(buf[i:i + width], "little") % N for i in range(0, width * count, width)]


def kronecker_mul(f: Sequence[int], g: Sequence[int], N: int) -> list[int]:
    """Product of two reduced coefficient lists mod N via Kronecker substitution.

    Each operand becomes one integer with a coefficient per slot; the slot
    width leaves room for the largest convolution sum, so no carries cross
    slot boundaries.
    """
    bits = slot_bits(N, min(len(f), len(g)))
    stats.add("poly_mul")
    stats.record_max("max_poly_degree", len(f) + len(g) - 2)
    if gmpy2 is not None:
        return _kronecker_gmp(f, g, N, bits)
    return _kronecker_bytes(f, g, N, bits)


def _schoolbook(f: Sequence[int], g: Sequence[int], N: int) -> list[int]:
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return [c % N for c in out]


# operands shorter than this are multiplied directly inside the trees
_SCHOOLBOOK_CUTOFF = 8


def mul_coeffs(f: Sequence[int], g: Sequence[int], N: int) -> list[int]:
    if not f or not g:
        return [0]
    if min(len(f), len(g)) <= _SCHOOLBOOK_CUTOFF and len(f) * len(g) <= 256:
        return _schoolbook(f, g, N)
    return kronecker_mul(f, g, N)


def poly_mul(f: ModPoly, g: ModPoly) -> ModPoly:
    if f.N != g.N:
        raise ValueError(f"modulus mismatch: {f.N} vs {g.N}")
    return ModPoly._raw(kronecker_mul(f.coeffs, g.coeffs, f.N), f.N)


def _points(values: Sequence, N: int | None) -> tuple[list[int], int]:
    if N is None:
        first = values[0]
        if not isinstance(first, ZnElement):
            raise TypeError("modulus required when points are plain ints")
        N = first.N
    return [residue(v, N) for v in values], N


def subproduct_tree(points: Sequence[int], N: int) -> list[list[list[int]]]:
    """All levels of the product tree; level 0 holds the linear factors x - v.

    Pairs are merged left to right and an odd node is promoted unchanged.
    """
    level = [[(-v) % N, 1] for v in points]
    levels = [level]
    while len(level) > 1:
        nxt = [mul_coeffs(level[k], level[k + 1], N) for k in range(0, len(level) - 1, 2)]
        if len(level) % 2:
            nxt.append(level[-1])
        levels.append(nxt)
        level = nxt
    return levels


def product_tree(values: Sequence, N: int | None = None) -> ModPoly:
    """The monic polynomial (x - v_1)...(x - v_n)."""
    if len(values) == 0:
        raise ValueError("product_tree needs at least one value")
    pts, N = _points(values, N)
    return ModPoly._raw(subproduct_tree(pts, N)[-1][0], N)


def _inverse_series(b: list[int], k: int, N: int) -> list[int]:
    """Power series inverse of b modulo x**k (b[0] must be invertible)."""
    g = [modinv(b[0], N)]
    prec = 1
    while prec < k:
        prec = min(2 * prec, k)
        bg = mul_coeffs(b[:prec], g, N)[:prec]
        # g * (2 - b g)
        e = [(-c) % N for c in bg]
        e[0] = (e[0] + 2) % N
        g = mul_coeffs(g, e, N)[:prec]
    return g


def divmod_coeffs(a: list[int], b: list[int], N: int) -> tuple[list[int], list[int]]:
    """Quotient and remainder of a by b; b's leading coefficient must be a unit."""
    db = len(b) - 1
    while db > 0 and b[db] == 0:
        db -= 1
    b = b[:db + 1]
    if db == 0 and b[0] == 0:
        raise ZeroDivisionError("polynomial division by zero")
    da = len(a) - 1
    if da < db:
        return [0], list(a)
    if db < _NEWTON_CUTOFF:
        return _long_division(a, b, N)
    k = da - db + 1
    inv = _inverse_series(b[::-1], k, N)
    q = mul_coeffs(a[::-1][:k], inv, N)[:k][::-1]
    qb = mul_coeffs(q, b, N)
    r = [(a[i] - qb[i]) % N for i in range(db)]
    return q, r or [0]


def _long_division(a: list[int], b: list[int], N: int) -> tuple[list[int], list[int]]:
    db = len(b) - 1
    lead_inv = modinv(b[-1], N)
    r = list(a)
    q = [0] * (len(a) - db)
    for i in range(len(a) - 1 - db, -1, -1):
        c = r[i + db] * lead_inv % N
        q[i] = c
        if c:
            for t in range(db):
                r[i + t] = (r[i + t] - c * b[t]) % N
    return q, r[:db] or [0]


def poly_divmod(f: ModPoly, g: ModPoly) -> tuple[ModPoly, ModPoly]:
    if f.N != g.N:
        raise ValueError("modulus mismatch")
    q, r = divmod_coeffs(f.coeffs, g.coeffs, f.N)
    return ModPoly._raw(q, f.N), ModPoly._raw(r, f.N)


def multipoint_eval(f: ModPoly, points: Sequence) -> list[int]:
    """[f(p) for p in points] via a subproduct tree and a remainder tree."""
    if len(points) == 0:
        raise ValueError("multipoint_eval needs at least one point")
    N = f.N
    pts = [residue(p, N) for p in points]
    levels = subproduct_tree(pts, N)
    out: list[int] = []

    def descend(rem: list[int], depth: int, idx: int) -> None:
        node = levels[depth][idx]
        if len(node) - 1 <= _HORNER_CUTOFF:
            # leaves under this node, accounting for promoted odd nodes
            lo, hi = _leaf_span(levels, depth, idx)
            for v in pts[lo:hi]:
                out.append(horner(rem, v, N))
            return
        _, r = divmod_coeffs(rem, node, N)
        left = 2 * idx
        child = levels[depth - 1]
        if left + 1 < len(child):
            descend(r, depth - 1, left)
            descend(r, depth - 1, left + 1)
        else:
            descend(r, depth - 1, left)

    top = len(levels) - 1
    _, r = divmod_coeffs(f.coeffs, levels[top][0], N)
    descend(r, top, 0)
    stats.add("multipoint_points", len(pts))
    return out


def _leaf_span(levels, depth: int, idx: int) -> tuple[int, int]:
    lo = hi = idx
    for d in range(depth, 0, -1):
        lo = 2 * lo
        hi = min(2 * hi + 1, len(levels[d - 1]) - 1)
    return lo, hi + 1


def _laurent_shift(k: int, n: int) -> int:
    """Array slot holding the coefficient of x**k in a Laurent series starting at x**-n."""
    return k + n


def eval_geometric(f: ModPoly, alpha, m: int) -> list[int]:
    """[f(1), f(alpha), ..., f(alpha**(m-1))] with a single polynomial product.

    Uses ij = C(i,2) + C(-j,2) - C(i-j,2), so
    f(alpha^i) = alpha^C(i,2) * sum_j alpha^C(-j,2) f_j * alpha^-C(i-j,2).
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    N = f.N
    a = residue(alpha, N)
    g0 = gcd(a, N)
    if g0 != 1:
        raise NonInvertibleError(a, N, g0)
    a_inv = modinv(a, N)
    coeffs = f.coeffs
    n = len(coeffs) - 1

    # h_i = a^C(i,2), i < m, using C(i+1,2) = C(i,2) + i
    h = [0] * m
    cur, step = 1, 1
    for i in range(m):
        h[i] = cur
        cur = cur * step % N
        step = step * a % N

    # f'_j = a^C(-j,2) f_j with C(-j,2) = C(j+1,2)
    fp = [0] * (n + 1)
    cur, step = 1, 1
    for j in range(n + 1):
        step = step * a % N
        fp[j] = cur * coeffs[j] % N
        cur = cur * step % N

    # g_k = a^-C(k,2) for k = -n .. m-1, stored from slot 0 = x^-n
    off = _laurent_shift(0, n)
    g = [0] * (n + m)
    cur, step = 1, 1
    for k in range(m):
        g[off + k] = cur
        cur = cur * step % N
        step = step * a_inv % N
    cur, step = 1, 1
    for j in range(1, n + 1):
        step = step * a_inv % N
        cur = cur * step % N
        g[off - j] = cur

    stats.add("modmul", 3 * (n + m))
    prod = kronecker_mul(fp, g, N)
    return [hi * c % N for hi, c in zip(h, prod[off:off + m])]
