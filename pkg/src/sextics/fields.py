"""Exact arithmetic in prime fields F_p and small extensions F_{p^k}.

An element of F_p is a plain int in [0, p); the modulus travels as an
explicit argument.  The characteristic is required to exceed 5
throughout (the sextic families degenerate at 2, 3, 5), so every
modulus is an odd prime >= 7 and may be as large as 2**31.

Extensions F_{p^k} for k in {2, 3} exist only to back brute-force
counting oracles.  Their elements are tuples of k ints (coefficients
of the residue class, lowest degree first), and the quotienting
polynomial is chosen deterministically so oracle counts reproduce.
"""

from __future__ import annotations

import functools
import itertools
import math

import numpy as np

MIN_PRIME = 7
MAX_PRIME = 2**31

# Witnesses for deterministic Miller-Rabin, sufficient for n < 3.3e24
# (Sorenson & Webster), far beyond the 2**31 modulus ceiling.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for n < 2**64."""
    if n < 2:
        return False
    for b in _MR_BASES:
        if n % b == 0:
            return n == b
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for b in _MR_BASES:
        x = pow(b, d, n)
        if x == 1 or x == n - 1:
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def validate_prime(p: int) -> int:
    """Check that p is a usable characteristic: prime, 7 <= p < 2**31."""
    if not isinstance(p, int):
        raise ValueError(f"modulus must be an int, got {type(p).__name__}")
    if p < MIN_PRIME:
        raise ValueError(f"characteristic must be at least {MIN_PRIME}, got {p}")
    if p >= MAX_PRIME:
        raise ValueError(f"modulus {p} exceeds the 2**31 ceiling")
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p


def inv_mod(x: int, p: int) -> int:
    x %= p
    if x == 0:
        raise ZeroDivisionError(f"0 is not invertible mod {p}")
    return pow(x, p - 2, p)


def legendre(x: int, p: int) -> int:
    """Quadratic character of x mod p: 0, 1 or -1."""
    x %= p
    if x == 0:
        return 0
    return 1 if pow(x, (p - 1) // 2, p) == 1 else -1


def sqrt_mod(x: int, p: int):
    """A square root of x mod p, or None if x is a non-residue.

    The returned root is canonical: the representative <= (p-1)/2.
    Tonelli-Shanks; the p % 4 == 3 shortcut covers half the primes.
    """
    x %= p
    if x == 0:
        return 0
    if legendre(x, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(x, (p + 1) // 4, p)
        return min(r, p - r)
    # p % 4 == 1: full Tonelli-Shanks
    s, e = p - 1, 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while legendre(n, p) != -1:
        n += 1
    r = pow(x, (s + 1) // 2, p)
    b = pow(x, s, p)
    g = pow(n, s, p)
    while b != 1:
        t, m = b, 0
        while t != 1:
            t = t * t % p
            m += 1
        gs = pow(g, 1 << (e - m - 1), p)
        g = gs * gs % p
        r = r * gs % p
        b = b * g % p
        e = m
    return min(r, p - r)


def floor_isqrt(n: int) -> int:
    """Largest r with r*r <= n.  Exact for arbitrary precision ints."""
    if n < 0:
        raise ValueError("floor_isqrt of a negative number")
    return math.isqrt(n)


def chi_table(p: int) -> np.ndarray:
    """Vector of quadratic-character values chi[0..p-1] as int64."""
    t = np.full(p, -1, dtype=np.int64)
    r = np.arange(p, dtype=np.int64)
    t[(r * r) % p] = 1
    t[0] = 0
    return t


@functools.lru_cache(maxsize=64)
def _chi_table_cached(p: int) -> np.ndarray:
    return chi_table(p)


class ExtField:
    """The field F_{p^k} as F_p[y] / (m(y)), k in {2, 3}.

    m is the first monic irreducible y^k + c_{k-1} y^{k-1} + ... + c_0
    in lexicographic order of (c_0, c_1, ...).  For k <= 3
    irreducibility is equivalent to having no root in F_p.

    Elements are tuples of k ints.  Scalar arithmetic is provided for
    spot checks; counting oracles use the vectorized methods that act
    on (n, k) int64 arrays of coefficient rows.
    """

    def __init__(self, p, k):
        validate_prime(p)
        if k not in (2, 3):
            raise ValueError(f"extension degree must be 2 or 3, got {k}")
        self.p = p
        self.k = k
        self.q = p**k
        self.modulus_poly = self._find_irreducible(p, k)
        # rows m..2k-2 of the reduction map y^m -> vector of length k
        self._reduction = self._reduction_rows()
        # matrix of the Frobenius x -> x^p in the basis 1, y, y^2, ...
        self._frob = self._frobenius_matrix()
        self._chi = _chi_table_cached(p)

    @staticmethod
    def _find_irreducible(p, k):
        # first (c_0, ..., c_{k-1}) in lexicographic order whose monic
        # polynomial has no root in F_p (equivalent to irreducible at k <= 3)
        for cs in itertools.product(range(p), repeat=k):
            poly = list(cs) + [1]  # monic, low first
            if not any(
                sum(c * pow(x, i, p) for i, c in enumerate(poly)) % p == 0
                for x in range(p)
            ):
                return tuple(poly)
        raise AssertionError("no irreducible polynomial found")  # unreachable

    def _reduction_rows(self):
        p, k = self.p, self.k
        # y^k = -(c_0 + c_1 y + ...), then multiply up by y and re-reduce
        rows = [[(-c) % p for c in self.modulus_poly[:k]]]
        for _ in range(k - 2):
            prev = rows[-1]
            nxt = [0] + prev[: k - 1]
            carry = prev[k - 1]
            nxt = [(nxt[i] + carry * rows[0][i]) % p for i in range(k)]
            rows.append(nxt)
        return np.array(rows, dtype=np.int64)

    def _frobenius_matrix(self):
        k = self.k
        cols = []
        for i in range(k):
            e = tuple(1 if j == i else 0 for j in range(k))
            cols.append(self.pow(e, self.p))
        return np.array(cols, dtype=np.int64).T  # column i = (y^i)^p

    # ----- scalar ops on coefficient tuples -----

    def zero(self):
        return (0,) * self.k

    def one(self):
        return self.embed(1)

    def embed(self, c):
        return (c % self.p,) + (0,) * (self.k - 1)

    def add(self, x, y):
        p = self.p
        return tuple((a + b) % p for a, b in zip(x, y))

    def sub(self, x, y):
        p = self.p
        return tuple((a - b) % p for a, b in zip(x, y))

    def neg(self, x):
        p = self.p
        return tuple((-a) % p for a in x)

    def mul(self, x, y):
        p, k = self.p, self.k
        conv = [0] * (2 * k - 1)
        for i, a in enumerate(x):
            for j, b in enumerate(y):
                conv[i + j] = (conv[i + j] + a * b) % p
        out = list(conv[:k])
        for m in range(k, 2 * k - 1):
            row = self._reduction[m - k]
            c = conv[m]
            for i in range(k):
                out[i] = (out[i] + c * int(row[i])) % p
        return tuple(out)

    def pow(self, x, e):
        acc = self.one()
        base = x
        while e:
            if e & 1:
                acc = self.mul(acc, base)
            base = self.mul(base, base)
            e >>= 1
        return acc

    def inv(self, x):
        if all(a == 0 for a in x):
            raise ZeroDivisionError("0 is not invertible")
        return self.pow(x, self.q - 2)

    def frobenius(self, x):
        return self.pow(x, self.p)

    def norm(self, x):
        """Norm down to F_p: the product of the k Frobenius conjugates."""
        acc = x
        conj = x
        for _ in range(self.k - 1):
            conj = self.frobenius(conj)
            acc = self.mul(acc, conj)
        assert all(a == 0 for a in acc[1:]), "norm left the base field"
        return acc[0]

    def char(self, x) -> int:
        """Quadratic character of x in F_q, via the norm to F_p."""
        if all(a == 0 for a in x):
            return 0
        return legendre(self.norm(x), self.p)

    def elements(self):
        """All q elements, lexicographic in (c_0, ..., c_{k-1})."""
        p, k = self.p, self.k
        for n in range(self.q):
            cs = []
            for _ in range(k):
                cs.append(n % p)
                n //= p
            yield tuple(cs)

    # ----- vectorized ops on (n, k) coefficient arrays -----

    def coeff_rows(self, lo: int, hi: int) -> np.ndarray:
        """Coefficient rows of the elements indexed lo..hi-1 (base-p digits)."""
        p, k = self.p, self.k
        n = np.arange(lo, hi, dtype=np.int64)
        cols = []
        for _ in range(k):
            cols.append(n % p)
            n = n // p
        return np.stack(cols, axis=1)

    def all_coeff_rows(self) -> np.ndarray:
        return self.coeff_rows(0, self.q)

    def mul_vec(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        p, k = self.p, self.k
        conv = np.zeros(x.shape[:-1] + (2 * k - 1,), dtype=np.int64)
        for i in range(k):
            for j in range(k):
                m = i + j
                conv[..., m] = (conv[..., m] + x[..., i] * y[..., j] % p) % p
        out = conv[..., :k].copy()
        for m in range(k, 2 * k - 1):
            out = (out + conv[..., m : m + 1] * self._reduction[m - k]) % p
        return out

    def embed_vec(self, vals: np.ndarray) -> np.ndarray:
        out = np.zeros(vals.shape + (self.k,), dtype=np.int64)
        out[..., 0] = vals % self.p
        return out

    def char_vec(self, x: np.ndarray) -> np.ndarray:
        """Quadratic-character values for rows of x, via vectorized norms."""
        conj = x
        acc = x
        for _ in range(self.k - 1):
            conj = (conj @ self._frob.T) % self.p
            acc = self.mul_vec(acc, conj)
        return self._chi[acc[..., 0]]


@functools.lru_cache(maxsize=32)
def ext_field(p: int, k: int) -> ExtField:
    """Shared ExtField instances, one per (p, k)."""
    return ExtField(p, k)
