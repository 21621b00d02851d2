"""Exact arithmetic in F_p plus the quadratic-character and order primitives.

Moduli are restricted to primes 5 <= p < 2^31: the constants 8/9, 1/9 and
the hypergeometric parameters 1/3, 2/3 used elsewhere degenerate at 2 and 3,
and 31-bit residues keep every product inside 64 bits.
"""
from __future__ import annotations

import functools

from .errors import UnsupportedPrimeError

MAX_PRIME = 2 ** 31

# deterministic Miller-Rabin witness set, valid for all n < 3.3 * 10^24
_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin for 64-bit inputs."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class Prime:
    """A validated odd prime modulus p >= 5.

    The half value e = (p-1)/2 (the order of the subgroup of squares) is
    exposed as an attribute since nearly every consumer needs it.
    """

    __slots__ = ("value", "e")

    def __init__(self, value: int):
        value = int(value)
        if value in (2, 3):
            raise UnsupportedPrimeError(f"p = {value} is excluded (need p >= 5)")
        if value >= MAX_PRIME:
            raise UnsupportedPrimeError(f"p = {value} exceeds the 2^31 limit")
        if not is_prime(value):
            raise UnsupportedPrimeError(f"{value} is not prime")
        self.value = value
        self.e = (value - 1) // 2

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value

    def __eq__(self, other):
        if isinstance(other, Prime):
            return self.value == other.value
        return self.value == other

    def __hash__(self):
        return hash(self.value)

    def __repr__(self):
        return f"Prime({self.value})"

    def elem(self, residue: int) -> "FpElem":
        return FpElem(residue, self.value)


class FpElem:
    """An element of F_p with operator arithmetic.

    Convenience wrapper for API-level use; bulk computations work on plain
    ints.  Mixed-modulus operations raise ValueError.
    """

    __slots__ = ("residue", "p")

    def __init__(self, residue: int, p: int | Prime):
        self.p = int(p)
        self.residue = int(residue) % self.p

    def _coerce(self, other) -> int:
        if isinstance(other, FpElem):
            if other.p != self.p:
                raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")
            return other.residue
        return int(other) % self.p

    def __add__(self, other):
        return FpElem(self.residue + self._coerce(other), self.p)

    __radd__ = __add__

    def __sub__(self, other):
        return FpElem(self.residue - self._coerce(other), self.p)

    def __rsub__(self, other):
        return FpElem(self._coerce(other) - self.residue, self.p)

    def __mul__(self, other):
        return FpElem(self.residue * self._coerce(other), self.p)

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * FpElem(self._coerce(other), self.p).inv()

    def __neg__(self):
        return FpElem(-self.residue, self.p)

    def __pow__(self, k: int):
        if k < 0:
            return self.inv() ** (-k)
        return FpElem(pow(self.residue, k, self.p), self.p)

    def inv(self) -> "FpElem":
        return FpElem(inv_mod(self.residue, self.p), self.p)

    def __eq__(self, other):
        if isinstance(other, FpElem):
            return self.p == other.p and self.residue == other.residue
        if isinstance(other, int):
            return self.residue == other % self.p
        return NotImplemented

    def __hash__(self):
        return hash((self.residue, self.p))

    def __int__(self):
        return self.residue

    def __repr__(self):
        return f"FpElem({self.residue} mod {self.p})"


def pow_mod(a: int, k: int, p: int) -> int:
    """a^k mod p for k >= 0, with the empty-product convention 0^0 = 1."""
    if k < 0:
        raise ValueError("negative exponent; use inv_mod first")
    return pow(a % p, k, p)


def inv_mod(a: int, p: int) -> int:
    a %= p
    if a == 0:
        raise ZeroDivisionError(f"0 is not invertible mod {p}")
    return pow(a, p - 2, p)


def legendre(a: int, p: int) -> int:
    """Quadratic character of a mod p: +1 for squares, -1 for non-squares, 0 if p | a."""
    a %= p
    if a == 0:
        return 0
    r = pow(a, (p - 1) // 2, p)
    return -1 if r == p - 1 else 1


def sqrt_mod(a: int, p: int) -> int | None:
    """A square root of a mod p, or None when a is a non-residue.

    The representative min(r, p - r) is returned so the choice is stable
    across runs and platforms.
    """
    a %= p
    if a == 0:
        return 0
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        r = pow(a, (p + 1) // 4, p)
        return min(r, p - r)
    # Tonelli-Shanks
    q = p - 1
    s = 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m = s
    c = pow(z, q, p)
    t = pow(a, q, p)
    r = pow(a, (q + 1) // 2, p)
    while t != 1:
        t2 = t
        i = 0
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
    return min(r, p - r)


def factorize(n: int) -> dict[int, int]:
    """Prime factorization by trial division (fine for n < 2^31)."""
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mult_order(a: int, p: int) -> int:
    """Smallest k >= 1 with a^k = 1 mod p; always divides p - 1."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("0 has no multiplicative order")
    order = p - 1
    for q in factorize(p - 1):
        while order % q == 0 and pow(a, order // q, p) == 1:
            order //= q
    return order


@functools.lru_cache(maxsize=128)
def factorial_tables(p: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """(k!, 1/k!) for 0 <= k < p, as immutable per-prime tables."""
    fact = [1] * p
    for i in range(1, p):
        fact[i] = fact[i - 1] * i % p
    ifact = [1] * p
    ifact[p - 1] = pow(fact[p - 1], p - 2, p)
    for i in range(p - 1, 0, -1):
        ifact[i - 1] = ifact[i] * i % p
    return tuple(fact), tuple(ifact)


def binomial_lucas(m: int, k: int, p: int) -> int:
    """C(m, k) mod p by the digit-product rule; 0 outside 0 <= k <= m."""
    if k < 0 or m < 0 or k > m:
        return 0
    fact, ifact = factorial_tables(p)
    r = 1
    while k or m:
        mi = m % p
        ki = k % p
        if ki > mi:
            return 0
        r = r * fact[mi] % p * ifact[ki] % p * ifact[mi - ki] % p
        m //= p
        k //= p
    return r


def multinomial_lucas(k: int, p: int) -> int:
    """(3k)! / k!^3 mod p, computed as C(3k, k) * C(2k, k)."""
    return binomial_lucas(3 * k, k, p) * binomial_lucas(2 * k, k, p) % p
