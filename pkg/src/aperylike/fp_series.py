"""Truncated power series over F_p with explicit precision.

A series carries exactly N coefficients and is understood modulo x^N.
Precision is data, not ambient state: binary operations return the minimum
precision of their operands, so accuracy loss is always visible.
"""
from __future__ import annotations

from . import kernels
from .finite_field import inv_mod
from .fp_poly import FpPoly


class FpSeries:
    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int, *, _trusted: bool = False):
        p = int(p)
        if _trusted:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = tuple(int(c) % p for c in coeffs)
        if not self.coeffs:
            raise ValueError("series needs precision >= 1")
        self.p = p

    @classmethod
    def from_poly(cls, poly: FpPoly, precision: int) -> "FpSeries":
        cs = list(poly.coeffs[:precision])
        cs += [0] * (precision - len(cs))
        return cls(cs, poly.p, _trusted=True)

    @classmethod
    def one(cls, p: int, precision: int) -> "FpSeries":
        return cls((1,) + (0,) * (precision - 1), p, _trusted=True)

    @property
    def precision(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k]

    def __eq__(self, other):
        if isinstance(other, FpSeries):
            return self.p == other.p and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def _check(self, other: "FpSeries"):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    def truncate(self, n: int) -> "FpSeries":
        if n > len(self.coeffs):
            raise ValueError(f"cannot extend precision {len(self.coeffs)} to {n}")
        return FpSeries(self.coeffs[:n], self.p, _trusted=True)

    def valuation(self) -> int | None:
        """Index of the first nonzero coefficient, or None if all known ones vanish."""
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        return None

    # -- arithmetic -----------------------------------------------------------
    def __add__(self, other: "FpSeries") -> "FpSeries":
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        return FpSeries([(self.coeffs[i] + other.coeffs[i]) % self.p for i in range(n)],
                        self.p, _trusted=True)

    def __sub__(self, other: "FpSeries") -> "FpSeries":
        return self + (-other)

    def __neg__(self) -> "FpSeries":
        return FpSeries(tuple((self.p - c) % self.p for c in self.coeffs), self.p, _trusted=True)

    def scale(self, c: int) -> "FpSeries":
        c = int(c) % self.p
        return FpSeries([c * x % self.p for x in self.coeffs], self.p, _trusted=True)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        n = min(len(self.coeffs), len(other.coeffs))
        out = kernels.series_mul(list(self.coeffs), list(other.coeffs), n, self.p)
        return FpSeries(out, self.p, _trusted=True)

    __rmul__ = __mul__

    def inv(self) -> "FpSeries":
        if self.coeffs[0] == 0:
            raise ZeroDivisionError("series with zero constant term has no inverse")
        out = kernels.series_inv(list(self.coeffs), len(self.coeffs), self.p)
        return FpSeries(out, self.p, _trusted=True)

    def pow_int(self, k: int) -> "FpSeries":
        if k < 0:
            return self.inv().pow_int(-k)
        result = FpSeries.one(self.p, len(self.coeffs))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def compose(self, inner: "FpSeries") -> "FpSeries":
        """self(inner) for inner with zero constant term, by Horner.

        Only the first ceil(N / val(inner)) outer coefficients can reach the
        truncation order, which keeps the Horner loop short for inner series
        of valuation > 1.
        """
        self._check(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs inner series with zero constant term")
        n = min(len(self.coeffs), len(inner.coeffs))
        p = self.p
        val = inner.truncate(n).valuation()
        if val is None:
            return FpSeries((self.coeffs[0],) + (0,) * (n - 1), p, _trusted=True)
        inner_cs = list(inner.coeffs[:n])
        relevant = min(n, (n - 1) // val + 1)
        acc = [0] * n
        for c in reversed(self.coeffs[:relevant]):
            acc = kernels.series_mul(acc, inner_cs, n, p)
            acc[0] = (acc[0] + c) % p
        return FpSeries(acc, p, _trusted=True)

    def substitute_power(self, k: int) -> "FpSeries":
        """self(x^k) at the same precision; over F_p, self(x^p) equals self^p."""
        n = len(self.coeffs)
        out = [0] * n
        for i, c in enumerate(self.coeffs):
            if i * k >= n:
                break
            out[i * k] = c
        return FpSeries(out, self.p, _trusted=True)

    def sqrt_inv(self) -> "FpSeries":
        """g with g^2 * self = 1, normalized by g(0) = 1; needs self(0) = 1.

        Newton iteration g <- g * (3 - f g^2) / 2 doubling precision.
        """
        if self.coeffs[0] != 1:
            raise ValueError("inverse square root needs constant term 1 (normalize first)")
        p = self.p
        n = len(self.coeffs)
        inv2 = inv_mod(2, p)
        g = [1]
        prec = 1
        f = list(self.coeffs)
        while prec < n:
            prec = min(2 * prec, n)
            fg2 = kernels.series_mul(kernels.series_mul(g, g, prec, p), f[:prec], prec, p)
            upd = [(-c) % p for c in fg2]
            upd[0] = (upd[0] + 3) % p
            g = kernels.series_mul(g, upd, prec, p)
            g = [c * inv2 % p for c in g]
        return FpSeries(g, p, _trusted=True)

    def __repr__(self):
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if len(self.coeffs) > 8 else ""
        return f"FpSeries([{shown}{tail}] mod {self.p}, N={len(self.coeffs)})"


def expand_rational(u: FpPoly, v: FpPoly, precision: int) -> FpSeries:
    """Series of u/v to the given precision; v(0) must be invertible."""
    if u.p != v.p:
        raise ValueError("modulus mismatch")
    p = u.p
    if not v or v.coeffs[0] == 0:
        raise ZeroDivisionError("denominator must have nonzero constant term")
    v0_inv = inv_mod(v.coeffs[0], p)
    out = [0] * precision
    vs = v.coeffs
    for i in range(precision):
        s = u[i]
        for j in range(1, min(i, len(vs) - 1) + 1):
            s -= vs[j] * out[i - j]
        out[i] = s * v0_inv % p
    return FpSeries(out, p, _trusted=True)


def hypergeometric_2f1(precision: int, p: int,
                       a=(1, 3), b=(2, 3), c=(1, 1)) -> FpSeries:
    """The Gauss series sum_k (a)_k (b)_k / ((c)_k k!) y^k with rational
    parameters realized as residues mod p.

    Defaults give the weight-(1/3, 2/3; 1) series used by the Franel link.
    Coefficient k needs k! invertible, so at most p coefficients (k < p)
    can be produced; that maximum is exactly the order-p truncation.
    """
    if precision > p:
        raise ValueError(f"2F1 precision must be <= p (got N={precision}, p={p})")
    aa = a[0] * inv_mod(a[1], p) % p
    bb = b[0] * inv_mod(b[1], p) % p
    cc = c[0] * inv_mod(c[1], p) % p
    out = [1] + [0] * (precision - 1)
    for k in range(1, precision):
        num = (aa + k - 1) * (bb + k - 1) % p
        den = (cc + k - 1) * k % p
        out[k] = out[k - 1] * num % p * inv_mod(den, p) % p
    return FpSeries(out, p, _trusted=True)
