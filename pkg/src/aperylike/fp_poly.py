"""Dense univariate polynomial algebra over F_p.

Coefficients are stored ascending (index = exponent) with no trailing
zeros; the zero polynomial has an empty coefficient tuple and degree -inf.
Products dispatch to the kernel schoolbook below a size threshold and to
Karatsuba above it.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .finite_field import inv_mod, sqrt_mod

KARATSUBA_THRESHOLD = 32

_NEG_INF = float("-inf")


class FpPoly:
    __slots__ = ("coeffs", "p")

    def __init__(self, coeffs, p: int, *, _trusted: bool = False):
        p = int(p)
        if _trusted:
            self.coeffs = tuple(coeffs)
        else:
            cs = [int(c) % p for c in coeffs]
            while cs and cs[-1] == 0:
                cs.pop()
            self.coeffs = tuple(cs)
        self.p = p

    # -- constructors --------------------------------------------------------
    @classmethod
    def zero(cls, p: int) -> "FpPoly":
        return cls((), p, _trusted=True)

    @classmethod
    def one(cls, p: int) -> "FpPoly":
        return cls((1,), p, _trusted=True)

    @classmethod
    def constant(cls, c: int, p: int) -> "FpPoly":
        return cls((c,), p)

    @classmethod
    def monomial(cls, k: int, p: int, c: int = 1) -> "FpPoly":
        c = int(c) % p
        if c == 0:
            return cls.zero(p)
        return cls((0,) * k + (c,), p, _trusted=True)

    # -- basics ----------------------------------------------------------------
    @property
    def degree(self):
        """Degree as an int, or -inf for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else _NEG_INF

    def __bool__(self):
        return bool(self.coeffs)

    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __eq__(self, other):
        if isinstance(other, FpPoly):
            return self.p == other.p and self.coeffs == other.coeffs
        if isinstance(other, int):
            return self == FpPoly.constant(other, self.p)
        return NotImplemented

    def __hash__(self):
        return hash((self.coeffs, self.p))

    def _check(self, other: "FpPoly"):
        if self.p != other.p:
            raise ValueError(f"modulus mismatch: {self.p} vs {other.p}")

    # -- ring operations ---------------------------------------------------------
    def __add__(self, other: "FpPoly") -> "FpPoly":
        self._check(other)
        return FpPoly(_list_add(list(self.coeffs), list(other.coeffs), self.p), self.p)

    def __sub__(self, other: "FpPoly") -> "FpPoly":
        return self + (-other)

    def __neg__(self) -> "FpPoly":
        return FpPoly(tuple((self.p - c) % self.p for c in self.coeffs), self.p, _trusted=True)

    def scale(self, c: int) -> "FpPoly":
        c = int(c) % self.p
        if c == 0:
            return FpPoly.zero(self.p)
        if c == 1:
            return self
        return FpPoly([c * x % self.p for x in self.coeffs], self.p)

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        if not self or not other:
            return FpPoly.zero(self.p)
        a, b = list(self.coeffs), list(other.coeffs)
        if min(len(a), len(b)) <= KARATSUBA_THRESHOLD:
            out = kernels.poly_mul(a, b, self.p)
        else:
            out = mul_karatsuba(a, b, self.p)
        return FpPoly(out, self.p)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FpPoly":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = FpPoly.one(self.p)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def divrem(self, other: "FpPoly") -> tuple["FpPoly", "FpPoly"]:
        self._check(other)
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        q, r = kernels.poly_divrem(list(self.coeffs), list(other.coeffs), self.p)
        return FpPoly(q, self.p, _trusted=True), FpPoly(r, self.p, _trusted=True)

    def __floordiv__(self, other: "FpPoly") -> "FpPoly":
        return self.divrem(other)[0]

    def __mod__(self, other: "FpPoly") -> "FpPoly":
        return self.divrem(other)[1]

    def monic(self) -> "FpPoly":
        if not self or self.coeffs[-1] == 1:
            return self
        return self.scale(inv_mod(self.coeffs[-1], self.p))

    def derivative(self) -> "FpPoly":
        return FpPoly([i * c % self.p for i, c in enumerate(self.coeffs)][1:], self.p)

    def eval(self, a: int) -> int:
        a = int(a) % self.p
        acc = 0
        for c in reversed(self.coeffs):
            acc = (acc * a + c) % self.p
        return acc

    def shift(self, k: int) -> "FpPoly":
        """Multiply by t^k."""
        if not self:
            return self
        return FpPoly((0,) * k + self.coeffs, self.p, _trusted=True)

    # -- structure ------------------------------------------------------------
    def pth_root(self) -> "FpPoly":
        """Inverse of Frobenius for polynomials in t^p: c at exponent pk -> c at k.

        Valid because c^p = c in F_p; raises if some exponent with a nonzero
        coefficient is not divisible by p.
        """
        p = self.p
        for i, c in enumerate(self.coeffs):
            if c and i % p:
                raise ValueError("polynomial is not a polynomial in t^p")
        return FpPoly(self.coeffs[::p], self.p, _trusted=True)

    def squarefree_decomposition(self) -> list[tuple["FpPoly", int]]:
        """Write self = lc * prod g_i^(e_i) with g_i monic squarefree, pairwise coprime.

        Characteristic-p variant: whenever the running part has zero
        derivative it is a polynomial in t^p, whose p-th root is taken
        coefficientwise before recursing with multiplicities scaled by p.
        """
        if not self:
            raise ZeroDivisionError("decomposition of the zero polynomial")
        p = self.p
        parts: list[tuple[FpPoly, int]] = []

        def rec(f: FpPoly, scale: int):
            if f.degree <= 0:
                return
            df = f.derivative()
            if not df:
                rec(f.pth_root(), scale * p)
                return
            c = gcd(f, df)
            w = f // c
            i = 1
            while w.degree > 0:
                y = gcd(w, c)
                z = w // y
                if z.degree > 0:
                    parts.append((z.monic(), i * scale))
                w = y
                c = c // y
                i += 1
            if c.degree > 0:
                rec(c.pth_root(), scale * p)

        rec(self.monic(), 1)
        parts.sort(key=lambda ge: (ge[1], len(ge[0].coeffs), ge[0].coeffs))
        return parts

    def square_cofactor(self) -> "SquareCofactor":
        """Split self = c * P * B^2 with P the monic squarefree odd-multiplicity part."""
        parts = self.squarefree_decomposition()
        p = self.p
        cof = FpPoly.one(p)
        root = FpPoly.one(p)
        for g, e in parts:
            if e % 2:
                cof = cof * g
            if e // 2:
                root = root * g ** (e // 2)
        result = SquareCofactor(self.lc(), cof, root)
        if result.expand() != self:
            raise ArithmeticError("square cofactor re-expansion failed")
        return result

    def is_perfect_square(self) -> "FpPoly | None":
        """A square root in F_p[t] when one exists, else None.

        Exists iff every multiplicity is even and lc is a quadratic residue;
        the root's leading coefficient is the stable representative chosen
        by sqrt_mod.
        """
        if not self:
            return self
        r = sqrt_mod(self.lc(), self.p)
        if r is None:
            return None
        root = FpPoly.one(self.p)
        for g, e in self.squarefree_decomposition():
            if e % 2:
                return None
            root = root * g ** (e // 2)
        return root.scale(r)

    def substitute_rational(self, u: "FpPoly", v: "FpPoly") -> "FpPoly":
        """Numerator of self(u/v) cleared by v^deg(self).

        Constants (including zero) are returned unchanged (v^0 = 1).
        """
        self._check(u)
        self._check(v)
        if not v:
            raise ZeroDivisionError("zero denominator in rational substitution")
        if self.degree <= 0:
            return self
        d = len(self.coeffs) - 1
        if not u:
            return (v ** d).scale(self.coeffs[0])
        out = kernels.twist_sum(list(self.coeffs), list(u.coeffs), list(v.coeffs), self.p)
        return FpPoly(out, self.p, _trusted=True)

    def __repr__(self):
        return f"FpPoly({list(self.coeffs)} mod {self.p})"

    def __str__(self):
        return self.format()

    def format(self, var: str = "t") -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            elif i == 1:
                terms.append(var if c == 1 else f"{c}*{var}")
            else:
                terms.append(f"{var}^{i}" if c == 1 else f"{c}*{var}^{i}")
        return " + ".join(terms)


def _list_add(a: list[int], b: list[int], p: int) -> list[int]:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] = (out[i] + c) % p
    return out


def mul_schoolbook(a: list[int], b: list[int], p: int) -> list[int]:
    """Quadratic product on raw coefficient lists (kernel-backed)."""
    return kernels.poly_mul(a, b, p)


def mul_karatsuba(a: list[int], b: list[int], p: int) -> list[int]:
    """Karatsuba product on raw coefficient lists, kernel base case.

    The split point is half the shorter operand, so both low parts are
    nonempty and the recursion terminates for unbalanced inputs too.
    """
    if min(len(a), len(b)) <= KARATSUBA_THRESHOLD:
        return kernels.poly_mul(a, b, p)
    m = min(len(a), len(b)) // 2
    a0, a1 = a[:m], a[m:]
    b0, b1 = b[:m], b[m:]
    z0 = mul_karatsuba(a0, b0, p)
    z2 = mul_karatsuba(a1, b1, p)
    z1 = mul_karatsuba(_list_add(a0, a1, p), _list_add(b0, b1, p), p)
    out = [0] * (len(a) + len(b) - 1)
    for i, c in enumerate(z0):
        out[i] = (out[i] + c) % p
    for i, c in enumerate(z2):
        out[2 * m + i] = (out[2 * m + i] + c) % p
    lz0, lz2 = len(z0), len(z2)
    for i in range(len(z1)):
        c = z1[i] - (z0[i] if i < lz0 else 0) - (z2[i] if i < lz2 else 0)
        out[m + i] = (out[m + i] + c) % p
    return out


def gcd(f: FpPoly, g: FpPoly) -> FpPoly:
    """Monic gcd; gcd(f, 0) = monic(f).  Raises on gcd(0, 0)."""
    f._check(g)
    if not f and not g:
        raise ZeroDivisionError("gcd(0, 0) is undefined")
    return FpPoly(kernels.poly_gcd(list(f.coeffs), list(g.coeffs), f.p), f.p, _trusted=True)


@dataclass(frozen=True)
class SquareCofactor:
    """Factorization data A = c * P * B^2 with P monic squarefree."""

    c: int
    cofactor: FpPoly
    root: FpPoly

    def expand(self) -> FpPoly:
        return (self.cofactor * self.root * self.root).scale(self.c)
