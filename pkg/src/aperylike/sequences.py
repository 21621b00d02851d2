"""The sequence catalog: exact big-integer evaluators, fast mod-p
evaluators, bulk truncations, and ingestion of external coefficient files.

For every built-in sequence there are two independent routes to a value:

* ``term_exact`` sums the defining formula with big-integer binomials and
  is the oracle;
* ``term_mod_p`` / ``coefficients_mod_p`` evaluate the same formula in F_p
  with digit-wise binomials, so indices at and beyond p stay cheap.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import partial

from . import kernels
from .errors import BFileError
from .finite_field import binomial_lucas, multinomial_lucas, pow_mod
from .fp_poly import FpPoly


def _comb(m: int, k: int) -> int:
    """Binomial with the zero-outside-range convention, negative m included."""
    if m < 0 or k < 0 or k > m:
        return 0
    return math.comb(m, k)


# -- exact evaluators (big integers) ------------------------------------------

def apery_exact(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * math.comb(n + k, n) ** 2 for k in range(n + 1))


def domb_exact(n: int) -> int:
    s = sum(math.comb(2 * k, k) * math.comb(2 * n - 2 * k, n - k) * math.comb(n, k) ** 2
            for k in range(n + 1))
    return -s if n % 2 else s


def az_exact(n: int) -> int:
    total = 0
    for k in range(n // 3 + 1):
        term = (3 ** (n - 3 * k) * math.comb(3 * k, k) * math.comb(2 * k, k)
                * math.comb(n, 3 * k) * math.comb(n + k, n))
        total += -term if (n - k) % 2 else term
    return total


def franel_exact(n: int) -> int:
    return sum(math.comb(n, k) ** 3 for k in range(n + 1))


def gen_apery_exact(r: int, s: int, n: int) -> int:
    return sum(math.comb(n, k) ** r * math.comb(n + k, n) ** s for k in range(n + 1))


def a229111_exact(n: int) -> int:
    total = 0
    for k in range(n // 5 + 1):
        term = math.comb(n, k) ** 3 * (_comb(4 * n - 5 * k - 1, 3 * n)
                                       + _comb(4 * n - 5 * k, 3 * n))
        total += -term if (n - k) % 2 else term
    return total


def a290575_exact(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * _comb(2 * k, n) ** 2 for k in range(n + 1))


def a290576_exact(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * math.comb(n, l) * math.comb(k, l) * _comb(k + l, n)
               for k in range(n + 1) for l in range(max(0, n - k), k + 1))


def a274786_exact(n: int) -> int:
    return math.comb(2 * n, n) * sum(math.comb(n, k) ** 2 * math.comb(n + k, k)
                                     for k in range(n + 1))


def a181418_exact(n: int) -> int:
    return math.comb(2 * n, n) * franel_exact(n)


def a183204_exact(n: int) -> int:
    return sum(math.comb(n, k) ** 2 * _comb(2 * k, n) * math.comb(k + n, n)
               for k in range(n + 1))


def a005260_exact(n: int) -> int:
    return sum(math.comb(n, k) ** 4 for k in range(n + 1))


# -- mod-p single-term evaluators ---------------------------------------------

def _apery_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n + 1):
        t = binomial_lucas(n, k, p)
        u = binomial_lucas(n + k, n, p)
        s += t * t % p * (u * u % p)
    return s % p


def _domb_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n + 1):
        t = binomial_lucas(n, k, p)
        s += (binomial_lucas(2 * k, k, p) * binomial_lucas(2 * n - 2 * k, n - k, p) % p
              * (t * t % p))
    s %= p
    return (p - s) % p if n % 2 else s


def _az_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n // 3 + 1):
        term = (multinomial_lucas(k, p) * pow_mod(3, n - 3 * k, p) % p
                * binomial_lucas(n, 3 * k, p) % p * binomial_lucas(n + k, n, p) % p)
        s += p - term if (n - k) % 2 and term else term
    return s % p


def _franel_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n + 1):
        t = binomial_lucas(n, k, p)
        s += t * t % p * t
    return s % p


def _gen_mod(r: int, s: int, n: int, p: int) -> int:
    acc = 0
    for k in range(n + 1):
        acc += pow_mod(binomial_lucas(n, k, p), r, p) * pow_mod(binomial_lucas(n + k, n, p), s, p)
    return acc % p


def _a229111_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n // 5 + 1):
        t = binomial_lucas(n, k, p)
        term = (t * t % p * t % p
                * ((binomial_lucas(4 * n - 5 * k - 1, 3 * n, p)
                    + binomial_lucas(4 * n - 5 * k, 3 * n, p)) % p) % p)
        s += p - term if (n - k) % 2 and term else term
    return s % p


def _a290575_mod(n: int, p: int) -> int:
    s = 0
    for k in range((n + 1) // 2, n + 1):
        t = binomial_lucas(n, k, p)
        u = binomial_lucas(2 * k, n, p)
        s += t * t % p * (u * u % p)
    return s % p


def _a290576_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n + 1):
        t = binomial_lucas(n, k, p)
        t2 = t * t % p
        if not t2:
            continue
        for l in range(max(0, n - k), k + 1):
            s += (t2 * binomial_lucas(n, l, p) % p * binomial_lucas(k, l, p) % p
                  * binomial_lucas(k + l, n, p))
        s %= p
    return s % p


def _a274786_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n + 1):
        t = binomial_lucas(n, k, p)
        s += t * t % p * binomial_lucas(n + k, k, p)
    return s % p * binomial_lucas(2 * n, n, p) % p


def _a181418_mod(n: int, p: int) -> int:
    return _franel_mod(n, p) * binomial_lucas(2 * n, n, p) % p


def _a183204_mod(n: int, p: int) -> int:
    s = 0
    for k in range((n + 1) // 2, n + 1):
        t = binomial_lucas(n, k, p)
        s += t * t % p * binomial_lucas(2 * k, n, p) % p * binomial_lucas(k + n, n, p)
    return s % p


def _a005260_mod(n: int, p: int) -> int:
    s = 0
    for k in range(n + 1):
        t = binomial_lucas(n, k, p)
        t2 = t * t % p
        s += t2 * t2
    return s % p


# -- catalog -------------------------------------------------------------------

@dataclass(frozen=True)
class CoefficientTable:
    """Externally supplied exact coefficients, contiguous from index 0."""

    name: str
    values: tuple[int, ...]


@dataclass(frozen=True)
class SequenceSpec:
    key: str
    description: str
    exact: object = None          # callable n -> int
    mod: object = None            # callable (n, p) -> int
    bulk_key: str | None = None   # kernel truncation function key
    gen_params: tuple[int, int] | None = None
    level: int | None = None
    known_lucas: bool = True
    oeis: str | None = None
    table: CoefficientTable | None = field(default=None, compare=False)

    @property
    def is_external(self) -> bool:
        return self.table is not None


_CATALOG_ROWS = [
    ("apery", "sum_k C(n,k)^2 C(n+k,n)^2", apery_exact, _apery_mod, None, "A005259"),
    ("domb", "(-1)^n sum_k C(2k,k) C(2n-2k,n-k) C(n,k)^2 (alternating Domb)",
     domb_exact, _domb_mod, None, "A002895 (signed)"),
    ("az", "sum_k (-1)^(n-k) 3^(n-3k) (3k)!/k!^3 C(n,3k) C(n+k,n)",
     az_exact, _az_mod, None, "A125143"),
    ("franel", "sum_k C(n,k)^3", franel_exact, _franel_mod, None, "A000172"),
    ("a229111", "sum_k (-1)^(n-k) C(n,k)^3 (C(4n-5k-1,3n) + C(4n-5k,3n))",
     a229111_exact, _a229111_mod, None, "A229111"),
    ("a290575", "sum_k C(n,k)^2 C(2k,n)^2", a290575_exact, _a290575_mod, None, "A290575"),
    ("a290576", "sum_{k,l} C(n,k)^2 C(n,l) C(k,l) C(k+l,n)",
     a290576_exact, _a290576_mod, None, "A290576"),
    ("a274786", "C(2n,n) sum_k C(n,k)^2 C(n+k,k)", a274786_exact, _a274786_mod, 5, "A274786"),
    ("a181418", "C(2n,n) sum_k C(n,k)^3", a181418_exact, _a181418_mod, 6, "A181418"),
    ("a183204", "sum_k C(n,k)^2 C(2k,n) C(k+n,n)", a183204_exact, _a183204_mod, 7, "A183204"),
    ("a005260", "sum_k C(n,k)^4", a005260_exact, _a005260_mod, 10, "A005260"),
]

CATALOG: dict[str, SequenceSpec] = {
    key: SequenceSpec(key=key, description=desc, exact=exact, mod=mod,
                      bulk_key=key, level=level, oeis=oeis)
    for key, desc, exact, mod, level, oeis in _CATALOG_ROWS
}


def generalized(r: int, s: int) -> SequenceSpec:
    """The two-exponent family sum_k C(n,k)^r C(n+k,n)^s."""
    if r < 0 or s < 0:
        raise ValueError("exponents must be nonnegative")
    return SequenceSpec(
        key=f"gen:{r},{s}",
        description=f"sum_k C(n,k)^{r} C(n+k,n)^{s}",
        exact=partial(gen_apery_exact, r, s),
        mod=partial(_gen_mod, r, s),
        gen_params=(r, s),
    )


def load_external(path, name: str | None = None) -> SequenceSpec:
    """Parse an OEIS-style b-file: one "index value" pair per line,
    '#' comments, indices contiguous from 0."""
    values: list[int] = []
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            fields = line.split()
            if len(fields) != 2:
                raise BFileError(f"expected 'index value', got {line!r}", lineno)
            try:
                idx, val = int(fields[0]), int(fields[1])
            except ValueError:
                raise BFileError(f"non-integer entry in {line!r}", lineno) from None
            if idx != len(values):
                raise BFileError(
                    f"index {idx} out of order (expected {len(values)})", lineno)
            values.append(val)
    if not values:
        raise BFileError("file contains no coefficients")
    stem = name if name is not None else _stem(path)
    return SequenceSpec(
        key=f"external:{stem}",
        description=f"external coefficient table ({len(values)} terms)",
        known_lucas=False,
        table=CoefficientTable(name=stem, values=tuple(values)),
    )


def _stem(path) -> str:
    s = str(path).replace("\\", "/").rsplit("/", 1)[-1]
    return s.rsplit(".", 1)[0] if "." in s else s


def get_sequence(key: str) -> SequenceSpec:
    """Resolve a sequence name: catalog key, ``gen:r,s``, or ``@/path/to/bfile``."""
    if key in CATALOG:
        return CATALOG[key]
    if key.startswith("gen:"):
        try:
            r, s = (int(x) for x in key[4:].split(","))
        except ValueError:
            raise ValueError(f"bad generalized spec {key!r}; use gen:r,s") from None
        return generalized(r, s)
    if key.startswith("@"):
        return load_external(key[1:])
    raise ValueError(f"unknown sequence {key!r}; see `catalog` for names")


# -- evaluation ------------------------------------------------------------------

def term_exact(seq: SequenceSpec, n: int):
    """Exact integer value; the oracle for every other evaluator."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if seq.is_external:
        if n >= len(seq.table.values):
            raise ValueError(
                f"{seq.key} has {len(seq.table.values)} terms; index {n} out of range")
        return seq.table.values[n]
    return seq.exact(n)


def term_mod_p(seq: SequenceSpec, n: int, p: int) -> int:
    """Value mod p via digit-wise binomials (no big integers for catalog entries)."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if seq.is_external:
        return term_exact(seq, n) % p
    return seq.mod(n, p)


def coefficients_mod_p(seq: SequenceSpec, count: int, p: int) -> list[int]:
    """First ``count`` coefficients mod p, via the kernel backend when available."""
    if seq.is_external:
        if count > len(seq.table.values):
            raise ValueError(
                f"{seq.key} has {len(seq.table.values)} terms; need {count}")
        return [v % p for v in seq.table.values[:count]]
    if seq.bulk_key is not None:
        return kernels.TRUNC_FUNCS[seq.bulk_key](count, p)
    if seq.gen_params is not None:
        r, s = seq.gen_params
        return kernels.trunc_gen(count, p, r, s)
    return [seq.mod(n, p) for n in range(count)]


def truncation_poly(seq: SequenceSpec, p: int) -> FpPoly:
    """A_p = sum_{n<p} a_n t^n reduced mod p."""
    return FpPoly(coefficients_mod_p(seq, p, p), p)


@dataclass(frozen=True)
class LucasReport:
    seq: str
    p: int
    ok: bool
    counterexample: tuple[int, int] | None = None

    def __bool__(self):
        return self.ok


def verify_lucas_property(seq: SequenceSpec, p: int, digit_levels: int = 1) -> LucasReport:
    """Check a_(np+l) = a_n * a_l mod p digit by digit.

    Level 1 checks all n, l < p (indices below p^2); level 2 extends n to
    p^2 (indices below p^3).  Returns the first counterexample instead of
    raising, since external tables are allowed to fail.
    """
    if digit_levels < 1:
        raise ValueError("digit_levels must be >= 1")
    count = p ** (digit_levels + 1)
    if seq.is_external and count > len(seq.table.values):
        count = len(seq.table.values)
    vals = coefficients_mod_p(seq, count, p)
    for idx in range(p, count):
        n, l = divmod(idx, p)
        expected = 1
        m = idx
        while m:
            expected = expected * vals[m % p] % p
            m //= p
        if vals[idx] != expected:
            return LucasReport(seq.key, p, False, (n, l))
    return LucasReport(seq.key, p, True)
