import random

import pytest

from aperylike.finite_field import is_prime
from aperylike.fp_poly import FpPoly


def primes_between(lo, hi):
    return [n for n in range(max(lo, 5), hi + 1) if is_prime(n)]


@pytest.fixture
def rng():
    return random.Random(0xA9E41)


def random_poly(rng, p, max_deg, nonzero=False):
    deg = rng.randrange(-1, max_deg + 1)
    if deg < 0:
        if nonzero:
            deg = 0
        else:
            return FpPoly.zero(p)
    coeffs = [rng.randrange(p) for _ in range(deg + 1)]
    if coeffs[-1] == 0:
        coeffs[-1] = rng.randrange(1, p)
    return FpPoly(coeffs, p)


def random_squarefree(rng, p, max_deg):
    from aperylike.fp_poly import gcd
    while True:
        f = random_poly(rng, p, max_deg, nonzero=True)
        if f.degree <= 0:
            return FpPoly.one(p)
        if gcd(f, f.derivative()).degree == 0:
            return f.monic()
