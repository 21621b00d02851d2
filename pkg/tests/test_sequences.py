import math

import pytest

from aperylike.errors import BFileError
from aperylike.fp_series import FpSeries
from aperylike.sequences import (CATALOG, coefficients_mod_p, generalized,
                                 get_sequence, load_external, term_exact,
                                 term_mod_p, truncation_poly,
                                 verify_lucas_property)
from tests.conftest import primes_between


class TestExactValues:
    def test_apery(self):
        assert [term_exact(CATALOG["apery"], n) for n in range(5)] == [
            1, 5, 73, 1445, 33001]

    def test_domb_alternates(self):
        domb = CATALOG["domb"]
        assert term_exact(domb, 1) == -4
        assert term_exact(domb, 2) == 28
        assert term_exact(domb, 3) == -256

    def test_az(self):
        az = CATALOG["az"]
        assert [term_exact(az, n) for n in range(6)] == [1, -3, 9, -3, -279, 2997]

    def test_franel(self):
        assert [term_exact(CATALOG["franel"], n) for n in range(4)] == [1, 2, 10, 56]

    def test_all_start_at_one(self):
        for spec in CATALOG.values():
            assert term_exact(spec, 0) == 1


# three-term recurrences provide an independent route to the same numbers
def _by_recurrence(u0, u1, coeff_n, coeff_prev, lead, count):
    out = [u0, u1]
    for n in range(1, count - 1):
        value = coeff_n(n) * out[n] + coeff_prev(n) * out[n - 1]
        div = lead(n)
        assert value % div == 0
        out.append(value // div)
    return out


class TestRecurrenceCrossChecks:
    def test_apery(self):
        want = _by_recurrence(
            1, 5,
            lambda n: (2 * n + 1) * (17 * n * n + 17 * n + 5),
            lambda n: -n ** 3,
            lambda n: (n + 1) ** 3, 40)
        assert [term_exact(CATALOG["apery"], n) for n in range(40)] == want

    def test_franel(self):
        want = _by_recurrence(
            1, 2,
            lambda n: 7 * n * n + 7 * n + 2,
            lambda n: 8 * n * n,
            lambda n: (n + 1) ** 2, 40)
        assert [term_exact(CATALOG["franel"], n) for n in range(40)] == want

    def test_domb(self):
        want = _by_recurrence(
            1, -4,
            lambda n: -2 * (2 * n + 1) * (5 * n * n + 5 * n + 2),
            lambda n: -64 * n ** 3,
            lambda n: (n + 1) ** 3, 40)
        assert [term_exact(CATALOG["domb"], n) for n in range(40)] == want

    def test_a229111(self):
        want = _by_recurrence(
            1, -5,
            lambda n: -(2 * n + 1) * (11 * n * n + 11 * n + 5),
            lambda n: -125 * n ** 3,
            lambda n: (n + 1) ** 3, 60)
        assert [term_exact(CATALOG["a229111"], n) for n in range(60)] == want


class TestModP:
    def test_examples(self):
        apery = CATALOG["apery"]
        assert term_mod_p(apery, 3, 5) == 0
        assert term_mod_p(apery, 2, 5) == 3

    def test_matches_exact_beyond_p(self):
        for key in ("apery", "domb", "az", "franel", "a229111"):
            spec = CATALOG[key]
            for p in (5, 7):
                for n in range(3 * p):
                    assert term_mod_p(spec, n, p) == term_exact(spec, n) % p, (key, p, n)

    def test_bulk_matches_single(self):
        for key, spec in CATALOG.items():
            for p in (5, 13):
                bulk = coefficients_mod_p(spec, 2 * p, p)
                assert bulk == [term_mod_p(spec, n, p) for n in range(2 * p)], (key, p)


class TestTruncation:
    def test_apery_p5(self):
        assert truncation_poly(CATALOG["apery"], 5).coeffs == (1, 0, 3, 0, 1)

    def test_franel_p5(self):
        assert truncation_poly(CATALOG["franel"], 5).coeffs == (1, 2, 0, 1, 1)

    def test_constant_terms(self):
        for spec in CATALOG.values():
            for p in primes_between(5, 50):
                assert truncation_poly(spec, p)[0] == 1


class TestGeneralized:
    def test_degenerate_closed_forms(self):
        for n in range(101):
            assert term_exact(generalized(0, 0), n) == n + 1
            assert term_exact(generalized(1, 0), n) == 2 ** n
            assert term_exact(generalized(2, 0), n) == math.comb(2 * n, n)
            assert term_exact(generalized(0, 1), n) == math.comb(2 * n + 1, n + 1)

    def test_delannoy_series(self):
        # sum_k C(n,k) C(n+k,n) matches the coefficients of (1-6t+t^2)^(-1/2)
        for p in (7, 101, 499):
            series = FpSeries([1, -6, 1] + [0] * 58, p).sqrt_inv()
            got = coefficients_mod_p(generalized(1, 1), 61, p)
            assert got == list(series.coeffs)

    def test_shifted_binomial_series(self):
        # sum_k C(n+k,n) matches ((1-4x)^(-1/2) - 1) / (2x)
        p = 101
        n = 40
        sq = FpSeries([1, -4] + [0] * n, p).sqrt_inv()
        shifted = [(c * pow(2, p - 2, p)) % p for c in sq.coeffs[1:]]
        assert coefficients_mod_p(generalized(0, 1), n, p) == shifted[:n]

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            generalized(-1, 2)


class TestLucasProperty:
    def test_families(self):
        for key in ("apery", "domb", "az", "franel"):
            for p in (5, 7):
                assert verify_lucas_property(CATALOG[key], p).ok

    def test_two_digit_levels(self):
        assert verify_lucas_property(CATALOG["franel"], 5, digit_levels=2).ok

    def test_counterexample_reported(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("\n".join(f"{n} {n + 1}" for n in range(60)) + "\n")
        spec = load_external(path)
        report = verify_lucas_property(spec, 7)
        assert not report.ok
        assert report.counterexample is not None
        n, l = report.counterexample
        vals = [v % 7 for v in spec.table.values]
        assert vals[n * 7 + l] != vals[n] * vals[l] % 7


class TestExternal:
    def test_roundtrip(self, tmp_path):
        path = tmp_path / "b005259.txt"
        path.write_text("# apery numbers\n0 1\n1 5\n2 73\n")
        spec = load_external(path)
        assert spec.key == "external:b005259"
        assert term_exact(spec, 2) == 73
        assert not spec.known_lucas

    def test_gap_detected(self, tmp_path):
        path = tmp_path / "gap.txt"
        path.write_text("0 1\n2 73\n")
        with pytest.raises(BFileError) as info:
            load_external(path)
        assert info.value.line_number == 2

    def test_bad_token(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("0 1\n1 x\n")
        with pytest.raises(BFileError):
            load_external(path)

    def test_out_of_range(self, tmp_path):
        path = tmp_path / "short.txt"
        path.write_text("0 1\n1 5\n")
        spec = load_external(path)
        with pytest.raises(ValueError):
            term_exact(spec, 5)
        with pytest.raises(ValueError):
            coefficients_mod_p(spec, 5, 7)

    def test_get_sequence_forms(self, tmp_path):
        assert get_sequence("apery").key == "apery"
        assert get_sequence("gen:2,0").gen_params == (2, 0)
        path = tmp_path / "ext.txt"
        path.write_text("0 1\n1 3\n")
        assert get_sequence(f"@{path}").key == "external:ext"
        with pytest.raises(ValueError):
            get_sequence("nonsense")
