import pytest

from aperylike.errors import ReconstructionError
from aperylike.finite_field import mult_order
from aperylike.fp_poly import FpPoly
from aperylike.fp_series import FpSeries, expand_rational
from aperylike.kummer_galois import (CASE_BOTH, CASE_NONE, CASE_ONE,
                                     compute_record, galois_degree,
                                     involution_analysis,
                                     involution_constant_case,
                                     predicted_cofactor, predicted_group,
                                     rational_kummer_cofactor,
                                     verify_kummer_relation)
from aperylike.sequences import CATALOG, coefficients_mod_p, load_external
from tests.conftest import primes_between, random_poly


class TestKummerRelation:
    def test_apery(self):
        assert verify_kummer_relation(CATALOG["apery"], 5, 30).ok

    def test_franel(self):
        assert verify_kummer_relation(CATALOG["franel"], 7, 30).ok

    def test_all_families_default_precision(self):
        for key in ("apery", "domb", "az", "franel"):
            assert verify_kummer_relation(CATALOG[key], 11).ok

    def test_non_lucas_table_fails(self, tmp_path):
        path = tmp_path / "counting.txt"
        path.write_text("\n".join(f"{n} {n + 1}" for n in range(40)) + "\n")
        report = verify_kummer_relation(load_external(path), 5, 30)
        assert not report.ok
        assert report.mismatch_index is not None


class TestGaloisDegree:
    def test_apery_p5_is_square_class(self):
        res = galois_degree(FpPoly([1, 0, 3, 0, 1], 5))
        assert (res.degree, res.kummer_exponent, res.label) == (2, 2, "S")

    def test_apery_p13_full(self):
        rec = compute_record(CATALOG["apery"], 13)
        assert rec.galois.label == "FULL"
        assert rec.galois.degree == 12

    def test_constant_class(self):
        p = 7
        g = next(a for a in range(2, p) if mult_order(a, p) == p - 1)
        res = galois_degree(FpPoly([g], p))
        assert res.degree == p - 1 and res.label == "FULL"
        assert galois_degree(FpPoly.one(p)).degree == 1

    def test_zero_rejected(self):
        with pytest.raises(ZeroDivisionError):
            galois_degree(FpPoly.zero(5))

    def test_square_class_invariant_under_square_multiples(self, rng):
        # multiplying by B^2 preserves the class of A modulo squares (the
        # quantity the S/FULL dichotomy reads off), though not the exact
        # Kummer order: squares need not be (p-1)-th powers
        for _ in range(40):
            p = rng.choice([13, 17])
            a = random_poly(rng, p, 6, nonzero=True)
            b = random_poly(rng, p, 3, nonzero=True)
            before = galois_degree(a).kummer_exponent % 2
            after = galois_degree(a * b * b).kummer_exponent % 2
            assert before == after

    def test_degree_invariant_under_full_power_multiples(self, rng):
        for _ in range(20):
            p = 13
            a = random_poly(rng, p, 5, nonzero=True)
            b = random_poly(rng, p, 1, nonzero=True)
            assert galois_degree(a * b ** (p - 1)).degree == galois_degree(a).degree

    def test_degree_times_exponent(self):
        for p in primes_between(5, 60):
            res = galois_degree(compute_record(CATALOG["apery"], p).trunc)
            assert res.degree * res.kummer_exponent == p - 1


class TestPredictions:
    def test_group_examples(self):
        assert predicted_group("apery", 5) == "S"
        assert predicted_group("apery", 13) == "FULL"
        assert predicted_group("az", 11) == "S"
        assert predicted_group("domb", 7) == "S"

    def test_cofactor_examples(self):
        assert predicted_cofactor("apery", 13) == FpPoly([1, 5, 1], 13)
        assert predicted_cofactor("domb", 7) == FpPoly.one(7)
        assert predicted_cofactor("az", 5) == FpPoly([1, 14, 81], 5).monic()

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            predicted_group("franel", 7)


class TestInvolutionCases:
    def test_apery_case_table(self):
        for p in primes_between(5, 499):
            case = involution_constant_case("apery", p)
            if p % 4 == 3:
                assert case == CASE_ONE
            elif p % 24 in (13, 17):
                assert case == CASE_NONE
            else:
                assert p % 24 in (1, 5)
                assert case == CASE_BOTH

    def test_domb_case_table(self):
        for p in primes_between(5, 499):
            case = involution_constant_case("domb", p)
            want = {1: CASE_BOTH, 5: CASE_NONE, 7: CASE_ONE, 11: CASE_ONE}[p % 12]
            assert case == want

    def test_az_case_table(self):
        for p in primes_between(5, 499):
            case = involution_constant_case("az", p)
            want = {1: CASE_BOTH, 3: CASE_ONE, 5: CASE_NONE, 7: CASE_ONE}[p % 8]
            assert case == want

    def test_fixing_constant_decides_square_class(self):
        # the series is fixed by a prolongation exactly when the family's
        # fixing constant is admissible; that must match the predicted label
        for family in ("apery", "domb", "az"):
            for p in primes_between(5, 199):
                report = involution_analysis(family, p)
                assert report.fixing_admissible == (predicted_group(family, p) == "S")


class TestRationalReconstruction:
    def test_lucas_input_degenerates(self):
        p = 7
        f = FpSeries(coefficients_mod_p(CATALOG["apery"], 40, p), p)
        num, den = rational_kummer_cofactor(f, 6)
        assert den == FpPoly.one(p)
        assert num == FpPoly(coefficients_mod_p(CATALOG["apery"], p, p), p)

    def test_synthetic_rational(self):
        p = 7
        n = 45
        r = expand_rational(FpPoly([1, 1], p), FpPoly([1, 2], p), n)
        f = r * r.substitute_power(p) * r.substitute_power(p * p)
        num, den = rational_kummer_cofactor(f, 1)
        assert num == FpPoly([1, 1], p)
        assert den == FpPoly([1, 2], p)

    def test_bound_too_low(self):
        p = 7
        n = 45
        r = expand_rational(FpPoly([1, 1], p), FpPoly([1, 2], p), n)
        f = r * r.substitute_power(p) * r.substitute_power(p * p)
        with pytest.raises(ReconstructionError):
            rational_kummer_cofactor(f, 0)

    def test_insufficient_precision(self):
        p = 7
        f = FpSeries(coefficients_mod_p(CATALOG["apery"], 10, p), p)
        with pytest.raises(ValueError):
            rational_kummer_cofactor(f, 6)

    def test_higher_bound_still_correct(self):
        # overshoot: the minimal (num, den) should reappear up to the forced
        # normalization den(0)=1
        p = 11
        n = 80
        r = expand_rational(FpPoly([1, 0, 3], p), FpPoly([1, 4], p), n)
        f = r * r.substitute_power(p)
        num, den = rational_kummer_cofactor(f, 4)
        assert num * FpPoly([1, 4], p) == den * FpPoly([1, 0, 3], p)


class TestRecordSerialization:
    def test_roundtrip(self):
        rec = compute_record(CATALOG["apery"], 13)
        data = rec.to_json_dict()
        back = rec.from_json_dict(data)
        assert back.trunc == rec.trunc
        assert back.factorization.cofactor == rec.factorization.cofactor
        assert back.galois.degree == rec.galois.degree
        assert back.predicted_label == rec.predicted_label
        assert rec.matches_prediction

    def test_prediction_only_for_families(self):
        rec = compute_record(CATALOG["franel"], 13)
        assert rec.predicted_label is None
        assert rec.matches_prediction is None
