from fractions import Fraction

import random

from boxseq.piecewise import definite_integral, equal_ae
from boxseq.verify import random_test_function, run_all, sample_points


def test_small_run_all_passes():
    report = run_all(4, 10, 7)
    assert report.all_passed, report.failures()
    names = [c.name for c in report.checks]
    assert names[0] == "coeff_table_vs_binomial"
    assert names[-1] == "discrepancy_witness"


def test_discrepancy_witness_in_minimal_report():
    report = run_all(2, 1, 0)
    assert report.all_passed
    witness = [c for c in report.checks if c.name == "discrepancy_witness"][0]
    assert "x=-1/4" in witness.witness
    assert "recursion=7/4" in witness.witness and "statement_variant=3/4" in witness.witness


def test_report_is_deterministic_and_sized_by_parameters():
    a, b = run_all(3, 5, 11), run_all(3, 5, 11)
    assert a.to_json() == b.to_json()
    # 1 + 2 random-function suites + (n_max-1) f + 2*n_max g-comb + (n_max-1) g-closed + 3*n_max + 1
    n = 3
    assert len(a.checks) == 1 + 2 + (n - 1) + 2 * n + (n - 1) + 3 * n + 1
    assert len(run_all(5, 2, 0).checks) == 1 + 2 + 4 + 10 + 4 + 15 + 1


def test_report_json_fields():
    data = run_all(2, 1, 0).to_dict()
    assert set(data) == {"checks", "seed", "n_max", "samples_per_n"}
    assert set(data["checks"][0]) == {"name", "parameters", "status", "witness"}
    assert {c["status"] for c in data["checks"]} <= {"pass", "fail"}


def test_random_test_function_properties():
    f = random_test_function(1, 4, 2)
    assert f.pieces[0].is_zero() and f.pieces[-1].is_zero()
    assert isinstance(definite_integral(f), Fraction)
    assert equal_ae(random_test_function(5), random_test_function(5))
    for seed in range(50):
        g = random_test_function(seed, 6, 4)
        assert g.has_compact_support() and g.max_degree <= 4 and g.is_canonical()


def test_random_test_functions_mix_knot_lattices():
    knots = [k for s in range(40) for k in random_test_function(s).knots]
    assert any((2 * k).denominator == 1 for k in knots)
    assert any((2 * k).denominator != 1 for k in knots)


def test_sample_points_avoid_knots_and_stay_in_range():
    knots = [Fraction(k, 2) for k in range(-6, 7)]
    xs = sample_points(random.Random(3), 200, Fraction(-3), Fraction(3), knots)
    assert len(set(xs)) == 200 and xs == sorted(xs)
    assert all(-3 <= x <= 3 and x not in knots and (x * 210).denominator == 1 for x in xs)
