"""Acceptance criteria, one test each.

Every comparison is exact.  Each test prints a ``[ACCEPT] ...: PASS/FAIL``
line; run ``pytest tests/test_acceptance.py -s`` to see them together.
Sequence caches are cleared first so the timings include construction.
"""
import time
from fractions import Fraction

import pytest

from boxseq import verify
from boxseq.cli import run
from boxseq.closed_form import eval_f_closed, eval_g_closed
from boxseq.exact import binomial, coeff_table
from boxseq.piecewise import PiecewisePoly, definite_integral, equal_ae, evaluate, reflect
from boxseq.sequences import F_CACHE, G_CACHE, build_f, build_g, build_g_via_f
from boxseq.verify import run_all, sample_points, structure_violation

SEED = 42


@pytest.fixture
def report(capsys):
    F_CACHE.clear()
    G_CACHE.clear()
    start = time.perf_counter()
    outcome = {}

    def record(label, ok, detail=""):
        outcome.update(label=label, ok=ok, detail=detail)
        return ok

    yield record
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        status = "PASS" if outcome.get("ok") else "FAIL"
        extra = f" ({outcome['detail']})" if outcome.get("detail") else ""
        print(f"\n[ACCEPT] {outcome.get('label', '?')}: {status} in {elapsed:.2f}s{extra}")


def _rng(tag, n):
    import random

    return random.Random(f"acceptance:{SEED}:{tag}:{n}")


def test_c01_closed_form_f(report):
    start = time.perf_counter()
    mismatches = []
    for n in range(2, 13):
        f = build_f(n)
        half = Fraction(n, 2)
        xs = sample_points(_rng("f", n), 100, -half - 1, half + 1, f.knots)
        mismatches += [(n, x) for x in xs if eval_f_closed(n, x) != evaluate(f, x)]
    elapsed = time.perf_counter() - start
    ok = report("C1 closed-form f equivalence, n=2..12 x 100 samples", not mismatches and elapsed < 5, f"{elapsed:.2f}s < 5s")
    assert not mismatches
    assert elapsed < 5
    assert ok


def test_c02_theorem2_full_piecewise(report):
    start = time.perf_counter()
    bad = [n for n in range(1, 13) if not equal_ae(build_g(n), build_g_via_f(n))]
    elapsed = time.perf_counter() - start
    report("C2 g recursion == binomial combination of L^k f, n=1..12 (equal_ae)", not bad and elapsed < 10, f"{elapsed:.2f}s < 10s")
    assert not bad
    assert elapsed < 10


def test_c03_closed_form_g(report):
    start = time.perf_counter()
    mismatches = []
    for n in range(2, 13):
        g = build_g(n)
        half = Fraction(n, 2)
        xs = sample_points(_rng("g", n), 20 * (n + 1), -half - 1, half + 1, g.knots)
        mismatches += [(n, x) for x in xs if eval_g_closed(n, x) != evaluate(g, x)]
    elapsed = time.perf_counter() - start
    report("C3 g triple-sum closed form, n=2..12 x 20(n+1) samples", not mismatches and elapsed < 20, f"{elapsed:.2f}s < 20s")
    assert not mismatches
    assert elapsed < 20


def test_c04_discrepancy_witness_in_report(report):
    rep = run_all(2, 1, 0)
    entries = [c for c in rep.checks if c.name == "discrepancy_witness"]
    ok = (
        len(entries) == 1
        and entries[0].passed
        and "x=-1/4" in entries[0].witness
        and "recursion=7/4" in entries[0].witness
        and "implemented=7/4" in entries[0].witness
        and "statement_variant=3/4" in entries[0].witness
    )
    report("C4 discrepancy witness (n=2, x=-1/4: 7/4 vs 3/4) in report", ok, entries[0].witness if entries else "missing")
    assert ok


def test_c05_commutativity(report):
    start = time.perf_counter()
    check = verify.check_commutativity(100, SEED)
    elapsed = time.perf_counter() - start
    report("C5 L K == K L on 100 random functions", check.passed and elapsed < 5, f"{elapsed:.2f}s < 5s")
    assert check.passed, check.witness
    assert elapsed < 5


def test_c06_derivative_identity(report):
    check = verify.check_derivative_identity(100, SEED)
    report("C6 d/dx K f == L f on the same 100 functions", check.passed)
    assert check.passed, check.witness


def test_c07_coefficient_law(report):
    table = coeff_table(32)
    bad = [(n, k) for n in range(1, 33) for k in range(n) if table[n, k] != binomial(n - 1, k)]
    report("C7 coeff_table(32) == C(n-1, k)", not bad)
    assert not bad


def test_c08_conservation(report):
    bad = [n for n in range(1, 17) if definite_integral(build_f(n)) != 1 or definite_integral(build_g(n)) != 1]
    report("C8 integral of f_n and g_n == 1, n=1..16", not bad)
    assert not bad


def _structure_problems(n):
    problems = [p for p in (structure_violation(build_f(n), n), structure_violation(build_g(n), n)) if p]
    if not equal_ae(build_f(n), reflect(build_f(n))):
        problems.append(f"f_{n} not even")
    return problems


def test_c09_structure(report):
    bad = {n: _structure_problems(n) for n in range(1, 17) if _structure_problems(n)}
    report("C9 knots in (1/2)Z within [-n/2, n/2], degree <= n-1, f even; n=1..16", not bad)
    assert not bad


def test_c10_scale(report):
    start = time.perf_counter()
    g24 = build_g(24)
    elapsed = time.perf_counter() - start
    problems = _structure_problems(24)
    conserved = definite_integral(g24) == 1 and definite_integral(build_f(24)) == 1
    ok = elapsed < 60 and conserved and not problems
    report("C10 build_g(24) < 60s and criteria 8-9 at n=24", ok, f"build {elapsed:.2f}s")
    assert elapsed < 60
    assert conserved and not problems


def test_c11_cli_roundtrip(report, tmp_path, capsys):
    bad = []
    for kind, builder in (("f", build_f), ("g", build_g)):
        for n in range(1, 9):
            path = tmp_path / f"{kind}{n}.json"
            code = run(["build", "--kind", kind, "--n", str(n), "--out", str(path)])
            if code != 0 or not equal_ae(PiecewisePoly.from_json(path.read_text()), builder(n)):
                bad.append((kind, n))
    capsys.readouterr()
    report("C11 CLI build --out JSON round-trip, n=1..8, both kinds", not bad)
    assert not bad
