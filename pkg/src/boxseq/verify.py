"""Batch verification of the sequence identities.

:func:`run_all` executes every suite in a fixed order and returns a
:class:`VerificationReport`; failures become report entries with a witness,
never exceptions.  All comparisons are exact.

Sample points come from the grid ``m / 210`` (210 = 2*3*5*7) with knots of
the function under test filtered out, drawn from a ``random.Random`` seeded by
a string derived from the run seed, the suite and ``n``.
"""
from __future__ import annotations

import json
import math
import random
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, List, Optional, Sequence

from .closed_form import (
    _eval_g_closed_statement_variant,
    eval_f_closed,
    eval_g_closed,
    eval_g_combination,
)
from .exact import binomial, coeff_table, format_rational
from .operators import diff_L, window_K
from .piecewise import (
    PiecewisePoly,
    Polynomial,
    definite_integral,
    derivative,
    equal_ae,
    evaluate,
    reflect,
)
from .sequences import build_f, build_g, build_g_via_f

__all__ = [
    "Check",
    "VerificationReport",
    "random_test_function",
    "sample_points",
    "run_all",
    "check_coeff_table",
    "check_commutativity",
    "check_derivative_identity",
    "check_f_closed",
    "check_g_combination",
    "check_g_via_f",
    "check_g_closed",
    "check_conservation",
    "check_structure",
    "check_f_symmetry",
    "check_discrepancy_witness",
]

GRID_DENOMINATOR = 210
PASS, FAIL = "pass", "fail"


@dataclass
class Check:
    name: str
    parameters: str
    status: str
    witness: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class VerificationReport:
    checks: List[Check] = field(default_factory=list)
    seed: int = 0
    n_max: int = 0
    samples_per_n: int = 0

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "checks": [asdict(c) for c in self.checks],
            "seed": self.seed,
            "n_max": self.n_max,
            "samples_per_n": self.samples_per_n,
        }

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent)


def _check(name: str, parameters: str, witness: Optional[str]) -> Check:
    """A failing check is one that produced a witness."""
    return Check(name, parameters, FAIL if witness else PASS, witness)


def _rng(seed: int, *tags: object) -> random.Random:
    return random.Random(":".join(str(t) for t in (seed,) + tags))


def sample_points(
    rng: random.Random,
    count: int,
    lo: Fraction,
    hi: Fraction,
    knots: Sequence[Fraction] = (),
) -> List[Fraction]:
    """``count`` distinct grid points in ``[lo, hi]`` avoiding ``knots``, sorted."""
    a, b = math.ceil(lo * GRID_DENOMINATOR), math.floor(hi * GRID_DENOMINATOR)
    excluded = {k for k in knots if lo <= k <= hi and (k * GRID_DENOMINATOR).denominator == 1}
    if count > (b - a + 1) - len(excluded):
        raise ValueError(f"not enough grid points in [{lo}, {hi}] for {count} samples")
    chosen = set()
    while len(chosen) < count:
        x = Fraction(rng.randint(a, b), GRID_DENOMINATOR)
        if x not in excluded:
            chosen.add(x)
    return sorted(chosen)


def random_test_function(seed: int, max_knots: int = 6, max_degree: int = 4) -> PiecewisePoly:
    """Deterministic compactly supported piecewise polynomial for identity checks.

    Knots mix half-integers with general rationals (denominators up to 7);
    interior pieces have small integer coefficients.
    """
    if max_knots < 2:
        raise ValueError("max_knots must be at least 2")
    rng = random.Random(seed)
    count = rng.randint(2, max_knots)
    knots = set()
    while len(knots) < count:
        if rng.random() < 0.5:
            knots.add(Fraction(rng.randint(-8, 8), 2))
        else:
            knots.add(Fraction(rng.randint(-24, 24), rng.randint(2, 7)))
    pieces = [Polynomial()]
    for _ in range(count - 1):
        degree = rng.randint(0, max_degree)
        pieces.append(Polynomial(rng.randint(-5, 5) for _ in range(degree + 1)))
    pieces.append(Polynomial())
    return PiecewisePoly(sorted(knots), pieces)


def _pointwise(
    name: str,
    n: int,
    count: int,
    seed: int,
    reference: PiecewisePoly,
    evaluator: Callable[[int, Fraction], Fraction],
) -> Check:
    half = Fraction(n, 2)
    xs = sample_points(_rng(seed, name, n), count, -half - 1, half + 1, reference.knots)
    witness = None
    for x in xs:
        expected = evaluate(reference, x)
        got = evaluator(n, x)
        if got != expected:
            witness = (
                f"n={n}, x={format_rational(x)}, recursion={format_rational(expected)}, "
                f"closed_form={format_rational(got)}"
            )
            break
    return _check(name, f"n={n}, samples={count}", witness)


def check_coeff_table(n_max: int) -> Check:
    table = coeff_table(n_max)
    witness = None
    for n in range(1, n_max + 1):
        for k in range(n):
            if table[n, k] != binomial(n - 1, k):
                witness = f"n={n}, k={k}, table={table[n, k]}, binomial={binomial(n - 1, k)}"
                break
        if witness:
            break
    return _check("coeff_table_vs_binomial", f"n_max={n_max}", witness)


def _function_identity(name: str, count: int, seed: int, lhs, rhs) -> Check:
    witness = None
    for i in range(count):
        f = random_test_function(seed * 100003 + i, max_knots=6, max_degree=4)
        if not equal_ae(lhs(f), rhs(f)):
            witness = f"function_seed={seed * 100003 + i}, f={f.to_json()}"
            break
    return _check(name, f"functions={count}", witness)


def check_commutativity(count: int, seed: int) -> Check:
    return _function_identity(
        "commutativity_LK", count, seed, lambda f: diff_L(window_K(f)), lambda f: window_K(diff_L(f))
    )


def check_derivative_identity(count: int, seed: int) -> Check:
    return _function_identity(
        "derivative_of_K_is_L", count, seed, lambda f: derivative(window_K(f)), diff_L
    )


def check_f_closed(n: int, count: int, seed: int) -> Check:
    return _pointwise("f_closed_form", n, count, seed, build_f(n), eval_f_closed)


def check_g_combination(n: int, count: int, seed: int) -> Check:
    return _pointwise("g_combination", n, count, seed, build_g(n), eval_g_combination)


def check_g_via_f(n: int) -> Check:
    witness = None
    if not equal_ae(build_g(n), build_g_via_f(n)):
        witness = f"n={n}, recursion={build_g(n).to_json()}, combination={build_g_via_f(n).to_json()}"
    return _check("g_via_f_equal_ae", f"n={n}", witness)


def check_g_closed(n: int, count: int, seed: int) -> Check:
    return _pointwise("g_closed_form", n, count, seed, build_g(n), eval_g_closed)


def check_conservation(n: int) -> Check:
    If, Ig = definite_integral(build_f(n)), definite_integral(build_g(n))
    witness = None
    if If != 1 or Ig != 1:
        witness = f"n={n}, integral_f={format_rational(If)}, integral_g={format_rational(Ig)}"
    return _check("conservation", f"n={n}", witness)


def structure_violation(f: PiecewisePoly, n: int) -> Optional[str]:
    """Why ``f`` breaks the support / lattice / degree bounds for index n, if it does."""
    half = Fraction(n, 2)
    if not f.has_compact_support():
        return "outer pieces are not zero"
    for k in f.knots:
        if (2 * k).denominator != 1 or abs(k) > half:
            return f"knot {format_rational(k)} outside (1/2)Z within [-{n}/2, {n}/2]"
    if f.max_degree > n - 1:
        return f"piece degree {f.max_degree} exceeds {n - 1}"
    return None


def check_structure(n: int) -> Check:
    witness = None
    for kind, f in (("f", build_f(n)), ("g", build_g(n))):
        problem = structure_violation(f, n)
        if problem:
            witness = f"kind={kind}, n={n}: {problem}"
            break
    return _check("support_degree_lattice", f"n={n}", witness)


def check_f_symmetry(n: int) -> Check:
    f = build_f(n)
    witness = None if equal_ae(f, reflect(f)) else f"n={n}, f={f.to_json()}"
    return _check("f_even", f"n={n}", witness)


def check_discrepancy_witness() -> Check:
    """The tail centred at x - (n-1)/2 - r must disagree with the recursion at
    (n=2, x=-1/4) while the implemented tail agrees.

    This check's witness is recorded whether it passes or fails.
    """
    n, x = 2, Fraction(-1, 4)
    recursion = evaluate(build_g(n), x)
    variant = _eval_g_closed_statement_variant(n, x)
    implemented = eval_g_closed(n, x)
    ok = recursion == implemented == Fraction(7, 4) and variant == Fraction(3, 4)
    witness = (
        f"n={n}, x={format_rational(x)}, recursion={format_rational(recursion)}, "
        f"implemented={format_rational(implemented)}, statement_variant={format_rational(variant)}"
    )
    return Check("discrepancy_witness", f"n={n}, x=-1/4", PASS if ok else FAIL, witness)


def run_all(n_max: int, samples_per_n: int, seed: int) -> VerificationReport:
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    if samples_per_n < 1:
        raise ValueError("samples_per_n must be positive")
    report = VerificationReport(seed=seed, n_max=n_max, samples_per_n=samples_per_n)
    add = report.checks.append
    ns = range(1, n_max + 1)

    add(check_coeff_table(n_max))
    add(check_commutativity(samples_per_n, seed))
    add(check_derivative_identity(samples_per_n, seed))
    for n in range(2, n_max + 1):
        add(check_f_closed(n, samples_per_n, seed))
    for n in ns:
        add(check_g_combination(n, samples_per_n, seed))
        add(check_g_via_f(n))
    for n in range(2, n_max + 1):
        add(check_g_closed(n, samples_per_n, seed))
    for n in ns:
        add(check_conservation(n))
    for n in ns:
        add(check_structure(n))
    for n in ns:
        add(check_f_symmetry(n))
    add(check_discrepancy_witness())
    return report
