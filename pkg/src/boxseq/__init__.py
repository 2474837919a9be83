"""Exact piecewise-polynomial construction of the box-started sequences
``f[n+1] = K f[n]`` and ``g[n+1] = L g[n] + K g[n]``, with independent
closed-form evaluators and a batch verifier."""
from .closed_form import eval_f_closed, eval_g_closed, eval_g_combination
from .errors import (
    BoxseqError,
    EmptyRangeError,
    KnotAmbiguousError,
    NTooSmallError,
    UnboundedSupportError,
)
from .exact import binomial, coeff_table, factorial, format_rational, parse_rational
from .kernels import BACKEND
from .operators import ShiftCombination, apply_shift_combination, diff_L, expand_L_power, window_K
from .piecewise import (
    PiecewisePoly,
    Polynomial,
    antiderivative,
    definite_integral,
    derivative,
    equal_ae,
    evaluate,
    linear_combine,
    make_box,
    shift,
)
from .sequences import build_f, build_g, build_g_via_f, population_profile
from .verify import VerificationReport, random_test_function, run_all

__version__ = "0.1.0"
