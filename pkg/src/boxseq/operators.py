"""The half-step difference operator, the unit window integral, and powers
of the difference operator written as finite shift combinations."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

from .exact import binomial, format_rational
from .piecewise import PiecewisePoly, antiderivative, linear_combine, shift

__all__ = [
    "HALF",
    "ShiftCombination",
    "diff_L",
    "window_K",
    "expand_L_power",
    "apply_shift_combination",
    "iterate",
]

HALF = Fraction(1, 2)


@dataclass(frozen=True)
class ShiftCombination:
    """``sum(c * E**h for c, h in terms)`` where ``E**h u(x) = u(x + h)``.

    Terms are kept with strictly decreasing shifts and nonzero integer
    coefficients.
    """

    terms: Tuple[Tuple[int, Fraction], ...]

    def __post_init__(self):
        shifts = [h for _, h in self.terms]
        if any(a <= b for a, b in zip(shifts, shifts[1:])):
            raise ValueError("shifts must be strictly decreasing")
        if any(c == 0 for c, _ in self.terms):
            raise ValueError("zero coefficient in shift combination")

    def __str__(self) -> str:
        return " + ".join(f"{c}*E^({format_rational(h)})" for c, h in self.terms) or "0"


def diff_L(f: PiecewisePoly) -> PiecewisePoly:
    """``x -> f(x + 1/2) - f(x - 1/2)``."""
    return linear_combine([(1, shift(f, HALF)), (-1, shift(f, -HALF))])


def window_K(f: PiecewisePoly) -> PiecewisePoly:
    """``x -> integral of f over [x - 1/2, x + 1/2]``.

    Computed as the half-step difference of the continuous antiderivative, so
    ``f`` must vanish on its left unbounded piece.
    """
    return diff_L(antiderivative(f))


def expand_L_power(k: int) -> ShiftCombination:
    if k < 0:
        raise ValueError("power must be non-negative")
    return ShiftCombination(
        tuple(((-1) ** r * binomial(k, r), Fraction(k, 2) - r) for r in range(k + 1))
    )


def apply_shift_combination(sc: ShiftCombination, f: PiecewisePoly) -> PiecewisePoly:
    return linear_combine([(c, shift(f, h)) for c, h in sc.terms])


def iterate(op, f: PiecewisePoly, times: int) -> PiecewisePoly:
    for _ in range(times):
        f = op(f)
    return f
