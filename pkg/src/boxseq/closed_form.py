"""Pointwise closed-form evaluators for f[n] and g[n].

Nothing here touches the piecewise builders: every value is a finite sum of
truncated-power terms ``y**(m-2) * |y|`` and box indicators, so these
functions serve as an independent oracle for :mod:`boxseq.sequences`.

Box terms use the open-interval indicator, which is 0 at +-1/2.  Whenever a
box argument lands exactly on +-1/2 the result is still returned, but the
detailed variants report it in ``knot_hits`` because the value there is a
convention rather than a property of the a.e.-defined function.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import List

from . import kernels
from .errors import NTooSmallError
from .exact import RationalLike, as_rational, binomial, factorial

__all__ = [
    "ClosedFormValue",
    "box_value",
    "eval_f_closed",
    "eval_g_combination",
    "eval_g_combination_detailed",
    "eval_g_closed",
    "eval_g_closed_detailed",
]

_HALF = Fraction(1, 2)


@dataclass
class ClosedFormValue:
    value: Fraction
    knot_hits: List[Fraction] = field(default_factory=list)

    @property
    def on_knot(self) -> bool:
        return bool(self.knot_hits)


def box_value(x: Fraction) -> int:
    return 1 if -_HALF < x < _HALF else 0


def _truncated_power_sum(m: int, x: Fraction) -> Fraction:
    """``(m/2) * sum_i (-1)**(m-i) / (i! (m-i)!) * y**(m-2) * |y|`` with
    ``y = x - m/2 + i``; a power ``0**0`` counts as 1.

    With ``x = p/q`` every ``y`` is an integer over ``2q``, so the sum is
    done on integers and divided once.
    """
    p, q = x.numerator, x.denominator
    s = kernels.kink_sum(m, 2 * p - m * q, 2 * q)
    return Fraction(m * s, 2 * factorial(m) * (2 * q) ** (m - 1))


def eval_f_closed(n: int, x: RationalLike) -> Fraction:
    """Closed form of ``f[n](x)``, valid for ``n >= 2``."""
    if n < 2:
        raise NTooSmallError(f"closed form for f needs n >= 2, got {n}")
    return _truncated_power_sum(n, as_rational(x))


def eval_g_combination_detailed(n: int, x: RationalLike) -> ClosedFormValue:
    """``g[n](x) = sum_k C(n-1,k) sum_r (-1)**r C(k,r) f[n-k](x + k/2 - r)``."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    x = as_rational(x)
    hits: List[Fraction] = []
    total = Fraction(0)
    for k in range(n):
        inner = Fraction(0)
        for r in range(k + 1):
            arg = x + Fraction(k, 2) - r
            if n - k == 1:
                if abs(arg) == _HALF:
                    hits.append(arg)
                val = Fraction(box_value(arg))
            else:
                val = eval_f_closed(n - k, arg)
            inner += (-1) ** r * binomial(k, r) * val
        total += binomial(n - 1, k) * inner
    return ClosedFormValue(total, hits)


def eval_g_combination(n: int, x: RationalLike) -> Fraction:
    return eval_g_combination_detailed(n, x).value


def _eval_g_closed(n: int, x: Fraction, tail_sign: int) -> ClosedFormValue:
    if n < 2:
        raise NTooSmallError(f"closed form for g needs n >= 2, got {n}")
    p, q = x.numerator, x.denominator
    total = Fraction(0)
    for k in range(n - 1):
        m = n - k
        # sum over r of (-1)**r C(k,r) times the integer kink sum at base x + k - r - n/2
        inner = 0
        for r in range(k + 1):
            s = kernels.kink_sum(m, 2 * p + 2 * q * (k - r) - n * q, 2 * q)
            s *= binomial(k, r)
            inner += s if r % 2 == 0 else -s
        total += Fraction(binomial(n - 1, k) * m * inner, 2 * factorial(m) * (2 * q) ** (m - 1))
    hits: List[Fraction] = []
    half_width = Fraction(n - 1, 2)
    for r in range(n):
        arg = x + tail_sign * half_width - r
        if abs(arg) == _HALF:
            hits.append(arg)
        total += (-1) ** r * binomial(n - 1, r) * box_value(arg)
    return ClosedFormValue(total, hits)


def eval_g_closed_detailed(n: int, x: RationalLike) -> ClosedFormValue:
    return _eval_g_closed(n, as_rational(x), +1)


def eval_g_closed(n: int, x: RationalLike) -> Fraction:
    """Non-recursive value of ``g[n](x)`` for ``n >= 2``.

    Triple sum of truncated powers over the smooth terms ``k <= n-2`` plus the
    alternating box tail ``sum_r (-1)**r C(n-1,r) box(x + (n-1)/2 - r)``.
    """
    return _eval_g_closed(n, as_rational(x), +1).value


def _eval_g_closed_statement_variant(n: int, x: RationalLike) -> Fraction:
    # Box tail centred at x - (n-1)/2 - r instead; kept only to show it is wrong.
    return _eval_g_closed(n, as_rational(x), -1).value
