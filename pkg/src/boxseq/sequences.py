"""The box-started sequences.

``f[1]`` and ``g[1]`` are the indicator of (-1/2, 1/2); then
``f[n+1] = K f[n]`` and ``g[n+1] = L g[n] + K g[n]``.  Both are memoized per
process, so building element ``n`` costs ``n - 1`` steps once.
"""
from __future__ import annotations

import threading
from fractions import Fraction
from typing import Callable, List

from .exact import RationalLike, as_rational, binomial
from .operators import apply_shift_combination, diff_L, expand_L_power, window_K
from .piecewise import PiecewisePoly, linear_combine, make_box

__all__ = [
    "SequenceCache",
    "build_f",
    "build_g",
    "build_g_via_f",
    "population_profile",
]


def _g_step(g: PiecewisePoly) -> PiecewisePoly:
    return linear_combine([(1, diff_L(g)), (1, window_K(g))])


class SequenceCache:
    """Memoized elements of one sequence, indexed from 1."""

    def __init__(self, kind: str, step: Callable[[PiecewisePoly], PiecewisePoly]):
        self.kind = kind
        self._step = step
        self._elements: List[PiecewisePoly] = [make_box()]
        self._lock = threading.Lock()

    def __len__(self) -> int:
        return len(self._elements)

    def get(self, n: int) -> PiecewisePoly:
        if n < 1:
            raise ValueError(f"sequence index must be >= 1, got {n}")
        if n <= len(self._elements):
            return self._elements[n - 1]
        with self._lock:
            while len(self._elements) < n:
                self._elements.append(self._step(self._elements[-1]))
        return self._elements[n - 1]

    def clear(self) -> None:
        with self._lock:
            del self._elements[1:]


F_CACHE = SequenceCache("f", window_K)
G_CACHE = SequenceCache("g", _g_step)


def build_f(n: int) -> PiecewisePoly:
    return F_CACHE.get(n)


def build_g(n: int) -> PiecewisePoly:
    return G_CACHE.get(n)


def build_g_via_f(n: int) -> PiecewisePoly:
    """``g[n]`` assembled as ``sum_k C(n-1, k) L**k f[n-k]``."""
    if n < 1:
        raise ValueError(f"sequence index must be >= 1, got {n}")
    return linear_combine(
        (binomial(n - 1, k), apply_shift_combination(expand_L_power(k), build_f(n - k)))
        for k in range(n)
    )


def population_profile(t: int, R: RationalLike) -> PiecewisePoly:
    """Density after ``t`` generations with growth ``R``, box dispersal and a
    point release at the origin: ``R**t`` times the ``t``-fold box convolution,
    which is ``f[t]``."""
    if t < 1:
        raise ValueError(f"t must be >= 1, got {t}")
    R = as_rational(R)
    return linear_combine([(R**t, build_f(t))])
