"""Exact scalars, factorials and binomial coefficients.

Rationals are :class:`fractions.Fraction`; they are always stored in lowest
terms with a positive denominator, which is exactly the canonical form the
rest of the package relies on for equality.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import Dict, Tuple, Union

Rational = Fraction
RationalLike = Union[Fraction, int, str]

_RATIONAL_RE = re.compile(r"^(-?)(\d+)(?:/(\d+))?$")

__all__ = [
    "Rational",
    "CoeffTable",
    "as_rational",
    "parse_rational",
    "format_rational",
    "binomial",
    "coeff_table",
    "factorial",
]


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional leading minus, ``q > 0``)."""
    m = _RATIONAL_RE.match(text.strip())
    if m is None:
        raise ValueError(f"not a rational literal: {text!r}")
    sign, num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {text!r}")
    value = Fraction(int(num), int(den) if den is not None else 1)
    return -value if sign else value


def format_rational(value: Fraction) -> str:
    # str(Fraction) already prints "p/q", or "p" when q == 1.
    return str(Fraction(value))


def as_rational(value: RationalLike) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {type(value).__name__} as an exact rational")


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError("factorial of a negative integer")
    result = 1
    for i in range(2, n + 1):
        result *= i
    return result


def binomial(n: int, k: int) -> int:
    """C(n, k) by the multiplicative formula; 0 when ``k > n``."""
    if k < 0 or n < 0:
        raise ValueError("binomial requires non-negative arguments")
    if k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        result = result * (n - k + i) // i
    return result


class CoeffTable:
    """Triangular table ``c[n, k]`` for ``1 <= n <= n_max``, ``0 <= k <= n-1``.

    Filled only by the recurrence ``c[n+1, k] = c[n, k] + c[n, k-1]`` with unit
    edges; no factorials are involved.
    """

    __slots__ = ("n_max", "entries")

    def __init__(self, n_max: int, entries: Dict[Tuple[int, int], int]):
        self.n_max = n_max
        self.entries = entries

    def __getitem__(self, index: Tuple[int, int]) -> int:
        return self.entries[index]

    def row(self, n: int) -> list:
        return [self.entries[n, k] for k in range(n)]

    def __repr__(self) -> str:
        return f"CoeffTable(n_max={self.n_max})"


def coeff_table(n_max: int) -> CoeffTable:
    if n_max < 1:
        raise ValueError("n_max must be at least 1")
    entries: Dict[Tuple[int, int], int] = {(1, 0): 1}
    for n in range(1, n_max):
        entries[n + 1, 0] = 1
        for k in range(1, n):
            entries[n + 1, k] = entries[n, k] + entries[n, k - 1]
        entries[n + 1, n] = 1
    return CoeffTable(n_max, entries)
