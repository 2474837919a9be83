"""Pure-Python polynomial kernels.

Both kernels clear denominators first and then work on plain integers, which
avoids a gcd per elementary operation. ``_kernels.pyx`` compiles the same
algorithms; keep the two in sync.
"""
from fractions import Fraction
from math import lcm


def _integer_coeffs(coeffs):
    den = lcm(*[c.denominator for c in coeffs])
    return [c.numerator * (den // c.denominator) for c in coeffs], den


def taylor_shift(coeffs, h):
    """Coefficients of ``p(x + h)`` given those of ``p`` (ascending order)."""
    d = len(coeffs) - 1
    if d < 1 or h == 0:
        return list(coeffs)
    ints, den = _integer_coeffs(coeffs)
    p, q = h.numerator, h.denominator
    # q**d * p(y/q) has integer coefficients; shift it by the integer p.
    qpow = [1] * (d + 1)
    for i in range(1, d + 1):
        qpow[i] = qpow[i - 1] * q
    c = [ints[i] * qpow[d - i] for i in range(d + 1)]
    for i in range(d):
        for j in range(d - 1, i - 1, -1):
            c[j] += p * c[j + 1]
    return [Fraction(c[j], qpow[d - j] * den) for j in range(d + 1)]


def horner(coeffs, x):
    """Value of the polynomial at ``x``."""
    d = len(coeffs) - 1
    if d < 0:
        return Fraction(0)
    if d == 0:
        return coeffs[0]
    ints, den = _integer_coeffs(coeffs)
    p, q = x.numerator, x.denominator
    acc = ints[d]
    qpow = 1
    for i in range(d - 1, -1, -1):
        qpow *= q
        acc = acc * p + ints[i] * qpow
    return Fraction(acc, den * qpow)


def kink_sum(m, base, step):
    """``sum_t (-1)**(m-t) C(m,t) N**(m-2) |N|`` over ``N = base + t*step``,
    ``t = 0..m``; integers only, ``m >= 2``."""
    total = 0
    c = 1  # C(m, t)
    for t in range(m + 1):
        y = base + t * step
        if y:
            term = c * y ** (m - 2) * abs(y)
            total += term if (m - t) % 2 == 0 else -term
        c = c * (m - t) // (t + 1)
    return total
