# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled polynomial kernels; see ``_kernels_py`` for the reference code."""
from fractions import Fraction
from math import lcm


cdef tuple _integer_coeffs(list coeffs):
    cdef Py_ssize_t i, n = len(coeffs)
    cdef object den = lcm(*[c.denominator for c in coeffs])
    cdef list ints = [None] * n
    for i in range(n):
        c = coeffs[i]
        ints[i] = c.numerator * (den // c.denominator)
    return ints, den


def taylor_shift(coeffs, h):
    cdef list cs = list(coeffs)
    cdef Py_ssize_t d = len(cs) - 1
    cdef Py_ssize_t i, j
    cdef list ints, qpow, c
    cdef object den, p, q, acc
    if d < 1 or h == 0:
        return cs
    ints, den = _integer_coeffs(cs)
    p = h.numerator
    q = h.denominator
    qpow = [1] * (d + 1)
    for i in range(1, d + 1):
        qpow[i] = qpow[i - 1] * q
    c = [None] * (d + 1)
    for i in range(d + 1):
        c[i] = ints[i] * qpow[d - i]
    for i in range(d):
        acc = c[d]
        for j in range(d - 1, i - 1, -1):
            acc = c[j] + p * acc
            c[j] = acc
    return [Fraction(c[j], qpow[d - j] * den) for j in range(d + 1)]


def horner(coeffs, x):
    cdef list cs = list(coeffs)
    cdef Py_ssize_t d = len(cs) - 1
    cdef Py_ssize_t i
    cdef list ints
    cdef object den, p, q, acc, qpow
    if d < 0:
        return Fraction(0)
    if d == 0:
        return cs[0]
    ints, den = _integer_coeffs(cs)
    p = x.numerator
    q = x.denominator
    acc = ints[d]
    qpow = 1
    for i in range(d - 1, -1, -1):
        qpow = qpow * q
        acc = acc * p + ints[i] * qpow
    return Fraction(acc, den * qpow)


def kink_sum(Py_ssize_t m, base, step):
    cdef Py_ssize_t t
    cdef object total = 0, c = 1, y, term
    for t in range(m + 1):
        y = base + t * step
        if y:
            term = c * y ** (m - 2) * abs(y)
            if (m - t) % 2 == 0:
                total = total + term
            else:
                total = total - term
        c = c * (m - t) // (t + 1)
    return total
