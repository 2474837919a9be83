"""Piecewise polynomials with exact rational knots and coefficients.

A :class:`PiecewisePoly` with knots ``k[0] < ... < k[m-1]`` holds ``m + 1``
polynomials: ``pieces[0]`` on ``(-inf, k[0])``, ``pieces[i]`` on
``(k[i-1], k[i])`` and ``pieces[m]`` on ``(k[m-1], inf)``.  Values *at* knots
are not stored; two functions are the same when they agree off a finite set,
and :func:`evaluate` asks for a side whenever it lands on a knot.

All polynomials use the global monomial basis, coefficient ``i`` multiplying
``x**i``.
"""
from __future__ import annotations

import json
from bisect import bisect_left, bisect_right
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from . import kernels
from .errors import KnotAmbiguousError, UnboundedSupportError
from .exact import RationalLike, as_rational, format_rational, parse_rational

__all__ = [
    "Polynomial",
    "PiecewisePoly",
    "make_box",
    "zero",
    "evaluate",
    "linear_combine",
    "shift",
    "antiderivative",
    "derivative",
    "definite_integral",
    "equal_ae",
    "reflect",
]

_ZERO = Fraction(0)


class Polynomial:
    """Dense polynomial over the rationals, ascending coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[RationalLike] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: Tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def _trusted(cls, coeffs: List[Fraction]) -> "Polynomial":
        # Skips conversion; callers pass Fractions only.
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        return obj

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: RationalLike) -> Fraction:
        return kernels.horner(self.coeffs, as_rational(x))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return Polynomial._trusted(out)

    def __neg__(self) -> "Polynomial":
        return Polynomial._trusted([-c for c in self.coeffs])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, factor: Fraction) -> "Polynomial":
        if factor == 0:
            return Polynomial()
        return Polynomial._trusted([factor * c for c in self.coeffs])

    def shift(self, h: Fraction) -> "Polynomial":
        """The polynomial ``x -> self(x + h)``."""
        return Polynomial._trusted(kernels.taylor_shift(self.coeffs, h))

    def derivative(self) -> "Polynomial":
        return Polynomial._trusted([i * c for i, c in enumerate(self.coeffs) if i])

    def antiderivative(self) -> "Polynomial":
        """Antiderivative with zero constant term."""
        if not self.coeffs:
            return self
        return Polynomial._trusted([_ZERO] + [c / (i + 1) for i, c in enumerate(self.coeffs)])

    def reflect(self) -> "Polynomial":
        """The polynomial ``x -> self(-x)``."""
        return Polynomial._trusted([-c if i % 2 else c for i, c in enumerate(self.coeffs)])


class PiecewisePoly:
    """Piecewise polynomial, canonicalized on construction.

    Canonical form drops every knot that separates two identical pieces, so
    that two a.e.-equal functions have identical ``knots`` and ``pieces``.
    Pass ``canonical=False`` to keep redundant knots (useful for tests).
    """

    __slots__ = ("knots", "pieces")

    def __init__(
        self,
        knots: Sequence[RationalLike],
        pieces: Sequence[Polynomial],
        canonical: bool = True,
    ):
        ks = [as_rational(k) for k in knots]
        ps = list(pieces)
        if len(ps) != len(ks) + 1:
            raise ValueError(f"{len(ks)} knots need {len(ks) + 1} pieces, got {len(ps)}")
        for a, b in zip(ks, ks[1:]):
            if not a < b:
                raise ValueError("knots must be strictly increasing")
        if canonical:
            ks, ps = _merge_pieces(ks, ps)
        self.knots: Tuple[Fraction, ...] = tuple(ks)
        self.pieces: Tuple[Polynomial, ...] = tuple(ps)

    # -- structure ---------------------------------------------------------

    def is_canonical(self) -> bool:
        return all(a != b for a, b in zip(self.pieces, self.pieces[1:]))

    def canonical(self) -> "PiecewisePoly":
        return PiecewisePoly(self.knots, self.pieces)

    def is_zero(self) -> bool:
        return all(p.is_zero() for p in self.pieces)

    def has_compact_support(self) -> bool:
        return self.pieces[0].is_zero() and self.pieces[-1].is_zero()

    @property
    def max_degree(self) -> int:
        return max(p.degree for p in self.pieces)

    def support(self) -> Tuple[Fraction, Fraction] | None:
        """Smallest closed interval outside which the function vanishes.

        ``None`` for the zero function; requires compact support.
        """
        if not self.has_compact_support():
            raise UnboundedSupportError("function does not vanish at infinity")
        if self.is_zero():
            return None
        return self.knots[0], self.knots[-1]

    def piece_index(self, x: Fraction, side: str = "interior") -> int:
        i = bisect_left(self.knots, x)
        if i < len(self.knots) and self.knots[i] == x:
            if side == "left":
                return i
            if side == "right":
                return i + 1
            if side == "interior":
                if self.pieces[i](x) != self.pieces[i + 1](x):
                    raise KnotAmbiguousError(f"f jumps at knot x = {format_rational(x)}; choose a side")
                return i
            raise ValueError(f"unknown side {side!r}")
        return i

    def __call__(self, x: RationalLike, side: str = "interior") -> Fraction:
        return evaluate(self, x, side)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PiecewisePoly):
            return NotImplemented
        return equal_ae(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"PiecewisePoly({self.to_json()})"

    # -- arithmetic sugar ---------------------------------------------------

    def __add__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return linear_combine([(1, self), (1, other)])

    def __sub__(self, other: "PiecewisePoly") -> "PiecewisePoly":
        return linear_combine([(1, self), (-1, other)])

    def __neg__(self) -> "PiecewisePoly":
        return linear_combine([(-1, self)])

    def __rmul__(self, factor: RationalLike) -> "PiecewisePoly":
        return linear_combine([(factor, self)])

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "knots": [format_rational(k) for k in self.knots],
            "pieces": [[format_rational(c) for c in p.coeffs] or ["0"] for p in self.pieces],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, data: dict) -> "PiecewisePoly":
        knots = [parse_rational(k) for k in data["knots"]]
        pieces = [Polynomial(parse_rational(c) for c in coeffs) for coeffs in data["pieces"]]
        return cls(knots, pieces)

    @classmethod
    def from_json(cls, text: str) -> "PiecewisePoly":
        return cls.from_dict(json.loads(text))


def _merge_pieces(knots: List[Fraction], pieces: List[Polynomial]):
    out_k: List[Fraction] = []
    out_p: List[Polynomial] = [pieces[0]]
    for k, p in zip(knots, pieces[1:]):
        if p != out_p[-1]:
            out_k.append(k)
            out_p.append(p)
    return out_k, out_p


def _refine(f: PiecewisePoly, knots: Sequence[Fraction]) -> List[Polynomial]:
    """Pieces of ``f`` on the intervals cut by ``knots`` (a superset of f's)."""
    out = [f.pieces[0]]
    fk = f.knots
    for left in knots:
        out.append(f.pieces[bisect_right(fk, left)])
    return out


def _union(knot_lists: Iterable[Sequence[Fraction]]) -> List[Fraction]:
    merged = set()
    for ks in knot_lists:
        merged.update(ks)
    return sorted(merged)


def zero() -> PiecewisePoly:
    return PiecewisePoly([], [Polynomial()])


def make_box() -> PiecewisePoly:
    """Indicator of the open interval (-1/2, 1/2)."""
    return PiecewisePoly(
        [Fraction(-1, 2), Fraction(1, 2)],
        [Polynomial(), Polynomial([1]), Polynomial()],
    )


def evaluate(f: PiecewisePoly, x: RationalLike, side: str = "interior") -> Fraction:
    """Value of ``f`` at ``x``.

    At a knot, ``side="left"`` / ``"right"`` select the one-sided limit;
    ``"interior"`` works only where both limits agree and otherwise raises
    :class:`KnotAmbiguousError`.  Off knots the side is irrelevant.
    """
    x = as_rational(x)
    return f.pieces[f.piece_index(x, side)](x)


def linear_combine(terms: Iterable[Tuple[RationalLike, PiecewisePoly]]) -> PiecewisePoly:
    terms = [(as_rational(c), f) for c, f in terms]
    terms = [(c, f) for c, f in terms if c != 0]
    if not terms:
        return zero()
    knots = _union(f.knots for _, f in terms)
    acc: List[List[Fraction]] = [[] for _ in range(len(knots) + 1)]
    for c, f in terms:
        for slot, p in zip(acc, _refine(f, knots)):
            cs = p.coeffs
            if len(slot) < len(cs):
                slot.extend([_ZERO] * (len(cs) - len(slot)))
            for i, a in enumerate(cs):
                slot[i] += c * a
    return PiecewisePoly(knots, [Polynomial._trusted(s) for s in acc])


def shift(f: PiecewisePoly, h: RationalLike) -> PiecewisePoly:
    """The function ``x -> f(x + h)``; knots move by ``-h``."""
    h = as_rational(h)
    if h == 0:
        return f
    return PiecewisePoly([k - h for k in f.knots], [p.shift(h) for p in f.pieces])


def antiderivative(f: PiecewisePoly) -> PiecewisePoly:
    """Continuous ``F`` with ``F' = f`` off knots and ``F = 0`` left of the support."""
    if not f.pieces[0].is_zero():
        raise UnboundedSupportError("antiderivative needs f = 0 on the left unbounded piece")
    out = [Polynomial()]
    for k, p in zip(f.knots, f.pieces[1:]):
        a = p.antiderivative()
        jump = out[-1](k) - a(k)
        out.append(a + Polynomial._trusted([jump]))
    return PiecewisePoly(f.knots, out)


def derivative(f: PiecewisePoly) -> PiecewisePoly:
    """Piecewise derivative; jumps contribute nothing."""
    return PiecewisePoly(f.knots, [p.derivative() for p in f.pieces])


def definite_integral(f: PiecewisePoly) -> Fraction:
    if not f.has_compact_support():
        raise UnboundedSupportError("integral over the real line diverges")
    tail = antiderivative(f).pieces[-1]
    return tail.coeffs[0] if tail.coeffs else _ZERO


def equal_ae(f: PiecewisePoly, g: PiecewisePoly) -> bool:
    """True when ``f`` and ``g`` agree off a finite set of points."""
    knots = _union([f.knots, g.knots])
    return _refine(f, knots) == _refine(g, knots)


def reflect(f: PiecewisePoly) -> PiecewisePoly:
    """The function ``x -> f(-x)``."""
    return PiecewisePoly([-k for k in reversed(f.knots)], [p.reflect() for p in reversed(f.pieces)])
