import sys
from fractions import Fraction
from pathlib import Path

from hypothesis import strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from boxseq.piecewise import PiecewisePoly, Polynomial  # noqa: E402

small_ints = st.integers(min_value=-6, max_value=6)
rationals = st.builds(Fraction, st.integers(-60, 60), st.integers(1, 12))
polynomials = st.lists(small_ints, max_size=5).map(Polynomial)


@st.composite
def compact_functions(draw, max_knots=6, half_integer_knots=False):
    """Compactly supported piecewise polynomials with distinct sorted knots."""
    if half_integer_knots:
        knot_values = st.builds(Fraction, st.integers(-8, 8), st.just(2))
    else:
        knot_values = rationals
    knots = sorted(draw(st.sets(knot_values, min_size=2, max_size=max_knots)))
    inner = draw(st.lists(polynomials, min_size=len(knots) - 1, max_size=len(knots) - 1))
    return PiecewisePoly(knots, [Polynomial()] + inner + [Polynomial()])
