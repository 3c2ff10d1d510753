"""Shared hypothesis strategies."""

from fractions import Fraction

from hypothesis import strategies as st

from wminus.coeff import Scalar
from wminus.wlie import LieElement

small_fraction = st.fractions(min_value=-20, max_value=20, max_denominator=12)
scalars = st.builds(Scalar, small_fraction, small_fraction)
nonzero_scalars = scalars.filter(lambda s: not s.is_zero())
monomial_keys = st.tuples(st.integers(-6, 6), st.integers(0, 5))
lie_elements = st.builds(
    LieElement,
    st.dictionaries(monomial_keys, st.integers(-3, 3).map(Fraction), max_size=3),
    st.integers(-2, 2),
)
odd_keys = st.tuples(st.integers(-4, 4), st.integers(0, 3)).filter(lambda g: (g[0] + g[1]) % 2 == 1)
