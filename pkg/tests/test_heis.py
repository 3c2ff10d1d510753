from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from wminus.coeff import SQRT2
from wminus.heis import HeisElement, embed_heis, h, heis_bracket, parse_heis, render_heis
from wminus.wlie import bracket, is_in_wminus, w

odd = st.integers(-6, 5).map(lambda n: 2 * n + 1)


def test_examples():
    assert heis_bracket(h(1), h(-1)) == Fraction(1, 2)
    assert heis_bracket(h(3), h(5)) == 0
    assert heis_bracket(h(-3), h(3)) == Fraction(-3, 2)


def test_embedding_examples():
    assert embed_heis(h(1)) == w(1, 0, SQRT2 / 2)
    assert bracket(embed_heis(h(1)), embed_heis(h(-1))).central == Fraction(1, 2)
    assert embed_heis(HeisElement()).is_zero()


@given(odd, odd)
def test_embedding_is_homomorphism(p, q):
    z = bracket(embed_heis(h(p)), embed_heis(h(q)))
    assert not z.terms
    assert z.central == heis_bracket(h(p), h(q))
    assert is_in_wminus(embed_heis(h(p)))


@given(st.dictionaries(odd, st.integers(-5, 5), max_size=3), st.integers(-3, 3))
def test_render_round_trip(terms, unit):
    a = HeisElement(terms, unit)
    assert parse_heis(render_heis(a)) == a


def test_bracket_in_parser():
    assert parse_heis("[h[1/2], h[-1/2]]").unit == Fraction(1, 2)
