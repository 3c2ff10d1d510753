from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import odd_keys
from wminus.grammar import ParseError
from wminus.wenv import (
    C,
    W00,
    EnvElement,
    env_bracket,
    multiply,
    parse_env,
    pbw_normal_form,
    quotient_reduce,
    render_env,
)

gens = st.one_of(odd_keys, st.just(C), st.just(W00))


def g(j, l):
    return EnvElement.generator((j, l))


def test_normal_form_examples():
    assert pbw_normal_form([(1, 0), (-1, 0)]) == EnvElement({((-1, 0), (1, 0)): 1, (C,): 1})
    assert pbw_normal_form([(-1, 0), (-3, 0)]) == EnvElement({((-3, 0), (-1, 0)): 1})
    assert pbw_normal_form([(1, 0), (1, 0)]) == EnvElement({((1, 0), (1, 0)): 1})


def test_multiply_examples():
    x = g(0, 3)
    assert multiply(EnvElement.unit(), x) == x
    assert multiply(g(1, 0), g(-1, 0)) - multiply(g(-1, 0), g(1, 0)) == EnvElement.generator(C)
    # 3 w[1,2] + 3 w[1,1] + w[1,0] = 3 b[1,2] + 1/4 b[1,0]
    expected = g(1, 2) * 3 + g(1, 0) * Fraction(1, 4)
    assert multiply(g(0, 3), g(1, 0)) - multiply(g(1, 0), g(0, 3)) == expected


def test_quotient_examples():
    assert quotient_reduce(multiply(EnvElement.generator(C), g(-1, 0))) == g(-1, 0)
    assert quotient_reduce(EnvElement.generator(W00)).is_zero()
    nf = pbw_normal_form([(1, 0), (-1, 0)])
    assert quotient_reduce(nf) == EnvElement({((-1, 0), (1, 0)): 1, (): 1})


def test_env_bracket_examples():
    x = g(0, 3)
    assert env_bracket(x, x).is_zero()
    assert env_bracket(g(1, 0), g(-1, 0)) == EnvElement.unit()
    # t^-1 ((D-1)^3 - D^3) has leading term -3 t^-1 D^2
    lead = env_bracket(g(0, 3), g(-1, 0))
    assert lead.terms[((-1, 2),)] == -3


@given(gens, gens, gens)
def test_confluence(a, b, c):
    x, y, z = (EnvElement.generator(t) for t in (a, b, c))
    assert multiply(multiply(x, y), z) == multiply(x, multiply(y, z))


@given(st.lists(gens, min_size=1, max_size=4))
def test_normal_form_is_sorted_and_idempotent(word):
    nf = pbw_normal_form(word)
    again = EnvElement()
    for wd, c in nf.terms.items():
        again = again + pbw_normal_form(wd, c)
    assert again == nf


@given(st.lists(gens, min_size=1, max_size=3), st.integers(-3, 3))
def test_render_round_trip(word, c):
    e = pbw_normal_form(word, c)
    assert parse_env(render_env(e)) == e


def test_parse_rejects_non_members():
    with pytest.raises(ParseError):
        parse_env("w[2,1]")
