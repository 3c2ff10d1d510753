import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from wminus.fock import (
    FockVector,
    GradedIntegerModel,
    act_env,
    act_lie,
    from_maya,
    hops,
    maya,
    parse_fock,
    partitions,
    partitions_upto,
    render_fock,
    representation_defects,
)
from wminus.grammar import ParseError
from wminus.wenv import EnvElement, multiply, pbw_normal_form
from wminus.wlie import bracket, w

VAC = FockVector.basis(())
partition_st = st.integers(0, 7).flatmap(lambda n: st.sampled_from(partitions(n)))


def head(s, n):
    return list(itertools.islice(iter(s), n))


def test_maya_examples():
    assert head(maya(()), 3) == [-1, -2, -3]
    assert head(maya((1,)), 3) == [0, -2, -3]
    assert head(maya((2, 1)), 4) == [1, -1, -3, -4]


@given(partition_st)
def test_maya_round_trip(p):
    assert from_maya(head(maya(p), len(p) + 3)) == p


def test_partition_counts():
    # number of partitions of n, n = 0..10
    assert [len(partitions(n)) for n in range(11)] == [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_action_examples():
    assert act_lie(w(0, 3), VAC).is_zero()
    assert act_lie(w(1, 0), FockVector.basis((1,))) == VAC
    assert act_lie(w(-1, 0), VAC) == FockVector.basis((1,))
    v = FockVector.basis((2, 1)) * 3
    assert act_env(EnvElement.unit(), v) == v


def test_two_raising_steps():
    b = EnvElement.generator((-1, 0))
    out = act_env(multiply(b, b), VAC)
    assert set(out.terms) == {(2,), (1, 1)}
    assert render_fock(out) == "1*[1,1] + 1*[2]"


def test_vacuum_commutator():
    up, dn = EnvElement.generator((1, 0)), EnvElement.generator((-1, 0))
    comm = act_env(up, act_env(dn, VAC)) - act_env(dn, act_env(up, VAC))
    assert comm == VAC


def test_hops_need_nonzero_degree():
    with pytest.raises(ValueError):
        hops(0, ())


@given(
    st.tuples(st.integers(-3, 3), st.integers(0, 3)),
    st.tuples(st.integers(-3, 3), st.integers(0, 3)),
    partition_st,
)
def test_commutator_identity(a, b, p):
    x, y = w(*a), w(*b)
    v = FockVector.basis(p)
    lhs = act_lie(x, act_lie(y, v)) - act_lie(y, act_lie(x, v))
    assert lhs == act_lie(bracket(x, y), v)


@given(st.lists(st.sampled_from([(1, 0), (-1, 0), (0, 1), (2, 1), (-2, 1), (0, 3)]), min_size=1, max_size=3),
       partition_st)
def test_env_action_factorizes(word, p):
    v = FockVector.basis(p)
    step = v
    for g in reversed(word):
        step = act_env(EnvElement.generator(g), step)
    assert act_env(pbw_normal_form(word), v) == step


def test_integer_model_matches_exact_path():
    model = GradedIntegerModel()
    for (k, l), n in itertools.product([(1, 0), (-2, 3), (0, 2), (3, 1)], range(6)):
        if n - k < 0:
            continue
        block = model.block(k, l, n)
        src, dst = model.index(n), model.index(n - k)
        for p, col in src.items():
            out = act_lie(w(k, l), FockVector.basis(p))
            for q, row in dst.items():
                assert int(block[row, col]) == out.terms.get(q, 0)


def test_small_representation_grid():
    assert representation_defects(3, 3, 6) == []


def test_mutated_bracket_is_detected():
    def doubled(x, y):
        z = bracket(x, y)
        return z + type(z)({}, z.central)

    assert representation_defects(2, 2, 4, bracket_fn=doubled)


@given(st.lists(partition_st, min_size=1, max_size=3), st.lists(st.integers(-4, 4), min_size=3, max_size=3))
def test_render_round_trip(parts, coeffs):
    v = FockVector()
    for p, c in zip(parts, coeffs):
        v = v + FockVector.basis(p, c)
    assert parse_fock(render_fock(v)) == v


def test_parse_rejects_non_partition():
    with pytest.raises((ParseError, ValueError)):
        parse_fock("[1,2]")


def test_partitions_upto_is_sorted_by_size():
    sizes = [sum(p) for p in partitions_upto(5)]
    assert sizes == sorted(sizes)
