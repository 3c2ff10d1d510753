from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from strategies import lie_elements, monomial_keys
from wminus.wlie import (
    DPolynomial,
    bracket,
    central,
    cocycle_psi,
    is_in_wminus,
    parse_lie,
    render_lie,
    shift_poly,
    sigma_apply,
    w,
    wminus_basis_element,
)

D = DPolynomial.monomial
ONE_POLY = DPolynomial([1])


def test_shift_poly():
    assert shift_poly(D(1), 1) == DPolynomial([1, 1])
    assert shift_poly(D(2), -1) == DPolynomial([1, -2, 1])
    assert shift_poly(D(3), 2) == DPolynomial([8, 12, 6, 1])


def test_cocycle_values():
    assert cocycle_psi(1, ONE_POLY, -1, ONE_POLY) == 1
    assert cocycle_psi(2, D(1), -2, D(1)) == -1
    assert cocycle_psi(2, D(1), 3, D(1)) == 0


def test_generator_vectors():
    assert bracket(w(1, 0), w(0, 3)) == w(1, 2, -3) + w(1, 1, -3) - w(1, 0)
    assert bracket(w(-2, 1) - w(-2, 0), w(1, 0)) == w(-1, 0)


def test_central_is_central():
    assert bracket(central(), w(5, 2)).is_zero()


def test_sigma_examples():
    x = w(2, 1) + w(2, 0)
    assert sigma_apply(x) == -x
    assert -sigma_apply(w(-1, 0)) == w(-1, 0)


def test_membership():
    assert not is_in_wminus(w(2, 1))
    assert is_in_wminus(w(2, 1) + w(2, 0))
    assert is_in_wminus(w(0, 3))


def test_basis_elements():
    assert wminus_basis_element(2, 1) == w(2, 1) + w(2, 0)
    assert wminus_basis_element(-1, 0) == w(-1, 0)
    assert wminus_basis_element(1, 2) == w(1, 2) + w(1, 1) + w(1, 0, Fraction(1, 4))


@given(lie_elements, lie_elements)
def test_antisymmetry(x, y):
    assert (bracket(x, y) + bracket(y, x)).is_zero()


@given(monomial_keys, monomial_keys, monomial_keys)
def test_jacobi(a, b, c):
    x, y, z = w(*a), w(*b), w(*c)
    total = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
    assert total.is_zero()


@given(lie_elements)
def test_sigma_involution(x):
    assert sigma_apply(sigma_apply(x)) == x


@given(st.integers(-4, 4), st.integers(0, 4), st.integers(-4, 4), st.integers(0, 4))
def test_closure(j1, l1, j2, l2):
    if (j1 + l1) % 2 == 0 or (j2 + l2) % 2 == 0:
        return
    assert is_in_wminus(bracket(wminus_basis_element(j1, l1), wminus_basis_element(j2, l2)))


@given(lie_elements)
def test_render_round_trip(x):
    assert parse_lie(render_lie(x)) == x


def test_render_order():
    assert render_lie(bracket(w(1, 0), w(0, 3))) == "-3*w[1,2] + -3*w[1,1] + -1*w[1,0]"
