import math
from fractions import Fraction

from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from strategies import polynomials, pure_power_polys
from itersocle.ring import Polynomial, a_degree_split, compositions, gen_derivative, order, variables


def test_order_examples():
    assert order(P("x^2*y + y^5")) == 3
    assert order(P("x^2*y^2 + y^5")) == 4
    assert order(Polynomial.zero(2)) == math.inf


def test_gen_derivative_examples():
    assert gen_derivative(P("x^5"), 0, 2) == P("2*x^3")
    assert gen_derivative(P("x"), 0, 2).is_zero()
    assert gen_derivative(P("x^3*y^2"), 1, 1) == P("2*x^3*y")


def test_a_degree_split_examples():
    assert a_degree_split(P("x^5*y^4"), (2, 3)) == {3: P("x^5*y^4")}
    assert a_degree_split(P("x + x*y"), (1, 1)) == {1: P("x"), 2: P("x*y")}
    assert a_degree_split(P("x^2 + y^3 + x*y"), (2, 3)) == {1: P("x^2 + y^3"), 0: P("x*y")}


def test_compositions_and_exact_coefficients():
    assert list(compositions(3, 2)) == [(1, 2), (2, 1)]
    assert len(list(compositions(5, 3))) == math.comb(4, 2)
    assert P("1/3*x + 1/6*x") == P("1/2*x")
    assert P("x").lead_coefficient() == Fraction(1)


@given(polynomials(), st.integers(0, 1))
def test_gen_derivative_a1_is_partial(f, i):
    expected = {}
    for m, c in f.items():
        if m[i]:
            m2 = tuple(e - 1 if j == i else e for j, e in enumerate(m))
            expected[m2] = expected.get(m2, 0) + c * m[i]
    assert gen_derivative(f, i, 1) == Polynomial(expected, 2)


@given(polynomials(), polynomials(), st.integers(1, 3))
def test_gen_derivative_leibniz_in_pure_powers(f, h, a):
    # h only in the other variable: plain linearity
    g_other = Polynomial({(0, e1): c for (e0, e1), c in h.items()}, 2)
    assert gen_derivative(g_other * f, 0, a) == g_other * gen_derivative(f, 0, a)


@given(polynomials(), st.integers(1, 3), st.data())
def test_gen_derivative_on_power_multiples(f, a, data):
    g = data.draw(pure_power_polys(0, a))
    # g in k[x^a]: the derivative obeys the Leibniz rule, not plain linearity
    lhs = gen_derivative(g * f, 0, a)
    assert lhs == g * gen_derivative(f, 0, a) + gen_derivative(g, 0, a) * f


@given(polynomials(), st.tuples(st.integers(1, 4), st.integers(1, 4)))
def test_a_degree_split_reassembles(f, a):
    parts = a_degree_split(f, a)
    seen = set()
    total = Polynomial.zero(2)
    for m, part in parts.items():
        mons = set(part.monomials())
        assert not mons & seen
        seen |= mons
        total = total + part
    assert total == f


@given(polynomials(), polynomials(), polynomials())
def test_exact_arithmetic(f, g, h):
    assert (f + g) - g == f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h


def test_variables():
    x, y = variables(2)
    assert (x + y) ** 2 == P("x^2 + 2*x*y + y^2")
