import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import P
from itersocle.errors import AlgebraError
from itersocle.groebner import Ideal, ideal_equal, ideal_quotient, max_ideal_power
from itersocle.instances import fixture_ideal, random_koszul_element
from itersocle.koszul import (
    KoszulElement,
    connection_defect,
    is_cycle_mod,
    koszul_cycle_generators,
    koszul_differential,
    nabla,
    nabla_tilde,
)
from itersocle.resolution import minimal_free_resolution
from itersocle.ring import Polynomial

ONE = Polynomial.one(2)


def basis(a, J, r=ONE):
    return KoszulElement.basis(a, J, r)


def test_differential_examples():
    v = koszul_differential(basis((1, 1), (0, 1)))
    assert v == basis((1, 1), (1,), P("x")) - basis((1, 1), (0,), P("y"))
    assert koszul_differential(basis((2, 3), (0,))) == basis((2, 3), (), P("x^2"))
    with pytest.raises(AlgebraError):
        koszul_differential(basis((1, 1), ()))


def test_nabla_examples():
    assert nabla(basis((2, 3), (), P("x^5"))) == basis((2, 3), (0,), P("2*x^3"))
    assert nabla(basis((1, 1), (0,), P("7"))).is_zero()
    assert nabla(basis((1, 1), (0,), P("x*y"))) == basis((1, 1), (0, 1), P("-x"))


def test_nabla_tilde_examples():
    assert nabla_tilde(basis((1, 1), (), P("x"))) == basis((1, 1), (0,))
    assert nabla_tilde(basis((1, 1), (0,), P("x"))).is_zero()
    v = basis((1, 1), (0,), P("x*y"))
    assert koszul_differential(nabla_tilde(v)) + nabla_tilde(koszul_differential(v)) == v
    with pytest.raises(AlgebraError, match="K_"):
        nabla_tilde(basis((2, 2), (), P("x*y")))


def test_cycle_generators_complete_intersection():
    I = Ideal([P("x^2"), P("y^2")], 2)
    C = minimal_free_resolution(I)
    (z,) = koszul_cycle_generators(C, (1, 1), 2, modulo=I)
    assert z.degree == 2
    assert z.coefficient((0, 1)).monic() == P("x*y")
    assert is_cycle_mod(z, I)


def test_cycle_generators_fixture():
    I = fixture_ideal()
    C = minimal_free_resolution(I)
    zs = koszul_cycle_generators(C, (1, 1), 2, modulo=I)
    assert len(zs) == 2
    gens = [z.coefficient((0, 1)) for z in zs]
    assert ideal_equal(Ideal(list(I.gens) + gens, 2), ideal_quotient(I, max_ideal_power(1, 2)))


def test_cycle_generators_precondition():
    I = fixture_ideal()
    C = minimal_free_resolution(I)
    with pytest.raises(AlgebraError, match="phi_2"):
        koszul_cycle_generators(C, (1, 3), 2)


@given(st.integers(0, 10**6))
def test_homotopy_on_random_elements(seed):
    v = random_koszul_element(random.Random(seed))
    lhs = koszul_differential(nabla_tilde(v))
    if v.degree > 0:
        lhs = lhs + nabla_tilde(koszul_differential(v))
    assert lhs == v
    if v.degree >= 2:
        assert koszul_differential(koszul_differential(v)).is_zero()


@given(st.integers(0, 10**6), st.lists(st.tuples(st.integers(0, 2), st.integers(0, 2)), min_size=1, max_size=3))
def test_connection_rule(seed, powers):
    v = random_koszul_element(random.Random(seed))
    a = v.a
    d = len(a)
    f = Polynomial({tuple(a[i] * (p[i % 2]) for i in range(d)): 1 for p in powers}, d)
    assert connection_defect(f, v).is_zero()


def test_connection_rule_needs_pure_powers():
    # x is not a polynomial in x^2, and the rule visibly breaks
    v = basis((2, 1), (), P("x"))
    assert not connection_defect(P("x"), v).is_zero()
