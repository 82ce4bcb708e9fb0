import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import P
from strategies import polynomials
from itersocle.determinantal import (
    delta_split,
    hb_delta,
    hb_psi,
    hb_psi_minors,
    psi_split,
    verify_lower_minor_containment,
)
from itersocle.errors import AlgebraError
from itersocle.groebner import Ideal, ideal_equal, max_ideal_power
from itersocle.instances import fixture_ideal, linear_sharpness_matrix, random_hb_matrix
from itersocle.matrices import PolyMatrix, det, maximal_minors, minors, signed_maximal_minors
from itersocle.report import COMPUTED, ERROR, PASS
from itersocle.resolution import minimal_free_resolution
from itersocle.ring import Polynomial, variables

x, y = variables(2)
Z = Polynomial.zero(2)


def worked():
    return PolyMatrix([[P("y^2")], [P("-x^2")]], 2)


def fixture_phi2():
    return PolyMatrix(minimal_free_resolution(fixture_ideal()).phi(2), 2)


def test_determinant_examples():
    assert det(PolyMatrix([[x, y], [y, x]], 2)) == P("x^2 - y^2")
    assert minors(PolyMatrix([[x, y]], 2), 0).is_unit()
    M = PolyMatrix([[P("x^2"), P("y^2"), Z], [Z, P("x^2"), P("y^2")]], 2)
    assert ideal_equal(minors(M, 2), Ideal([P("x^4"), P("x^2*y^2"), P("y^4")], 2))


def test_signed_minor_convention():
    # for a column the maximal minors are the entries of the other rows
    col = PolyMatrix([[y], [-x]], 2)
    assert signed_maximal_minors(col) == [-x, -y]
    assert maximal_minors(col) == [-x, y]


def test_delta_worked_example():
    res = hb_delta(worked(), 2)
    assert res.deltas == {(1, 1): y, (1, 2): x}
    assert ideal_equal(res.ideal, max_ideal_power(1, 2))
    assert res.agrees


def test_delta_maximal_ideal():
    res = hb_delta(PolyMatrix([[y], [-x]], 2), 1)
    assert res.deltas[(1, 1)] == Polynomial.one(2)
    assert res.ideal.is_unit() and res.agrees


def test_delta_fixture():
    res = hb_delta(fixture_phi2(), 2)
    assert len(res.deltas) == 4
    assert res.agrees


def test_delta_errors():
    with pytest.raises(AlgebraError, match="entries must lie in m\\^s"):
        hb_delta(PolyMatrix([[y], [-x]], 2), 2)
    with pytest.raises(AlgebraError, match="n x \\(n-1\\)"):
        hb_delta(PolyMatrix([[x, y]], 2), 1)


def test_psi_worked_examples():
    psi = hb_psi(worked(), 2)
    one = Polynomial.one(2)
    assert psi.rows == ((Z, Z, one), (-one, Z, Z), (-y, x, Z), (Z, -y, x))
    psi1 = hb_psi(PolyMatrix([[y], [-x]], 2), 1)
    assert psi1.rows == ((Z, one), (-one, Z), (-y, x))
    assert hb_psi(fixture_phi2(), 2).shape == (7, 6)


def test_psi_minors_worked_examples():
    psi = hb_psi(worked(), 2)
    main, minimal = hb_psi_minors(psi, worked(), 2)
    assert main.status == PASS
    assert {m.monic() for m in signed_maximal_minors(psi)} == {P("x^2"), P("y^2"), y, x}
    assert minimal.status == COMPUTED
    assert minimal.payload["minimal_generators"] == 2 and not minimal.payload["minimal"]
    main, minimal = hb_psi_minors(hb_psi(worked(), 1), worked(), 1)
    assert main.status == PASS
    assert minimal.payload["minimal_generators"] == 3 and minimal.payload["minimal"]
    main, minimal = hb_psi_minors(hb_psi(fixture_phi2(), 2), fixture_phi2(), 2)
    assert main.status == PASS and minimal.status == COMPUTED


@given(st.lists(polynomials(max_exp=5), min_size=1, max_size=3), st.integers(1, 3), st.data())
def test_split_identities(entries, s, data):
    # keep only monomials of order >= s so the splits are defined
    column = [Polynomial({m: c for m, c in f.items() if sum(m) >= s}, 2) for f in entries]
    a = data.draw(st.integers(1, s))
    eta, xi = delta_split(column, s, a)
    for f, e, k in zip(column, eta, xi):
        assert x ** (s + 1 - a) * e + y**a * k == f
    slots = psi_split(column, s)
    for r, f in enumerate(column):
        assert sum((x ** (s - j) * y**j * slots[j][r] for j in range(s + 1)), Z) == f


@settings(max_examples=10)
@given(st.integers(0, 10**6), st.sampled_from([2, 3]), st.integers(1, 2))
def test_psi_complex_and_sign_rule(seed, columns, s):
    phi = random_hb_matrix(random.Random(seed), columns, s)
    psi = hb_psi(phi, s)
    row = PolyMatrix([signed_maximal_minors(psi)], 2)
    assert (row @ psi).is_zero()
    main, _ = hb_psi_minors(psi, phi, s)
    assert main.status == PASS


@pytest.mark.parametrize("n", [2, 3])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_block_determinant_folding(n, r):
    rng = random.Random(100 * n + r)

    def rp():
        return Polynomial({(rng.randint(0, 2), rng.randint(0, 2)): rng.randint(-3, 3) for _ in range(2)}, 2)

    eps = [[rp() for _ in range(n - 1)] for _ in range(n)]
    mu = [[rp() for _ in range(r + 1)] for _ in range(n)]
    top = [eps[i] + mu[i] for i in range(n)]
    bottom = []
    for k in range(r):
        row = [Z] * (n + r)
        row[n - 1 + k], row[n + k] = -y, x
        bottom.append(row)
    folded = [sum((x ** (r - j) * y**j * mu[i][j] for j in range(r + 1)), Z) for i in range(n)]
    assert det(PolyMatrix(top + bottom, 2)) == det(PolyMatrix([eps[i] + [folded[i]] for i in range(n)], 2))


@pytest.mark.parametrize("shape,n", [((2, 2), 2), ((2, 3), 2), ((3, 3), 3)])
def test_derivative_of_minors_lies_in_lower_minors(shape, n):
    rows, cols = shape
    nv = rows * cols
    Y = PolyMatrix([[Polynomial.variable(r * cols + c, nv) for c in range(cols)] for r in range(rows)], nv)
    lower = minors(Y, n - 1)
    for m in minors(Y, n).gens:
        for v in range(nv):
            assert lower.contains(m.partial(v))


def test_lower_minor_examples():
    M = PolyMatrix([[P("x^2"), P("y^2"), Z], [Z, P("x^2"), P("y^2")]], 2)
    assert verify_lower_minor_containment(M, 2, 2).status == PASS
    assert verify_lower_minor_containment(M, 1, 2).status == PASS
    r = verify_lower_minor_containment(M, 2, 3)
    assert r.status == ERROR and "m^3" in r.payload["violated"]
    assert verify_lower_minor_containment(M, 3, 1).status == ERROR


@pytest.mark.parametrize("n", [2, 3, 4])
def test_sharpness(n):
    M = linear_sharpness_matrix(n)
    assert ideal_equal(minors(M, n), max_ideal_power(n, 2))
    assert ideal_equal(minors(M, n - 1), max_ideal_power(n - 1, 2))
    assert verify_lower_minor_containment(M, n, 1).status == PASS
    # against I_n itself the containment breaks
    assert not minors(M, n).contains_ideal(max_ideal_power(n - 1, 2))
