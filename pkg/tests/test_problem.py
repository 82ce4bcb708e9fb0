import pytest
from hypothesis import given
from hypothesis import strategies as st

from strategies import polynomials
from itersocle.instances import FIXTURE_TEXT, fixture_ideal
from itersocle.matrices import PolyMatrix
from itersocle.problem import ParseError, ProblemFile, format_problem, parse_polynomial, parse_problem
from itersocle.ring import variables

x, y = variables(2)


def test_parse_examples():
    p = parse_problem("ring vars=x,y\nideal\nx^2\ny^2")
    assert p.kind == "ideal" and p.generators == [x**2, y**2]
    assert parse_problem(FIXTURE_TEXT).ideal() == fixture_ideal()
    m = parse_problem("ring vars=x,y\nmatrix rows=2 cols=1\ny^2\n-x^2")
    assert m.matrix.rows == ((y**2,), (-(x**2),))


def test_comments_params_and_rationals():
    p = parse_problem("# header\nring vars=x,y\nparams s=2 n=3\nideal\n1/2*x^2 - 3*x*y  # trailing\n")
    assert p.params == {"s": 2, "n": 3}
    assert p.generators == [parse_polynomial("1/2*x^2 - 3*x*y", ("x", "y"))]


@pytest.mark.parametrize(
    "text,line,column,message",
    [
        ("ring vars=x,y\nideal\nx^2 + z", 3, 7, "undeclared variable"),
        ("ring vars=x,y\nideal\nx^", 3, 3, "malformed exponent"),
        ("ring vars=x,y\nideal\ny^0", 3, 3, "malformed exponent"),
        ("ring vars=x,y\nideal\n3/0*x", 3, 3, "zero denominator"),
    ],
)
def test_parse_errors_carry_position(text, line, column, message):
    with pytest.raises(ParseError) as exc:
        parse_problem(text)
    assert exc.value.line == line
    assert exc.value.column == column
    assert message in exc.value.message


def test_structural_errors():
    for bad in ("", "ideal\nx", "ring vars=x,x\nideal\nx", "ring vars=x\nideal", "ring vars=x\nmatrix rows=2 cols=1\nx"):
        with pytest.raises(ParseError):
            parse_problem(bad)


@given(st.lists(polynomials(), min_size=1, max_size=4).filter(lambda gs: all(gs)), st.booleans())
def test_round_trip(gens, as_matrix):
    if as_matrix:
        p = ProblemFile(("x", "y"), "matrix", [], PolyMatrix([[g] for g in gens], 2), {"s": 2})
    else:
        p = ProblemFile(("x", "y"), "ideal", gens, None, {})
    q = parse_problem(format_problem(p))
    assert q.kind == p.kind and q.params == p.params
    if as_matrix:
        assert q.matrix.rows == p.matrix.rows
    else:
        assert q.generators == p.generators
