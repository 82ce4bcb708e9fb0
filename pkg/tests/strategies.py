"""Hypothesis strategies for small exact polynomials."""

from hypothesis import strategies as st

from itersocle.ring import Polynomial

coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4).filter(lambda c: c != 0)


def monomials(nvars, max_exp=4):
    return st.tuples(*[st.integers(0, max_exp)] * nvars)


def polynomials(nvars=2, max_terms=4, max_exp=4):
    return st.dictionaries(monomials(nvars, max_exp), coeffs, max_size=max_terms).map(
        lambda t: Polynomial(t, nvars)
    )


def pure_power_polys(i, a, nvars=2):
    """Polynomials in ``x_i^a`` alone."""
    return st.dictionaries(st.integers(0, 3), coeffs, max_size=3).map(
        lambda t: Polynomial({tuple(a * k if j == i else 0 for j in range(nvars)): c for k, c in t.items()}, nvars)
    )
