"""Hypothesis strategies for small exact polynomials."""
from fractions import Fraction

from hypothesis import strategies as st

from solvpair.exactalg import Poly

small_rats = st.fractions(min_value=-5, max_value=5, max_denominator=6)
coeffs = st.integers(-3, 3).filter(bool).map(Fraction)


@st.composite
def polys(draw, nvars, max_degree=3, max_terms=4):
    k = draw(st.integers(0, max_terms))
    terms = {}
    for _ in range(k):
        e = draw(st.lists(st.integers(0, max_degree), min_size=nvars, max_size=nvars))
        while sum(e) > max_degree:
            i = e.index(max(e))
            e[i] -= 1
        terms[tuple(e)] = draw(coeffs)
    return Poly(nvars, terms)
