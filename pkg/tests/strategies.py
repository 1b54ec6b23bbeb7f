"""Shared hypothesis strategies for exact rationals and polynomials."""
from fractions import Fraction

import hypothesis.strategies as st

from tepperlab import Polynomial


def rationals(bound: int = 100, max_denominator: int = 9) -> st.SearchStrategy[Fraction]:
    return st.fractions(
        min_value=Fraction(-bound), max_value=Fraction(bound), max_denominator=max_denominator
    )


def polynomials(max_degree: int = 8) -> st.SearchStrategy[Polynomial]:
    return st.lists(rationals(), min_size=0, max_size=max_degree + 1).map(
        lambda coeffs: Polynomial(tuple(coeffs))
    )


def nonzero_polynomials(max_degree: int = 8) -> st.SearchStrategy[Polynomial]:
    return polynomials(max_degree).filter(lambda p: not p.is_zero())
