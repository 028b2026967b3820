"""Hypothesis strategies shared across the suite."""

from fractions import Fraction

from hypothesis import strategies as st

from newtcomm import BiPoly, LaurentPoly, PlanarDerivation, UniPoly

rationals = st.fractions(min_value=Fraction(-4), max_value=Fraction(4),
                         max_denominator=3)


def unipolys(max_deg: int = 4):
    return st.lists(rationals, min_size=0, max_size=max_deg + 1).map(UniPoly)


def bipolys(max_ydeg: int = 3, max_xdeg: int = 3):
    return st.lists(unipolys(max_xdeg), min_size=0,
                    max_size=max_ydeg + 1).map(BiPoly)


def laurentpolys(t: int = 2, span: int = 5):
    return st.dictionaries(st.integers(-span, span), rationals,
                           max_size=4).map(lambda d: LaurentPoly(t, d))


def derivations(max_ydeg: int = 2, max_xdeg: int = 2):
    return st.builds(PlanarDerivation, bipolys(max_ydeg, max_xdeg),
                     bipolys(max_ydeg, max_xdeg))
