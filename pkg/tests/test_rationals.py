from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from youngcalc.rationals import (SingularSystemError, format_rational, nullspace,
                                 parse_rational, rank, solve)

fracs = st.fractions(-20, 20, max_denominator=9)


def test_format():
    assert format_rational(64) == "64/1"
    assert format_rational(Fraction(-2, 4)) == "-1/2"
    assert parse_rational("6/4") == Fraction(3, 2)
    assert parse_rational("-3") == -3
    with pytest.raises(ValueError):
        parse_rational("1/0")


@given(fracs)
def test_roundtrip(x):
    assert parse_rational(format_rational(x)) == x


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(fracs, min_size=n, max_size=n), min_size=n, max_size=n),
    st.lists(fracs, min_size=n, max_size=n))))
def test_solve(system):
    a, x = system
    b = [sum(r[j] * x[j] for j in range(len(x))) for r in a]
    if rank(a) < len(a):
        with pytest.raises(SingularSystemError):
            solve(a, b)
    else:
        assert solve(a, b) == x


@given(st.integers(1, 4), st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(fracs, min_size=c, max_size=c), min_size=1, max_size=4)))
def test_nullspace(_, rows):
    ncols = len(rows[0])
    basis = nullspace(rows, ncols)
    assert len(basis) == ncols - rank(rows)
    for v in basis:
        assert all(sum(r[j] * v[j] for j in range(ncols)) == 0 for r in rows)
    if basis:
        assert rank(basis) == len(basis)
