import random
from fractions import Fraction

import pytest

from helpers import bareiss_rank
from homcoh.errors import ParseError
from homcoh.exact import (Matrix, in_span, nullspace_basis,
                          rational_from_string, rational_to_string, rref,
                          solve)


def frac_matrix(rows):
    return Matrix.from_rows([[Fraction(x) for x in r] for r in rows])


def test_rational_parsing_round_trip():
    assert rational_from_string("3") == Fraction(3)
    assert rational_from_string("-4/6") == Fraction(-2, 3)
    assert rational_to_string(Fraction(-2, 3)) == "-2/3"
    assert rational_to_string(Fraction(8, 4)) == "2"
    assert rational_to_string(Fraction(0)) == "0"


@pytest.mark.parametrize("bad", ["1/0", "1 /2", " 1", "1/-2", "a", "1.5", ""])
def test_rational_rejects_malformed(bad):
    with pytest.raises(ParseError):
        rational_from_string(bad)


def test_rref_identity():
    m = Matrix.identity(2)
    res = rref(m)
    assert res.reduced == m
    assert res.rank == 2
    assert res.pivot_columns == (0, 1)


def test_rref_single_row():
    m = frac_matrix([[1, 1]])
    res = rref(m)
    assert res.reduced == m
    assert res.rank == 1
    assert res.pivot_columns == (0,)


def test_rref_rank_matches_fraction_free_oracle():
    rng = random.Random(11)
    for _ in range(30):
        m = frac_matrix([[Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3)))
                          for _ in range(5)] for _ in range(3)])
        assert rref(m).rank == bareiss_rank(m)


def test_rref_idempotent():
    rng = random.Random(12)
    for _ in range(20):
        m = frac_matrix([[rng.randint(-3, 3) for _ in range(4)]
                         for _ in range(4)])
        red = rref(m).reduced
        assert rref(red).reduced == red


def test_nullspace_identity_empty():
    assert nullspace_basis(Matrix.identity(2)) == []


def test_nullspace_single_relation():
    basis = nullspace_basis(frac_matrix([[1, 1]]))
    assert basis == [(Fraction(-1), Fraction(1))]


def test_nullspace_random_annihilates():
    rng = random.Random(13)
    for _ in range(20):
        m = frac_matrix([[rng.randint(-3, 3) for _ in range(6)]
                         for _ in range(4)])
        res = rref(m)
        basis = nullspace_basis(m)
        assert len(basis) == 6 - res.rank
        for v in basis:
            assert all(x == 0 for x in m.matvec(v))
        # linear independence
        if basis:
            assert rref(Matrix.from_columns(basis)).rank == len(basis)


def test_solve_identity():
    assert solve(Matrix.identity(2), (3, 5)) == (Fraction(3), Fraction(5))


def test_solve_underdetermined_picks_zero_free_coordinates():
    assert solve(frac_matrix([[1, 1]]), (2,)) == (Fraction(2), Fraction(0))


def test_solve_inconsistent_absent():
    assert solve(frac_matrix([[1], [1]]), (1, 2)) is None


def test_solve_residual_exact():
    rng = random.Random(14)
    for _ in range(20):
        m = frac_matrix([[rng.randint(-3, 3) for _ in range(4)]
                         for _ in range(3)])
        x = tuple(Fraction(rng.randint(-3, 3)) for _ in range(4))
        b = m.matvec(x)
        got = solve(m, b)
        assert got is not None
        assert m.matvec(got) == b


def test_in_span_examples():
    assert in_span([(1, 0)], (0, 0)) == (Fraction(0),)
    assert in_span([(1, 0)], (0, 1)) is None
    coords = in_span([(1, 1), (1, -1)], (2, 0))
    assert coords == (Fraction(1), Fraction(1))


def test_exact_arithmetic_round_trip():
    rng = random.Random(15)
    for _ in range(50):
        a = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        b = Fraction(rng.randint(-10**6, 10**6), rng.randint(1, 10**4))
        assert (a + b) - b == a
