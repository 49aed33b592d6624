import csv
import math

import pytest

from zeonperm.derangements import (
    A, A_from_alternating, A_from_arrangements, A_table_recurrence, D, D_from_derangements,
    D_incl_excl, D_table_recurrence, arrangement_total, arrangements_containing, count_triangle,
    derangement_number, deranged_permutations, oracle_arrangement_count, oracle_deranged_count,
    specialized_spectrum,
)
from zeonperm.moments import P_triangle

# first columns, frozen from an independent recurrence:
# d_n = (n-1)(d_{n-1} + d_{n-2}),  a_n = n a_{n-1} + 1
DERANGEMENTS = [1, 0, 1, 2, 9, 44, 265, 1854, 14833, 133496]
ARRANGEMENTS = [1, 2, 5, 16, 65, 326, 1957, 13700, 109601, 986410]


def test_frozen_columns_follow_recurrences():
    for n in range(2, 10):
        assert DERANGEMENTS[n] == (n - 1) * (DERANGEMENTS[n - 1] + DERANGEMENTS[n - 2])
    for n in range(1, 10):
        assert ARRANGEMENTS[n] == n * ARRANGEMENTS[n - 1] + 1


def test_first_columns():
    assert [derangement_number(n) for n in range(10)] == DERANGEMENTS
    assert [arrangement_total(n) for n in range(10)] == ARRANGEMENTS


def test_triangles_against_fixture(data_dir):
    for kind, name in (("derangement", "derangement_triangle.csv"),
                       ("arrangement", "arrangement_triangle.csv")):
        with open(data_dir / name) as fh:
            table = [[int(v) for v in r] for r in csv.reader(fh)]
        assert count_triangle(kind, 9).padded() == table


def test_all_formulas_agree():
    Dt, At = D_table_recurrence(9), A_table_recurrence(9)
    P = P_triangle(9)
    for n in range(10):
        for ell in range(n + 1):
            assert D(n, ell) == D_incl_excl(n, ell) == D_from_derangements(n, ell) == Dt[n][ell]
            assert A(n, ell) == A_from_arrangements(n, ell) == A_from_alternating(n, ell) == At[n][ell]
            assert P[n, ell].evaluate(-1, 1) == D(n, ell)
            assert P[n, ell].evaluate(1, 1) == A(n, ell)


def test_last_column_is_factorial():
    assert all(D(n, n) == A(n, n) == math.factorial(n) for n in range(10))


def test_worked_lists_n3():
    def one_line(p):
        return "".join(str(i + 1) for i in p)

    assert sorted(map(one_line, deranged_permutations(3, 0))) == ["231", "312"]
    assert sorted(map(one_line, deranged_permutations(3, 1))) == ["213", "231", "312"]
    assert sorted(map(one_line, deranged_permutations(3, 2))) == ["213", "231", "312", "321"]
    # nothing is deranged for l = 3, so all six permutations count
    assert len(list(deranged_permutations(3, 3))) == 6 == D(3, 3)
    assert sorted(map(one_line, arrangements_containing(3, 2))) == sorted(
        ["12", "21", "123", "132", "213", "231", "312", "321"])
    assert oracle_arrangement_count(3, 1) == 11


@pytest.mark.parametrize("n", range(9))
def test_oracles(n):
    for ell in range(n + 1):
        assert oracle_arrangement_count(n, ell) == A(n, ell)
        assert oracle_deranged_count(n, ell) == D(n, ell)


def test_oracle_n9_derangements():
    assert all(oracle_deranged_count(9, ell) == D(9, ell) for ell in (0, 4, 9))


def test_enumeration_bounds_and_ranges():
    with pytest.raises(ValueError):
        list(deranged_permutations(10, 0))
    with pytest.raises(ValueError):
        list(arrangements_containing(9, 0))
    with pytest.raises(ValueError):
        D(3, 4)
    with pytest.raises(ValueError):
        specialized_spectrum("other", 4, 2)


def test_knight_move_spectra_n5_l3():
    d = [(e.alpha, e.eigenvalue, e.multiplicity) for e in specialized_spectrum("derangement", 5, 3)]
    a = [(e.alpha, e.eigenvalue, e.multiplicity) for e in specialized_spectrum("arrangement", 5, 3)]
    assert d == [(0, 32, 1), (1, -3, 4), (2, 0, 5)]
    assert a == [(0, 106, 1), (1, 11, 4), (2, 2, 5)]
