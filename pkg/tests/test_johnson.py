import itertools
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from zeonperm.algebra import BiPoly, charpoly_exact
from zeonperm.derangements import JohnsonReadOffError, read_off_johnson_basis
from zeonperm.johnson import (
    assemble_sItJ, eigenvalue_sItJ, expand_sItJ, johnson_distance, js_eigenvalue, js_matrix,
    multiplicity, rank_subset, rowsum_poly, spectrum_sItJ, subset_label, subsets, trace_poly,
    unrank_subset,
)
from zeonperm.matrix import ExactMatrix
from zeonperm.permanents import zeon_power_perm

n_ell = st.integers(0, 9).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n)))


@given(n_ell)
def test_rank_unrank_round_trip(ne):
    n, ell = ne
    subs = subsets(n, ell)
    assert len(subs) == math.comb(n, ell)
    for r, S_ in enumerate(subs):
        assert rank_subset(n, ell, S_) == r
        assert unrank_subset(n, ell, r) == S_


def test_lex_order_labels():
    assert [subset_label(S_) for S_ in subsets(4, 2)] == ["12", "13", "14", "23", "24", "34"]
    assert subset_label((0, 10)) == "{1,11}"
    with pytest.raises(ValueError):
        rank_subset(4, 2, (0, 4))
    with pytest.raises(ValueError):
        unrank_subset(4, 2, 6)


def test_johnson_matrices():
    assert johnson_distance((0, 1), (1, 2)) == 1
    with pytest.raises(ValueError):
        johnson_distance((0,), (0, 1))
    # JS_1 of J(4,2) is the octahedron graph: 4-regular
    A1 = js_matrix(4, 2, 1)
    assert all(r == BiPoly.const(4) for r in A1.row_sums())
    with pytest.raises(ValueError):
        js_matrix(4, 2, 3)


@pytest.mark.parametrize("n,ell", [(4, 2), (5, 2), (6, 3), (7, 3), (7, 2)])
def test_js_eigenvalues_against_numpy(n, ell):
    kmax = min(ell, n - ell)
    for k in range(kmax + 1):
        A = np.array(js_matrix(n, ell, k).to_int_rows(), dtype=float)
        got = sorted(np.round(np.linalg.eigvalsh(A)).astype(int).tolist())
        want = sorted(itertools.chain.from_iterable(
            [js_eigenvalue(n, ell, k, a)] * multiplicity(n, a) for a in range(kmax + 1)))
        assert got == want


def test_valencies():
    for n in range(1, 8):
        for ell in range(n + 1):
            for k in range(min(ell, n - ell) + 1):
                assert js_eigenvalue(n, ell, k, 0) == math.comb(ell, k) * math.comb(n - ell, k)


@pytest.mark.parametrize("n", range(1, 7))
def test_assembled_equals_zeon_power(n):
    Y = ExactMatrix.ones(n).shifted()
    for ell in range(n + 1):
        assert assemble_sItJ(n, ell) == zeon_power_perm(Y, ell)


def test_expansion_coefficients_n4_l2():
    got = [(k, p.to_str(star=False)) for k, p in expand_sItJ(4, 2)]
    assert got == [(0, "s^2+2st+2t^2"), (1, "st+2t^2"), (2, "2t^2")]


@pytest.mark.parametrize("n,ell,s0,t0", [(5, 2, 2, 3), (6, 3, -1, 1), (6, 2, 1, 1), (4, 1, 3, -2)])
def test_specialized_spectrum_matches_charpoly(n, ell, s0, t0):
    M = assemble_sItJ(n, ell).specialize(s0, t0)
    roots, rest = charpoly_exact(M).integer_roots()
    assert rest.degree == 0
    want: dict = {}
    for e in spectrum_sItJ(n, ell, s0, t0):
        want[e.eigenvalue] = want.get(e.eigenvalue, 0) + e.multiplicity
    assert roots == want


def test_spectrum_order_and_n4_example():
    spec = spectrum_sItJ(4, 2)
    assert [e.alpha for e in spec] == [0, 1, 2]
    assert [(e.eigenvalue.to_str(star=False), e.multiplicity) for e in spec] == [
        ("s^2+6st+12t^2", 1), ("s^2+2st", 3), ("s^2", 2)]


def test_trace_and_rowsum_closed_forms():
    for n in range(1, 8):
        for ell in range(n + 1):
            M = assemble_sItJ(n, ell)
            assert M.trace() == trace_poly(n, ell)
            assert set(M.row_sums()) == {rowsum_poly(n, ell)}
            assert eigenvalue_sItJ(n, ell, 0) == rowsum_poly(n, ell)


def test_read_off_johnson_basis():
    M = assemble_sItJ(5, 2)
    basis = read_off_johnson_basis(M, 5, 2)
    assert basis == [js_matrix(5, 2, k) for k in range(3)]
    # I + J at n=4, l=2 has coefficients A_{2,0}=5, A_{2,1}=3, A_{2,2}=2
    IpJ = assemble_sItJ(4, 2).specialize(1, 1)
    assert read_off_johnson_basis(IpJ, 4, 2) == [js_matrix(4, 2, k) for k in range(3)]
    with pytest.raises(JohnsonReadOffError):
        # J - I at n=4, l=2 gives coefficients D_{2,0}=1, D_{2,1}=1, D_{2,2}=2
        read_off_johnson_basis(assemble_sItJ(4, 2).specialize(-1, 1), 4, 2)
    with pytest.raises(ValueError):
        read_off_johnson_basis(ExactMatrix([[1, 2], [3, 4]]), 2, 1)
