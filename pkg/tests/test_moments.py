import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from zeonperm.algebra import BiPoly, S, T
from zeonperm.moments import (
    M_matrix, P_init, P_triangle, Q, Triangle, h, h_forms, pst_identity2, pst_identity3,
    q_asymptotic_ratio,
)
from zeonperm.permanents import permanent

nm = st.tuples(st.integers(0, 8), st.integers(0, 8))


def h_by_integration(n, m):
    # moment of (s + t y)^n (t y)^m against e^{-y} on [0, inf)
    s, t, y = sympy.symbols("s t y", positive=True)
    val = sympy.integrate(sympy.expand((s + t * y) ** n * (t * y) ** m) * sympy.exp(-y),
                          (y, 0, sympy.oo))
    poly = sympy.Poly(sympy.expand(val), s, t)
    return BiPoly({k: int(c) for k, c in poly.terms()})


@pytest.mark.parametrize("n,m", [(0, 0), (2, 1), (3, 2), (4, 4), (5, 1)])
def test_h_is_the_exponential_moment(n, m):
    assert h(n, m) == h_by_integration(n, m)


@given(nm)
def test_h_forms_agree(nm_):
    n, m = nm_
    forms = h_forms(n + m, m)
    assert all(f == h(n, m) for f in forms)
    assert h(n, m).is_homogeneous(n + m)


@given(nm)
def test_h_shift_recurrence(nm_):
    # (s + t y)^{n+1} (t y)^m = s (s+ty)^n (ty)^m + (s+ty)^n (ty)^{m+1}
    n, m = nm_
    assert h(n + 1, m) == S * h(n, m) + h(n, m + 1)


def test_h_rejects_negative():
    with pytest.raises(ValueError):
        h(-1, 0)
    with pytest.raises(ValueError):
        h_forms(2, 3)


def test_P_triangle_rows():
    tri = P_triangle(3)
    assert [p.to_str(star=False) for p in tri.rows[3]] == [
        "s^3+3s^2t+6st^2+6t^3", "s^2t+4st^2+6t^3", "2st^2+6t^3", "6t^3"]
    assert tri[2, 1] == S * T + 2 * T**2
    assert tri.nmax == 3


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 6).flatmap(lambda n: st.tuples(st.just(n), st.integers(0, n))))
def test_P_is_permanent_of_M(nl):
    n, ell = nl
    assert permanent(M_matrix(n, ell)) == P_triangle(6)[n, ell] == h(n - ell, ell)


def test_binomial_identities():
    for n in range(9):
        assert pst_identity3(n) == S**n
        for ell in range(n + 1):
            assert pst_identity2(n, ell) == h(n - ell, ell)
        assert P_init(n) == h(n, 0)


def test_triangle_layout():
    tri = P_triangle(2).specialize(-1, 1)
    assert tri.padded() == [[1, 0, 0], [0, 1, 0], [1, 1, 2]]
    assert tri.to_csv() == "1,0,0\n0,1,0\n1,1,2\n"
    assert P_triangle(1).to_json_rows() == [["1"], ["s+t", "t"]]
    with pytest.raises(ValueError):
        Triangle(((1,), (1,)))


def test_Q_values():
    assert Q(3, -1) == S**3
    assert Q(2, 0) == h(2, 0)
    assert Q(2, Fraction(1, 2)) == h(2, 0) + 2 * Fraction(1, 2) * h(1, 1) + Fraction(1, 4) * h(0, 2)


@pytest.mark.parametrize("x0,target", [(0, math.e), (1, math.exp(0.5)), (3, math.exp(0.25))])
def test_asymptotic_ratio(x0, target):
    assert q_asymptotic_ratio(24, 1, 1, x0) == pytest.approx(target, abs=1e-9)


@given(st.integers(1, 3), st.integers(1, 3))
def test_asymptotic_ratio_general_point(s0, t0):
    assert q_asymptotic_ratio(30, s0, t0, 0) == pytest.approx(math.exp(s0 / t0), rel=1e-9)


def test_asymptotic_ratio_guards():
    with pytest.raises(ZeroDivisionError):
        q_asymptotic_ratio(5, 1, 0, 0)
    with pytest.raises(ZeroDivisionError):
        q_asymptotic_ratio(5, 1, 1, -1)
