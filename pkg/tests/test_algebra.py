import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from zeonperm.algebra import (
    BiPoly, ONE, PolyParseError, S, T, UniPoly, ZERO, binom, charpoly_exact, det_bareiss,
    eval_2f0, expgf_check, pochhammer,
)
from zeonperm.matrix import ExactMatrix

coeffs = st.one_of(st.integers(-20, 20), st.fractions(max_denominator=6).filter(
    lambda f: abs(f) < 50))
polys = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), coeffs,
                        max_size=6).map(BiPoly)
int_matrices = st.integers(1, 5).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(polys, polys, polys)
def test_ring_laws(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == ZERO
    assert p * ONE == p


@given(polys)
def test_parse_round_trip_both_styles(p):
    assert BiPoly.parse(p.to_str()) == p
    assert BiPoly.parse(p.to_str(star=False)) == p
    assert BiPoly.parse(p.to_str()).to_str() == p.to_str()


@given(polys, polys, st.integers(-5, 5), st.integers(-5, 5))
def test_evaluate_is_a_homomorphism(p, q, s0, t0):
    assert (p * q).evaluate(s0, t0) == p.evaluate(s0, t0) * q.evaluate(s0, t0)
    assert (p + q).evaluate(s0, t0) == p.evaluate(s0, t0) + q.evaluate(s0, t0)


@given(polys)
def test_matches_sympy(p):
    s, t = sympy.symbols("s t")
    ours = sympy.expand(sympy.sympify(p.to_str().replace("^", "**"), locals={"s": s, "t": t}))
    ref = sum((sympy.Rational(c.numerator, c.denominator) if isinstance(c, Fraction) else c)
              * s**a * t**b for (a, b), c in p.terms.items())
    assert sympy.expand(ours - ref) == 0


def test_canonical_order():
    p = BiPoly.parse("2*t^2 + s^2 + 2st")
    assert p.to_str() == "s^2+2*s*t+2*t^2"
    assert p.to_str(star=False) == "s^2+2st+2t^2"
    assert BiPoly.parse("-s+1/2*t").to_str() == "-s+1/2*t"
    assert str(ZERO) == "0" and str(ONE) == "1"


@pytest.mark.parametrize("bad", ["", "s^", "2**s", "x+1", "s t+", "+"])
def test_parse_errors(bad):
    with pytest.raises(PolyParseError):
        BiPoly.parse(bad)


def test_shift_and_degrees():
    p = S**2 * T + 3 * S * T**2
    assert p.is_homogeneous(3)
    assert p.total_degree() == 3
    assert p.shift(-1, 1) == S * T**2 + 3 * T**3
    with pytest.raises(ValueError):
        p.shift(-2, 0)
    assert (S + T).scale_t(2) == S + 2 * T


def test_binom_and_pochhammer():
    assert binom(5, 2) == 10 and binom(5, 6) == 0 and binom(5, -1) == 0
    assert binom(-3, 2) == 6
    assert pochhammer(3, 4) == 3 * 4 * 5 * 6 and pochhammer(-2, 3) == 0


@given(st.integers(0, 10), st.integers(0, 10), st.integers(-3, 3))
def test_2f0_matches_direct_sum(k, b, x):
    a = -k
    want = sum(Fraction(pochhammer(a, j) * pochhammer(b, j) * x**j, math.factorial(j))
               for j in range(k + 1))
    assert eval_2f0(a, b, x) == want


def test_2f0_rejects_nonterminating():
    with pytest.raises(ValueError):
        eval_2f0(1, 1, 1)


@settings(max_examples=60)
@given(int_matrices)
def test_charpoly_against_sympy(rows):
    n = len(rows)
    cp = charpoly_exact(rows)
    lam = sympy.Symbol("x")
    ref = sympy.Matrix(rows).charpoly(lam).all_coeffs()[::-1]
    assert [cp[k] for k in range(n + 1)] == [int(c) for c in ref]
    assert det_bareiss(rows) == int(sympy.Matrix(rows).det())


def test_charpoly_accepts_exact_matrix():
    M = ExactMatrix([[2, 1], [1, 2]])
    assert charpoly_exact(M) == UniPoly.from_roots({1: 1, 3: 1})
    with pytest.raises(ValueError):
        charpoly_exact([[1, 2]])


def test_unipoly_factoring():
    p = UniPoly.from_roots({0: 2, 32: 1, -3: 2})
    roots, rest = p.integer_roots()
    assert roots == {0: 2, 32: 1, -3: 2} and rest == UniPoly.const(1)
    assert p.factor_str("λ") == "λ^2*(λ-32)*(λ+3)^2"


@pytest.mark.parametrize("m", [0, 1, 3])
def test_expgf_check(m):
    from zeonperm.moments import h

    seq = [h(n, m) for n in range(8)]
    assert expgf_check(seq, m, 7)
    assert not expgf_check(seq[:3] + [seq[3] + T**(3 + m)] + seq[4:], m, 7)
    with pytest.raises(ValueError):
        expgf_check(seq, m, 8)
