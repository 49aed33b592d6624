import itertools
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from zeonperm.algebra import UniPoly
from zeonperm.groups import (
    GroupTooLarge, OrbitCountMismatch, Permutation, burnside_counts, cycle_index, cycle_type,
    cyclic_gens, dihedral_gens, group_closure, molien_check, orbit_count_ellsets,
    orbit_partition_counts, parse_cycles, parse_generators, per_I_tX, symmetric_gens,
    trivial_gens,
)
from zeonperm.kernels import BACKEND, fixed_subset_counts
from zeonperm.permanents import permanent

perms = st.integers(1, 7).flatmap(lambda n: st.permutations(range(n))).map(Permutation)


def test_parse_and_print_cycles():
    p = parse_cycles("(1 2 3)(4 5)")
    assert p.images == (1, 2, 0, 4, 3)
    assert str(p) == "(1 2 3)(4 5)"
    assert str(parse_cycles("()", 3)) == "()"
    gens = parse_generators("(1 2 3 4),(1 3)")
    assert [g.n for g in gens] == [4, 4]
    with pytest.raises(ValueError):
        parse_cycles("(1 2")
    with pytest.raises(ValueError):
        parse_cycles("(1 1)")
    with pytest.raises(ValueError):
        parse_cycles("(1 5)", 4)


def test_composition_convention():
    # p * q applies p first; its matrix is matrix(p) @ matrix(q)
    p = parse_cycles("(1 2)", 3)
    q = parse_cycles("(2 3)", 3)
    assert (p * q)(0) == q(p(0)) == 2
    assert (p * q).matrix() == p.matrix() * q.matrix()


@given(perms)
def test_inverse(p):
    e = Permutation.identity(p.n)
    assert p * p.inverse() == e == p.inverse() * p


@given(perms)
def test_per_I_tX_is_a_permanent(p):
    # per(I + tX) as a polynomial in t, checked by evaluating at a few points
    from zeonperm.matrix import ExactMatrix

    for t0 in (1, 2, -1):
        M = ExactMatrix.identity(p.n) + t0 * p.matrix()
        assert permanent(M).constant() == per_I_tX(p)(t0)


@pytest.mark.parametrize("gens,order", [
    (trivial_gens(5), 1), (cyclic_gens(6), 6), (dihedral_gens(5), 10), (symmetric_gens(5), 120),
])
def test_group_orders(gens, order):
    assert group_closure(gens).order == order


def test_group_cap():
    with pytest.raises(GroupTooLarge):
        group_closure(symmetric_gens(6), cap=100)


def test_cycle_index_c4():
    Z = cycle_index(group_closure(cyclic_gens(4)))
    assert Z.terms == {(4, 0, 0, 0): Fraction(1, 4), (0, 2, 0, 0): Fraction(1, 4),
                       (0, 0, 0, 1): Fraction(1, 2)}
    assert str(Z) == "1/4*z1^4 + 1/4*z2^2 + 1/2*z4"


def test_c4_two_subsets():
    assert orbit_count_ellsets(group_closure(cyclic_gens(4)), 2) == 2
    assert orbit_count_ellsets(group_closure(trivial_gens(5)), 2) == 10
    with pytest.raises(ValueError):
        orbit_count_ellsets(group_closure(cyclic_gens(4)), 5)


def test_orbit_mismatch_is_reported(monkeypatch):
    import zeonperm.groups as g

    monkeypatch.setattr(g, "orbit_partition_counts", lambda G: [0] * (G.n + 1))
    with pytest.raises(OrbitCountMismatch):
        g.orbit_count_ellsets(group_closure(cyclic_gens(4)), 2)


def test_symmetric_group_single_orbit():
    G = group_closure(symmetric_gens(6))
    assert burnside_counts(G) == [1] * 7


def test_necklaces():
    # binary necklaces of length 6 with k black beads: 1 1 3 4 3 1 1
    G = group_closure(cyclic_gens(6))
    assert burnside_counts(G) == [1, 1, 3, 4, 3, 1, 1]


@pytest.mark.parametrize("seed", range(5))
def test_molien_random_s7(seed):
    rng = random.Random(seed)
    gens = [Permutation(tuple(rng.sample(range(7), 7))) for _ in range(2)]
    G = group_closure(gens)
    a, b, c = molien_check(G)
    assert a == b == c
    assert burnside_counts(G) == orbit_partition_counts(G)


def test_molien_standard_families():
    for n in range(1, 9):
        for gens in (trivial_gens(n), cyclic_gens(n)) + ((dihedral_gens(n),) if n >= 3 else ()):
            a, b, c = molien_check(group_closure(gens))
            assert a == b == c
    for n in range(1, 7):
        a, b, c = molien_check(group_closure(symmetric_gens(n)))
        assert a == b == c == UniPoly([1] * (n + 1))


def brute_fixed_counts(images):
    n = len(images)
    out = [0] * (n + 1)
    for ell in range(n + 1):
        for sub in itertools.combinations(range(n), ell):
            if {images[i] for i in sub} == set(sub):
                out[ell] += 1
    return out


@pytest.mark.parametrize("backend", ["python"] + (["cython"] if BACKEND == "cython" else []))
@settings(max_examples=60)
@given(st.integers(0, 9).flatmap(lambda n: st.permutations(range(n))))
def test_fixed_subset_counts(backend, images):
    assert fixed_subset_counts(images, backend=backend) == brute_fixed_counts(images)


def test_cycle_type():
    p = parse_cycles("(1 2 3)(4 5)", 7)
    assert cycle_type(p) == (2, 1, 1, 0, 0, 0, 0)
    assert sum(k * c for k, c in enumerate(cycle_type(p), start=1)) == 7
    assert per_I_tX(Permutation.identity(3)) == UniPoly([1, 3, 3, 1])
    assert per_I_tX(p) == UniPoly([1, 0, 1]) * UniPoly([1, 0, 0, 1]) * UniPoly([1, 1]) ** 2
