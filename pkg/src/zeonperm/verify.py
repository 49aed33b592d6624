"""Named invariant suites.  Each suite takes a seed and returns a list of
(check name, passed) pairs; randomized checks draw from ``random.Random(seed)``."""
from __future__ import annotations

import math
import random
from fractions import Fraction

from .algebra import BiPoly, S, UniPoly, charpoly_exact, det_bareiss, eval_2f0
from .derangements import (
    A, A_from_alternating, A_from_arrangements, A_table_recurrence, D, D_from_derangements,
    D_incl_excl, D_table_recurrence, oracle_arrangement_count, oracle_deranged_count,
    specialized_spectrum,
)
from .groups import (
    Permutation, burnside_counts, cyclic_gens, dihedral_gens, group_closure, molien_check,
    orbit_partition_counts, symmetric_gens, trivial_gens,
)
from .johnson import (
    assemble_sItJ, eigenvalue_sItJ, js_eigenvalue, js_matrix, rowsum_poly,
    spectrum_sItJ, trace_poly,
)
from .kernels import BACKEND, fixed_subset_counts, permanent_int
from .matrix import ExactMatrix
from .moments import P_init, P_triangle, M_matrix, h, h_forms, pst_identity2, pst_identity3
from .permanents import (
    per_via_traces, permanent, permanent_naive, zeon_power_perm, zeon_power_sum,
)
from .subgraphs import enumerate_elementary, perm_via_subgraphs
from .zeon import ZeonElement, induced_matrix_zeon

DEFAULT_SEED = 20240229

SUITES = ("algebra", "zeon", "permanents", "johnson", "moments", "derangements",
          "groups", "subgraphs")


def random_int_matrix(rng: random.Random, n: int, lo: int = -3, hi: int = 3) -> ExactMatrix:
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(n)] for _ in range(n)])


def random_poly(rng: random.Random, deg: int = 2, lo: int = -3, hi: int = 3) -> BiPoly:
    return BiPoly({(a, b): rng.randint(lo, hi)
                   for a in range(deg + 1) for b in range(deg + 1 - a)})


def suite_algebra(seed: int) -> list:
    rng = random.Random(seed)
    out = []
    ok = True
    for _ in range(30):
        p, q, r = (random_poly(rng) for _ in range(3))
        ok &= (p + q) * r == p * r + q * r
        ok &= p * q == q * p
        ok &= BiPoly.parse(p.to_str()) == p
        ok &= BiPoly.parse(p.to_str(star=False)) == p
        s0, t0 = rng.randint(-4, 4), rng.randint(-4, 4)
        ok &= (p * q).evaluate(s0, t0) == p.evaluate(s0, t0) * q.evaluate(s0, t0)
    out.append(("bipoly ring laws and parse round-trip", ok))
    ok = True
    for n in range(1, 6):
        M = random_int_matrix(rng, n)
        cp = charpoly_exact(M)
        ok &= cp.degree == n and cp[n] == 1
        ok &= cp[0] == (-1) ** n * det_bareiss(M)
        ok &= cp[n - 1] == -sum(M.to_int_rows()[i][i] for i in range(n))
    out.append(("charpoly constant term and trace", ok))
    out.append(("2F0 terminating values", eval_2f0(-2, 2, 1) == 1 - 4 + 6
                and eval_2f0(0, 5, Fraction(1, 3)) == 1))
    return out


def suite_zeon(seed: int) -> list:
    rng = random.Random(seed)
    out = []
    n = 5
    e = [ZeonElement.generator(n, i) for i in range(n)]
    out.append(("generators square to zero", all((x * x) == ZeonElement(n) for x in e)))
    ok = True
    for _ in range(10):
        X = random_int_matrix(rng, rng.randint(1, 4))
        for ell in range(X.dim + 1):
            ok &= induced_matrix_zeon(X, ell) == zeon_power_perm(X, ell)
    out.append(("zeon expansion matches subpermanents", ok))
    return out


def suite_permanents(seed: int) -> list:
    rng = random.Random(seed)
    out = []
    ok = True
    for _ in range(25):
        n = rng.randint(1, 5)
        X = random_int_matrix(rng, n)
        ok &= permanent(X) == permanent_naive(X)
        ok &= permanent_int(X.to_int_rows(), backend="python") == permanent(X).constant()
        if BACKEND == "cython":
            ok &= (permanent_int(X.to_int_rows(), backend="cython")
                   == permanent_int(X.to_int_rows(), backend="python"))
    out.append(("Ryser agrees with naive permanent on both backends", ok))
    ok = True
    for _ in range(25):
        n = rng.randint(1, 5)
        X = random_int_matrix(rng, n)
        Y = X.shifted()
        for ell in range(n + 1):
            a = zeon_power_perm(Y, ell)
            ok &= a == zeon_power_sum(X, ell) and a == induced_matrix_zeon(Y, ell)
        ok &= per_via_traces(X) == permanent(Y)
    out.append(("three zeon-power constructions and trace formula agree", ok))
    return out


def suite_johnson(seed: int) -> list:
    out = []
    ok = True
    for n in range(1, 9):
        for ell in range(n + 1):
            M = assemble_sItJ(n, ell)
            if n <= 6:
                ok &= M == zeon_power_perm(ExactMatrix.ones(n).shifted(), ell)
            ok &= M.trace() == trace_poly(n, ell)
            ok &= all(r == rowsum_poly(n, ell) for r in M.row_sums())
            ok &= rowsum_poly(n, ell) == eigenvalue_sItJ(n, ell, 0)
    out.append(("assembled expansion, trace and row sums", ok))
    ok = True
    for n in range(1, 9):
        for ell in range(n + 1):
            kmax = min(ell, n - ell)
            for alpha in range(kmax + 1):
                beta = n - ell - alpha
                lhs = h(ell - alpha, beta).shift(alpha, -beta) * Fraction(1, math.factorial(beta))
                ok &= lhs == eigenvalue_sItJ(n, ell, alpha)
                combo = sum((h(ell - k, k) * js_eigenvalue(n, ell, k, alpha)
                             for k in range(kmax + 1)), BiPoly())
                ok &= combo == eigenvalue_sItJ(n, ell, alpha)
            ok &= sum(e.multiplicity for e in spectrum_sItJ(n, ell)) == math.comb(n, ell)
    out.append(("spectrum polynomial identity and multiplicities", ok))
    ok = True
    for n in range(2, 7):
        for ell in range(n + 1):
            kmax = min(ell, n - ell)
            total = sum((js_matrix(n, ell, k) for k in range(kmax + 1)),
                        ExactMatrix.zeros(math.comb(n, ell)))
            ok &= total == ExactMatrix.ones(math.comb(n, ell))
    out.append(("Johnson matrices partition J", ok))
    return out


def suite_moments(seed: int) -> list:
    out = []
    tri = P_triangle(8)
    ok = True
    for n in range(9):
        for ell in range(n + 1):
            p = tri[n, ell]
            ok &= p == h(n - ell, ell)
            ok &= all(f == p for f in h_forms(n, ell))
            ok &= p == pst_identity2(n, ell)
            if ell:
                ok &= p == tri[n, ell - 1] - S * tri[n - 1, ell - 1]
        ok &= pst_identity3(n) == S**n
        ok &= tri[n, 0] == P_init(n)
    out.append(("P triangle recurrence, closed forms and binomial identities", ok))
    ok = True
    for n in range(8):
        for ell in range(n + 1):
            ok &= permanent(M_matrix(n, ell)) == h(n - ell, ell)
    out.append(("P_{n,l} is the permanent of M_{n,l}", ok))
    ok = all(h(n, m).is_homogeneous(n + m) for n in range(6) for m in range(6))
    out.append(("h_{n,m} homogeneous of degree n+m", ok))
    return out


def suite_derangements(seed: int) -> list:
    out = []
    f = math.factorial
    ok = True
    Dt, At = D_table_recurrence(9), A_table_recurrence(9)
    for n in range(10):
        for ell in range(n + 1):
            d, a = D(n, ell), A(n, ell)
            ok &= d == D_incl_excl(n, ell) == D_from_derangements(n, ell) == Dt[n][ell]
            ok &= d == (-1) ** (n - ell) * f(ell) * eval_2f0(ell - n, 1 + ell, 1)
            ok &= a == A_from_arrangements(n, ell) == A_from_alternating(n, ell) == At[n][ell]
            ok &= a == f(ell) * eval_2f0(ell - n, 1 + ell, -1)
            p = h(n - ell, ell)
            ok &= d == p.evaluate(-1, 1) and a == p.evaluate(1, 1)
    out.append(("closed forms, sums and recurrences for D and A", ok))
    ok = all(oracle_deranged_count(n, ell) == D(n, ell) for n in range(8) for ell in range(n + 1))
    ok &= all(oracle_arrangement_count(n, ell) == A(n, ell)
              for n in range(7) for ell in range(n + 1))
    out.append(("enumeration oracles", ok))
    ok = True
    for n in range(1, 7):
        for ell in range(n + 1):
            for kind, s0, t0 in (("derangement", -1, 1), ("arrangement", 1, 1)):
                spec = specialized_spectrum(kind, n, ell)
                ok &= spec == spectrum_sItJ(n, ell, s0, t0)
                M = assemble_sItJ(n, ell).specialize(s0, t0)
                expect = UniPoly.const(1)
                for e in spec:
                    expect = expect * UniPoly([-e.eigenvalue, 1]) ** e.multiplicity
                if n <= 5:
                    ok &= charpoly_exact(M) == expect
    out.append(("knight's-move spectra match characteristic polynomials", ok))
    return out


def _random_groups(rng, count, n=7):
    for _ in range(count):
        gens = [Permutation(tuple(rng.sample(range(n), n))) for _ in range(2)]
        yield group_closure(gens)


def suite_groups(seed: int) -> list:
    rng = random.Random(seed)
    out = []
    groups = [group_closure(trivial_gens(n)) for n in range(1, 9)]
    groups += [group_closure(cyclic_gens(n)) for n in range(1, 9)]
    groups += [group_closure(dihedral_gens(n)) for n in range(3, 9)]
    groups += [group_closure(symmetric_gens(n)) for n in range(2, 7)]
    ok = True
    for G in groups:
        a, b, c = molien_check(G)
        ok &= a == b == c
    out.append(("Molien triple equality for standard groups", ok))
    ok = True
    for G in _random_groups(rng, 20):
        a, b, c = molien_check(G)
        ok &= a == b == c
        ok &= burnside_counts(G) == orbit_partition_counts(G)
    out.append(("random subgroups of S_7", ok))
    ok = True
    for _ in range(20):
        n = rng.randint(1, 10)
        p = tuple(rng.sample(range(n), n))
        ok &= fixed_subset_counts(p, backend="python") == fixed_subset_counts(p)
    out.append(("fixed-subset kernel backends agree", ok))
    out.append(("C_4 on 2-subsets has 2 orbits",
                burnside_counts(group_closure(cyclic_gens(4)))[2] == 2))
    return out


def suite_subgraphs(seed: int) -> list:
    counts = [len(enumerate_elementary(n, 0)) for n in range(1, 8)]
    out = [("subgraph counts", counts == [1, 2, 5, 17, 73, 388, 2461])]
    ok = all(perm_via_subgraphs(n, ell) == permanent(M_matrix(n, ell))
             for n in range(1, 7) for ell in range(n + 1))
    out.append(("expansion over elementary subgraphs", ok))
    ok = all(E.weight().is_homogeneous(3) for ell in range(4) for E in enumerate_elementary(3, ell))
    out.append(("weights homogeneous", ok))
    return out


_RUNNERS = {name: globals()[f"suite_{name}"] for name in SUITES}


def run_suite(name: str, seed: int = DEFAULT_SEED) -> list:
    if name == "all":
        return [(f"{s}: {check}", ok) for s in SUITES for check, ok in _RUNNERS[s](seed)]
    if name not in _RUNNERS:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    return [(f"{name}: {check}", ok) for check, ok in _RUNNERS[name](seed)]
