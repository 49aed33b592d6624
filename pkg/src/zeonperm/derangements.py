"""Generalized derangement numbers D_{n,l} = P_{n,l}(-1, 1) and
arrangement numbers A_{n,l} = P_{n,l}(1, 1), with enumeration oracles."""
from __future__ import annotations

import math
from itertools import combinations, permutations

from .algebra import binom
from .johnson import SpectrumEntry, multiplicity, subsets
from .matrix import ExactMatrix, as_matrix
from .moments import Triangle

__all__ = [
    "D", "D_incl_excl", "D_from_derangements", "D_table_recurrence", "derangement_number",
    "A", "A_from_arrangements", "A_from_alternating", "A_table_recurrence", "arrangement_total",
    "arrangements_count", "count_triangle",
    "oracle_deranged_count", "oracle_arrangement_count",
    "deranged_permutations", "arrangements_containing",
    "specialized_spectrum", "read_off_johnson_basis", "JohnsonReadOffError",
]

ENUM_BOUND_D = 9
ENUM_BOUND_A = 8


class JohnsonReadOffError(ValueError):
    """Two Johnson coefficients coincide, so the basis cannot be recovered."""


def _range(n, ell):
    if not 0 <= ell <= n:
        raise ValueError(f"need 0 <= l <= n, got n={n}, l={ell}")


def D(n: int, ell: int) -> int:
    """sum_{j=l}^{n} (-1)^(n-j) C(n-l, n-j) j!."""
    _range(n, ell)
    return sum((-1) ** (n - j) * binom(n - ell, n - j) * math.factorial(j)
               for j in range(ell, n + 1))


def D_incl_excl(n: int, ell: int) -> int:
    """Inclusion-exclusion over fixed points of {1..n-l}."""
    _range(n, ell)
    return sum((-1) ** j * binom(n - ell, j) * math.factorial(n - j) for j in range(n - ell + 1))


def derangement_number(n: int) -> int:
    return D(n, 0)


def D_from_derangements(n: int, ell: int) -> int:
    """sum_j C(l, j) d_{n-j}."""
    _range(n, ell)
    return sum(binom(ell, j) * derangement_number(n - j) for j in range(ell + 1))


def D_table_recurrence(nmax: int) -> list:
    """Rows from D_{n,l} = D_{n,l-1} + D_{n-1,l-1}, first column d_n."""
    rows = []
    for n in range(nmax + 1):
        row = [derangement_number(n)]
        for l in range(1, n + 1):
            row.append(row[l - 1] + rows[n - 1][l - 1])
        rows.append(row)
    return rows


def A(n: int, ell: int) -> int:
    """sum_{j=l}^{n} C(n-l, n-j) j!."""
    _range(n, ell)
    return sum(binom(n - ell, n - j) * math.factorial(j) for j in range(ell, n + 1))


def arrangements_count(n: int, j: int) -> int:
    """A(n, j) = n!/(n-j)!, the number of j-arrangements of [n]."""
    return math.factorial(n) // math.factorial(n - j) if 0 <= j <= n else 0


def arrangement_total(n: int) -> int:
    return A(n, 0)


def A_from_arrangements(n: int, ell: int) -> int:
    """sum_{j=l}^{n} A(j, l) A(n-l, j-l)."""
    _range(n, ell)
    return sum(arrangements_count(j, ell) * arrangements_count(n - ell, j - ell)
               for j in range(ell, n + 1))


def A_from_alternating(n: int, ell: int) -> int:
    """sum_j (-1)^j C(l, j) a_{n-j}."""
    _range(n, ell)
    return sum((-1) ** j * binom(ell, j) * arrangement_total(n - j) for j in range(ell + 1))


def A_table_recurrence(nmax: int) -> list:
    """Rows from A_{n,l} = A_{n,l-1} - A_{n-1,l-1}, first column a_n."""
    rows = []
    for n in range(nmax + 1):
        row = [arrangement_total(n)]
        for l in range(1, n + 1):
            row.append(row[l - 1] - rows[n - 1][l - 1])
        rows.append(row)
    return rows


def count_triangle(kind: str, nmax: int) -> Triangle:
    f = {"derangement": D, "arrangement": A}[kind]
    return Triangle(tuple(tuple(f(n, l) for l in range(n + 1)) for n in range(nmax + 1)))


# enumeration oracles ---------------------------------------------------------


def deranged_permutations(n: int, ell: int):
    """Permutations of range(n) (one-line tuples) fixing no point of range(n-l)."""
    if n > ENUM_BOUND_D:
        raise ValueError(f"enumeration limited to n <= {ENUM_BOUND_D}")
    _range(n, ell)
    moved = n - ell
    for p in permutations(range(n)):
        if all(p[i] != i for i in range(moved)):
            yield p


def oracle_deranged_count(n: int, ell: int) -> int:
    return sum(1 for _ in deranged_permutations(n, ell))


def arrangements_containing(n: int, ell: int):
    """Arrangements of range(n) (tuples) that use every point of range(l)."""
    if n > ENUM_BOUND_A:
        raise ValueError(f"enumeration limited to n <= {ENUM_BOUND_A}")
    _range(n, ell)
    need = set(range(ell))
    for j in range(n + 1):
        for sub in combinations(range(n), j):
            if need.issubset(sub):
                yield from permutations(sub)


def oracle_arrangement_count(n: int, ell: int) -> int:
    return sum(1 for _ in arrangements_containing(n, ell))


# spectra of (J-I)^{vee l} and (I+J)^{vee l} ----------------------------------


def specialized_spectrum(kind: str, n: int, ell: int) -> list:
    """Integer spectrum read off the D or A triangle by knight's moves:
    (-1)^a D_{n-2a, n-l-a} / (n-l-a)!  or  A_{n-2a, n-l-a} / (n-l-a)!."""
    _range(n, ell)
    if kind == "derangement":
        f, sign = D, -1
    elif kind == "arrangement":
        f, sign = A, 1
    else:
        raise ValueError(f"unknown kind {kind!r}")
    out = []
    for alpha in range(min(ell, n - ell) + 1):
        num = f(n - 2 * alpha, n - ell - alpha)
        q, r = divmod(num, math.factorial(n - ell - alpha))
        assert r == 0, "knight's-move eigenvalue is not integral"
        out.append(SpectrumEntry(alpha, sign**alpha * q, multiplicity(n, alpha)))
    return out


def read_off_johnson_basis(M, n: int, ell: int) -> list:
    """Split M's entry positions by value into 0/1 matrices.

    Classes are ordered by where their value first appears in row 0, so
    the diagonal class comes first.
    """
    M = as_matrix(M)
    subs = subsets(n, ell)
    if M.dim != len(subs):
        raise ValueError(f"matrix of size {M.dim} is not indexed by {ell}-subsets of {n}")
    needed = min(ell, n - ell) + 1
    order: list = []
    classes: dict = {}
    for i in range(M.dim):
        for j in range(M.dim):
            v = M[i, j]
            if v not in classes:
                classes[v] = set()
                order.append(v)
            classes[v].add((i, j))
    if len(classes) < needed:
        raise JohnsonReadOffError(
            f"only {len(classes)} distinct entries for {needed} Johnson classes")
    if len(classes) > needed:
        raise ValueError(f"{len(classes)} distinct entries; not a combination of "
                         f"{needed} Johnson matrices")
    first_in_row0: dict = {}
    for j in range(M.dim):
        first_in_row0.setdefault(M[0, j], j)
    order.sort(key=lambda v: first_in_row0.get(v, M.dim))
    out = []
    for v in order:
        cells = classes[v]
        out.append(ExactMatrix([[1 if (i, j) in cells else 0 for j in range(M.dim)]
                                for i in range(M.dim)]))
    return out
