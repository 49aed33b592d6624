"""Permanents and zeon powers.

Integer matrices go through the Ryser/Gray-code kernels.  Symbolic
matrices are expanded along rows, skipping zero entries and sharing
subresults keyed by the set of columns already used.
"""
from __future__ import annotations

from itertools import combinations, permutations

from .algebra import BiPoly, ONE, ZERO, S, T
from .kernels import permanent_int, zeon_power_int
from .matrix import ExactMatrix, as_matrix

__all__ = [
    "permanent",
    "permanent_expand",
    "permanent_naive",
    "zeon_power_perm",
    "zeon_power_sum",
    "per_via_traces",
]


def permanent(X) -> BiPoly:
    X = as_matrix(X)
    if X.dim == 0:
        return ONE
    if X.is_integer():
        return BiPoly.const(permanent_int(X.to_int_rows()))
    return permanent_expand(X)


def permanent_expand(X) -> BiPoly:
    """Row expansion over all permutations, pruning zero entries."""
    X = as_matrix(X)
    n = X.dim
    rows = X.rows
    memo: dict = {}

    def expand(i: int, used: int) -> BiPoly:
        if i == n:
            return ONE
        hit = memo.get(used)
        if hit is not None:
            return hit
        acc = ZERO
        row = rows[i]
        for j in range(n):
            if used >> j & 1 or not row[j]:
                continue
            rest = expand(i + 1, used | 1 << j)
            if rest:
                acc = acc + row[j] * rest
        memo[used] = acc
        return acc

    return expand(0, 0)


def permanent_naive(X) -> BiPoly:
    """The defining n!-term sum; an oracle, not for production sizes."""
    X = as_matrix(X)
    n = X.dim
    acc = ZERO
    for p in permutations(range(n)):
        term = ONE
        for i in range(n):
            term = term * X[i, p[i]]
            if not term:
                break
        acc = acc + term
    return acc


def _check_ell(n, ell):
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")


def zeon_power_perm(X, ell: int) -> ExactMatrix:
    """X^{vee ell}: entry (I, J) is per X[I, J], subsets in lex order."""
    X = as_matrix(X)
    _check_ell(X.dim, ell)
    subsets = list(combinations(range(X.dim), ell))
    if X.is_integer():
        return ExactMatrix(zeon_power_int(X.to_int_rows(), subsets))
    return ExactMatrix([[permanent_expand(X.submatrix(I, J)) for J in subsets] for I in subsets])


def zeon_power_sum(X, ell: int) -> ExactMatrix:
    """(sI + tX)^{vee ell} assembled from subpermanents of X alone:

        sum_j s^(ell-j) t^j sum_{A in I&J, |A| = ell-j} per X[I-A, J-A]
    """
    X = as_matrix(X)
    n = X.dim
    _check_ell(n, ell)
    integer = X.is_integer()
    rows = X.to_int_rows() if integer else None
    cache: dict = {}

    def subper(B, C):
        key = (B, C)
        v = cache.get(key)
        if v is None:
            if integer:
                v = BiPoly.const(permanent_int([[rows[i][j] for j in C] for i in B]))
            else:
                v = permanent(X.submatrix(B, C))
            cache[key] = v
        return v

    subsets = list(combinations(range(n), ell))
    spow = [S**k for k in range(ell + 1)]
    tpow = [T**k for k in range(ell + 1)]
    out = []
    for I in subsets:
        row = []
        for J in subsets:
            common = sorted(set(I) & set(J))
            acc = ZERO
            for j in range(ell + 1):
                inner = ZERO
                for A in combinations(common, ell - j):
                    B = tuple(i for i in I if i not in A)
                    C = tuple(c for c in J if c not in A)
                    inner = inner + subper(B, C)
                if inner:
                    acc = acc + spow[ell - j] * tpow[j] * inner
            row.append(acc)
        out.append(row)
    return ExactMatrix(out)


def per_via_traces(X) -> BiPoly:
    """sum_j s^(n-j) t^j tr X^{vee j}; equals per(sI + tX)."""
    X = as_matrix(X)
    n = X.dim
    acc = ZERO
    for j in range(n + 1):
        tr = ZERO
        for A in combinations(range(n), j):
            tr = tr + permanent(X.submatrix(A, A))
        if tr:
            acc = acc + S ** (n - j) * T**j * tr
    return acc
