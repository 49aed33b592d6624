"""l-subset indexing, Johnson scheme matrices and the spectrum of (sI+tJ)^{vee l}.

Subsets are sorted tuples of 0-based points, ranked in dictionary order,
so for n=4, l=2 the ranks 0..5 are 12, 13, 14, 23, 24, 34 in 1-based labels.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .algebra import BiPoly, ONE, ZERO, binom
from .matrix import ExactMatrix
from .moments import h

__all__ = [
    "subsets",
    "subset_label",
    "rank_subset",
    "unrank_subset",
    "johnson_distance",
    "js_matrix",
    "js_eigenvalue",
    "multiplicity",
    "expand_sItJ",
    "assemble_sItJ",
    "SpectrumEntry",
    "spectrum_sItJ",
    "eigenvalue_sItJ",
    "rowsum_poly",
    "trace_poly",
]


@lru_cache(maxsize=None)
def subsets(n: int, ell: int) -> tuple:
    return tuple(combinations(range(n), ell))


def subset_label(S_) -> str:
    """1-based label, e.g. (0, 2) -> "13"; comma-joined once n >= 10."""
    pts = [i + 1 for i in S_]
    if any(p >= 10 for p in pts):
        return "{" + ",".join(map(str, pts)) + "}"
    return "".join(map(str, pts)) or "{}"


def rank_subset(n: int, ell: int, S_) -> int:
    pts = sorted(S_)
    if len(pts) != ell or len(set(pts)) != ell:
        raise ValueError(f"{S_!r} is not an {ell}-subset")
    if pts and (pts[0] < 0 or pts[-1] >= n):
        raise ValueError(f"{S_!r} is not inside range({n})")
    r = 0
    lo = 0
    for i, c in enumerate(pts):
        for x in range(lo, c):
            r += math.comb(n - 1 - x, ell - 1 - i)
        lo = c + 1
    return r


def unrank_subset(n: int, ell: int, r: int) -> tuple:
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")
    if not 0 <= r < math.comb(n, ell):
        raise ValueError(f"rank {r} outside 0..{math.comb(n, ell) - 1}")
    out = []
    x = 0
    for i in range(ell):
        while True:
            block = math.comb(n - 1 - x, ell - 1 - i)
            if r < block:
                break
            r -= block
            x += 1
        out.append(x)
        x += 1
    return tuple(out)


def johnson_distance(I, J) -> int:
    I, J = set(I), set(J)
    if len(I) != len(J):
        raise ValueError("Johnson distance needs sets of equal size")
    return len(I - J)


def _kmax(n, ell):
    return min(ell, n - ell)


def _check(n, ell):
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")


def js_matrix(n: int, ell: int, k: int) -> ExactMatrix:
    _check(n, ell)
    if not 0 <= k <= _kmax(n, ell):
        raise ValueError(f"k={k} outside 0..{_kmax(n, ell)}")
    subs = subsets(n, ell)
    return ExactMatrix([[ONE if johnson_distance(I, J) == k else ZERO for J in subs]
                        for I in subs])


def js_eigenvalue(n: int, ell: int, k: int, alpha: int) -> int:
    """Lambda_k(alpha) = sum_i C(l-a,i) C(n-l-a+i,i) C(l-i,k-i) (-1)^(k-i)."""
    _check(n, ell)
    top = _kmax(n, ell)
    if not (0 <= k <= top and 0 <= alpha <= top):
        raise ValueError(f"k={k}, alpha={alpha} outside 0..{top}")
    return sum(binom(ell - alpha, i) * binom(n - ell - alpha + i, i) * binom(ell - i, k - i)
               * (-1) ** (k - i) for i in range(k + 1))


def multiplicity(n: int, alpha: int) -> int:
    return binom(n, alpha) - binom(n, alpha - 1)


def expand_sItJ(n: int, ell: int) -> list:
    """[(k, h_{l-k,k}(s,t))] for k = 0..min(l, n-l)."""
    _check(n, ell)
    return [(k, h(ell - k, k)) for k in range(_kmax(n, ell) + 1)]


def assemble_sItJ(n: int, ell: int, coeffs=None) -> ExactMatrix:
    """sum_k coeff_k JS_k, by default with the coefficients of expand_sItJ."""
    _check(n, ell)
    if coeffs is None:
        coeffs = dict(expand_sItJ(n, ell))
    subs = subsets(n, ell)
    return ExactMatrix([[coeffs[johnson_distance(I, J)] for J in subs] for I in subs])


@dataclass(frozen=True)
class SpectrumEntry:
    alpha: int
    eigenvalue: object  # BiPoly, or an int after specialization
    multiplicity: int


def eigenvalue_sItJ(n: int, ell: int, alpha: int) -> BiPoly:
    """sum_i s^(l-i) t^i C(l-a,i) C(n-l-a+i,i) i!."""
    return BiPoly({(ell - i, i): binom(ell - alpha, i) * binom(n - ell - alpha + i, i)
                   * math.factorial(i) for i in range(ell - alpha + 1)})


def spectrum_sItJ(n: int, ell: int, s=None, t=None) -> list:
    """Eigenvalues of (sI+tJ)^{vee l} in ascending alpha; with ``s`` and
    ``t`` given they are specialized to numbers."""
    _check(n, ell)
    out = []
    for alpha in range(_kmax(n, ell) + 1):
        ev = eigenvalue_sItJ(n, ell, alpha)
        if s is not None and t is not None:
            ev = ev.evaluate(s, t)
        out.append(SpectrumEntry(alpha, ev, multiplicity(n, alpha)))
    return out


def rowsum_poly(n: int, ell: int) -> BiPoly:
    _check(n, ell)
    return BiPoly({(ell - i, i): binom(ell, i) * binom(n - ell + i, i) * math.factorial(i)
                   for i in range(ell + 1)})


def trace_poly(n: int, ell: int) -> BiPoly:
    """n!/(n-l)! sum_k s^k t^(l-k) / k!."""
    _check(n, ell)
    lead = math.factorial(n) // math.factorial(n - ell)
    return BiPoly({(k, ell - k): lead // math.factorial(k) for k in range(ell + 1)})
