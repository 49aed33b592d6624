"""Exponential moment polynomials h_{n,m}(s, t) and the P_{n,l} triangle.

h_{n,m} is the single source of truth; the triangle is generated by its
own recurrence from the first column and checked against h.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import BiPoly, ZERO, S, T, binom
from .matrix import ExactMatrix

__all__ = [
    "h",
    "h_forms",
    "P_init",
    "M_matrix",
    "Triangle",
    "P_triangle",
    "pst_identity2",
    "pst_identity3",
    "Q",
    "q_asymptotic_ratio",
]


@lru_cache(maxsize=None)
def h(n: int, m: int) -> BiPoly:
    """h_{n,m}(s,t) = sum_j C(n,j) (m+j)! s^(n-j) t^(m+j)."""
    if n < 0 or m < 0:
        raise ValueError(f"h({n}, {m}) needs nonnegative indices")
    return BiPoly({(n - j, m + j): math.comb(n, j) * math.factorial(m + j) for j in range(n + 1)})


def h_forms(n: int, m: int) -> list:
    """The four summation forms of h_{n-m,m}; all must coincide."""
    if not 0 <= m <= n:
        raise ValueError(f"need 0 <= m <= n, got n={n}, m={m}")
    f = math.factorial
    return [
        BiPoly({(n - m - j, m + j): binom(n - m, j) * f(m + j) for j in range(n - m + 1)}),
        BiPoly({(n - j, j): binom(n - m, j - m) * f(j) for j in range(m, n + 1)}),
        BiPoly({(n - j, j): binom(n - m, n - j) * f(j) for j in range(m, n + 1)}),
        BiPoly({(j, n - j): binom(n - m, j) * f(n - j) for j in range(n - m + 1)}),
    ]


def P_init(n: int) -> BiPoly:
    """P_{n,0} = per(sI + tJ) = sum_j n!/j! s^j t^(n-j)."""
    return BiPoly({(j, n - j): math.factorial(n) // math.factorial(j) for j in range(n + 1)})


def M_matrix(n: int, ell: int) -> ExactMatrix:
    """n x n, first n-ell diagonal entries s+t, every other entry t."""
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")
    st = S + T
    return ExactMatrix([[st if (i == j and i < n - ell) else T for j in range(n)]
                        for i in range(n)])


@dataclass(frozen=True)
class Triangle:
    """rows[n][l] for 0 <= l <= n."""

    rows: tuple

    def __post_init__(self):
        for n, r in enumerate(self.rows):
            if len(r) != n + 1:
                raise ValueError(f"row {n} has {len(r)} entries")

    def __getitem__(self, nl):
        n, l = nl
        return self.rows[n][l]

    @property
    def nmax(self) -> int:
        return len(self.rows) - 1

    def specialize(self, s, t) -> "Triangle":
        return Triangle(tuple(tuple(p.evaluate(s, t) for p in r) for r in self.rows))

    def padded(self) -> list:
        """Square layout with zeros above the diagonal, as printed in tables."""
        size = len(self.rows)
        return [list(r) + [0] * (size - len(r)) for r in self.rows]

    def to_csv(self) -> str:
        return "".join(",".join(str(v) for v in r) + "\n" for r in self.padded())

    def to_json_rows(self) -> list:
        return [[v if isinstance(v, int) else str(v) for v in r] for r in self.rows]


@lru_cache(maxsize=None)
def P_triangle(nmax: int) -> Triangle:
    """P_{n,l} = P_{n,l-1} - s P_{n-1,l-1}, seeded with the column P_{n,0}."""
    if nmax < 0:
        raise ValueError("nmax must be nonnegative")
    rows: list = []
    for n in range(nmax + 1):
        row = [P_init(n)]
        for l in range(1, n + 1):
            row.append(row[l - 1] - S * rows[n - 1][l - 1])
        rows.append(tuple(row))
    return Triangle(tuple(rows))


def pst_identity2(n: int, ell: int) -> BiPoly:
    """sum_j C(l,j) (-1)^j s^j P_{n-j,0}; equals P_{n,l}."""
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")
    acc = ZERO
    for j in range(ell + 1):
        acc = acc + (-1) ** j * binom(ell, j) * S**j * P_init(n - j)
    return acc


def pst_identity3(n: int) -> BiPoly:
    """sum_l C(n,l) (-1)^l P_{n,l}; equals s^n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    row = P_triangle(n).rows[n]
    acc = ZERO
    for l, p in enumerate(row):
        acc = acc + (-1) ** l * binom(n, l) * p
    return acc


def Q(n: int, x) -> BiPoly:
    """Q_n(x) = sum_l C(n,l) x^l P_{n,l}, for a rational point x."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    x = Fraction(x)
    row = P_triangle(n).rows[n]
    acc = ZERO
    for l, p in enumerate(row):
        if l == 0 or x:
            acc = acc + p * (binom(n, l) * x**l)
    return acc


def q_asymptotic_ratio(n: int, s0, t0, x0) -> float:
    """Q_n(x0) / (t0^n (1+x0)^n n!) at (s, t) = (s0, t0), as a float.

    Tends to exp(s0 / (t0 + t0 x0)) as n grows.
    """
    t0 = Fraction(t0)
    x0 = Fraction(x0)
    if t0 == 0:
        raise ZeroDivisionError("t0 must be nonzero")
    if x0 == -1:
        raise ZeroDivisionError("x0 = -1 makes the normalizer vanish")
    num = Q(n, x0).evaluate(Fraction(s0), t0)
    den = t0**n * (1 + x0) ** n * math.factorial(n)
    return float(Fraction(num) / den)
