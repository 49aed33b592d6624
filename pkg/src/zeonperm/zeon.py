"""The zeon algebra: commuting generators e_1..e_n with e_i^2 = 0.

A basis element e_A is stored as the bitmask of the subset A, so the
product e_A e_B is e_{A|B} when ``A & B == 0`` and zero otherwise.
"""
from __future__ import annotations

from itertools import combinations

from .algebra import BiPoly, ONE
from .matrix import ExactMatrix, as_matrix

__all__ = ["ZeonElement", "zeon_mul", "induced_matrix_zeon"]


class ZeonElement:
    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n > 64:
            raise ValueError("zeon elements support n <= 64")
        self.n = n
        full = (1 << n) - 1
        clean = {}
        for mask, c in (terms or {}).items():
            if mask & ~full:
                raise ValueError(f"subset {mask:b} is not inside [{n}]")
            c = BiPoly.coerce(c)
            if c:
                clean[mask] = c
        self.terms = clean

    @classmethod
    def one(cls, n: int) -> "ZeonElement":
        return cls(n, {0: ONE})

    @classmethod
    def generator(cls, n: int, i: int) -> "ZeonElement":
        """e_i for 0-based ``i``."""
        return cls(n, {1 << i: ONE})

    @classmethod
    def basis(cls, n: int, subset, coeff=1) -> "ZeonElement":
        mask = 0
        for i in subset:
            mask |= 1 << i
        return cls(n, {mask: coeff})

    def coeff(self, subset) -> BiPoly:
        mask = subset if isinstance(subset, int) else sum(1 << i for i in subset)
        return self.terms.get(mask, BiPoly())

    def __add__(self, other):
        if other.n != self.n:
            raise ValueError(f"ambient dimensions differ: {self.n} vs {other.n}")
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out[m] + c if m in out else c
        return ZeonElement(self.n, out)

    def __mul__(self, other):
        if isinstance(other, ZeonElement):
            return zeon_mul(self, other)
        c = BiPoly.coerce(other)
        return ZeonElement(self.n, {m: c * v for m, v in self.terms.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, ZeonElement):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mask in sorted(self.terms, key=lambda m: (bin(m).count("1"), _members(m))):
            c = self.terms[mask]
            label = "e{" + ",".join(str(i + 1) for i in _members(mask)) + "}"
            if mask == 0:
                parts.append(str(c))
            elif c == 1:
                parts.append(label)
            elif c.is_constant() or len(c.terms) == 1:
                parts.append(f"{c}*{label}")
            else:
                parts.append(f"({c})*{label}")
        return " + ".join(parts)


def _members(mask: int):
    return tuple(i for i in range(mask.bit_length()) if mask >> i & 1)


def zeon_mul(a: ZeonElement, b: ZeonElement, max_grade: int | None = None) -> ZeonElement:
    """Product in the zeon algebra.  Terms of grade above ``max_grade`` are
    dropped when it is given."""
    if a.n != b.n:
        raise ValueError(f"ambient dimensions differ: {a.n} vs {b.n}")
    out: dict = {}
    for ma, ca in a.terms.items():
        for mb, cb in b.terms.items():
            if ma & mb:
                continue
            m = ma | mb
            if max_grade is not None and bin(m).count("1") > max_grade:
                continue
            p = ca * cb
            out[m] = out[m] + p if m in out else p
    return ZeonElement(a.n, out)


def induced_matrix_zeon(X, ell: int) -> ExactMatrix:
    """X^{vee ell} from the coefficients of e_J in y_I = prod_{i in I} y_i,
    where y_i = sum_j X_ij e_j."""
    X = as_matrix(X)
    n = X.dim
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")
    ys = [ZeonElement(n, {1 << j: X[i, j] for j in range(n)}) for i in range(n)]
    subsets = list(combinations(range(n), ell))
    masks = [sum(1 << i for i in S) for S in subsets]
    rows = []
    for I in subsets:
        y = ZeonElement.one(n)
        for i in I:
            y = zeon_mul(y, ys[i], max_grade=ell)
        rows.append([y.terms.get(m, BiPoly()) for m in masks])
    return ExactMatrix(rows)
