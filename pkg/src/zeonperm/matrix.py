"""Dense square matrices over ``BiPoly``."""
from __future__ import annotations

import json

from .algebra import BiPoly, ONE, ZERO, S, T

__all__ = ["ExactMatrix", "as_matrix", "load_matrix"]


class ExactMatrix:
    """Immutable square matrix with ``BiPoly`` entries.

    Plain integers are the degenerate case: every entry is a constant.
    """

    __slots__ = ("rows", "_hash")

    def __init__(self, rows):
        rows = tuple(tuple(BiPoly.coerce(x) for x in r) for r in rows)
        n = len(rows)
        for r in rows:
            if len(r) != n:
                raise ValueError(f"matrix is not square: {n} rows, a row of length {len(r)}")
        self.rows = rows
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[ONE if i == j else ZERO for j in range(n)] for i in range(n)])

    @classmethod
    def ones(cls, n: int) -> "ExactMatrix":
        return cls([[ONE] * n for _ in range(n)])

    @classmethod
    def zeros(cls, n: int) -> "ExactMatrix":
        return cls([[ZERO] * n for _ in range(n)])

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    def __iter__(self):
        return iter(self.rows)

    def __add__(self, other):
        other = as_matrix(other)
        self._check(other)
        return ExactMatrix([[a + b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __sub__(self, other):
        other = as_matrix(other)
        self._check(other)
        return ExactMatrix([[a - b for a, b in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)])

    def __neg__(self):
        return ExactMatrix([[-a for a in r] for r in self.rows])

    def __mul__(self, other):
        if isinstance(other, ExactMatrix):
            self._check(other)
            n = self.dim
            cols = list(zip(*other.rows))
            out = []
            for r in self.rows:
                row = []
                for c in cols:
                    acc = ZERO
                    for a, b in zip(r, c):
                        if a and b:
                            acc = acc + a * b
                    row.append(acc)
                out.append(row)
            return ExactMatrix(out) if n else ExactMatrix([])
        scalar = BiPoly.coerce(other)
        return ExactMatrix([[scalar * a for a in r] for r in self.rows])

    def __rmul__(self, other):
        scalar = BiPoly.coerce(other)
        return ExactMatrix([[scalar * a for a in r] for r in self.rows])

    def _check(self, other):
        if other.dim != self.dim:
            raise ValueError(f"dimension mismatch: {self.dim} vs {other.dim}")

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            try:
                other = as_matrix(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.rows)
        return self._hash

    def submatrix(self, rows, cols) -> "ExactMatrix":
        return ExactMatrix([[self.rows[i][j] for j in cols] for i in rows])

    def transpose(self) -> "ExactMatrix":
        return ExactMatrix(list(zip(*self.rows)))

    def trace(self) -> BiPoly:
        acc = ZERO
        for i in range(self.dim):
            acc = acc + self.rows[i][i]
        return acc

    def row_sums(self) -> list:
        out = []
        for r in self.rows:
            acc = ZERO
            for a in r:
                acc = acc + a
            out.append(acc)
        return out

    def is_integer(self) -> bool:
        return all(a.is_constant() and a.is_integral() for r in self.rows for a in r)

    def to_int_rows(self) -> list:
        return [[a.constant() for a in r] for r in self.rows]

    def specialize(self, s, t) -> "ExactMatrix":
        return ExactMatrix([[a.evaluate(s, t) for a in r] for r in self.rows])

    def shifted(self) -> "ExactMatrix":
        """s I + t X for this matrix X."""
        n = self.dim
        return ExactMatrix([[T * self.rows[i][j] + (S if i == j else ZERO) for j in range(n)]
                            for i in range(n)])

    def to_json(self) -> dict:
        return {"n": self.dim,
                "entries": [[_entry_json(a) for a in r] for r in self.rows]}

    @classmethod
    def from_json(cls, obj) -> "ExactMatrix":
        if isinstance(obj, str):
            obj = json.loads(obj)
        entries = obj["entries"]
        n = obj.get("n", len(entries))
        if len(entries) != n:
            raise ValueError(f"declared n={n} but {len(entries)} rows")
        return cls(entries)

    def __str__(self):
        cells = [[str(a) for a in r] for r in self.rows]
        width = max((len(c) for r in cells for c in r), default=0)
        return "\n".join("  ".join(c.rjust(width) for c in r) for r in cells)

    def __repr__(self):
        return f"ExactMatrix({[[str(a) for a in r] for r in self.rows]!r})"


def _entry_json(a: BiPoly):
    if a.is_constant() and a.is_integral():
        return a.constant()
    return str(a)


def as_matrix(X) -> ExactMatrix:
    if isinstance(X, ExactMatrix):
        return X
    return ExactMatrix(X)


def load_matrix(path) -> ExactMatrix:
    with open(path) as fh:
        return ExactMatrix.from_json(json.load(fh))
