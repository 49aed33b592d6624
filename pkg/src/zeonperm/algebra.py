"""Exact scalar and polynomial arithmetic.

Everything downstream works over Python integers, with ``Fraction`` used
only where a rational intermediate is unavoidable (terminating 2F0 series,
generating-function coefficients).  ``BiPoly`` is the bivariate polynomial
type in the formal variables ``s`` and ``t``; ``UniPoly`` is a polynomial in
one variable, used for characteristic polynomials and cycle-index
substitutions.
"""
from __future__ import annotations

import math
import re
from fractions import Fraction
from numbers import Rational

__all__ = [
    "BiPoly",
    "UniPoly",
    "PolyParseError",
    "binom",
    "pochhammer",
    "eval_2f0",
    "charpoly_exact",
    "det_bareiss",
    "expgf_check",
    "S",
    "T",
]


class PolyParseError(ValueError):
    pass


def _norm(c):
    if type(c) is int:
        return c
    if isinstance(c, Fraction):
        return int(c.numerator) if c.denominator == 1 else c
    if isinstance(c, bool):
        return int(c)
    if isinstance(c, int):
        return c
    if isinstance(c, Rational):
        return _norm(Fraction(c))
    raise TypeError(f"non-rational coefficient {c!r}")


def binom(n: int, k: int) -> int:
    """Binomial coefficient with the conventions C(n, k) = 0 for k < 0 and
    for k > n >= 0.  Negative ``n`` uses the falling-factorial extension."""
    if k < 0:
        return 0
    if n >= 0:
        return math.comb(n, k) if k <= n else 0
    num = 1
    for i in range(k):
        num *= n - i
    return num // math.factorial(k)


def pochhammer(a, j: int):
    """Rising factorial (a)_j = a (a+1) ... (a+j-1)."""
    out = 1
    for i in range(j):
        out *= a + i
    return out


def eval_2f0(a: int, b, x) -> Fraction | int:
    """Exact value of the terminating series sum_j (a)_j (b)_j x^j / j!.

    ``a`` must be a nonpositive integer so the series stops at j = -a.
    """
    if not isinstance(a, int) or a > 0:
        raise ValueError(f"2F0 does not terminate for a={a!r}")
    x = Fraction(x)
    total = Fraction(0)
    term = Fraction(1)
    for j in range(-a + 1):
        total += term
        term = term * (a + j) * (b + j) * x / (j + 1)
    return _norm(total)


# --------------------------------------------------------------------------
# bivariate polynomials in s, t
# --------------------------------------------------------------------------

_TERM_RE = re.compile(r"[+-]?[^+-]+")
_COEF_RE = re.compile(r"^(\d+(?:/\d+)?)?\*?")
_FACTOR_RE = re.compile(r"([st])(?:\^(\d+))?\*?")


class BiPoly:
    """Polynomial in ``s`` and ``t`` with exact coefficients.

    Stored sparsely as ``{(deg_s, deg_t): coeff}`` with no zero entries.
    Instances are immutable and hashable.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for key, c in terms.items():
                c = _norm(c)
                if c:
                    a, b = key
                    if a < 0 or b < 0:
                        raise ValueError(f"negative exponent in {key}")
                    clean[(a, b)] = c
        self._terms = clean
        self._hash = None

    # construction -------------------------------------------------------

    @classmethod
    def const(cls, c) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, a: int, b: int, c=1) -> "BiPoly":
        return cls({(a, b): c})

    @classmethod
    def coerce(cls, x) -> "BiPoly":
        if isinstance(x, BiPoly):
            return x
        if isinstance(x, str):
            return cls.parse(x)
        return cls.const(x)

    @classmethod
    def parse(cls, text: str) -> "BiPoly":
        """Parse ``s^2+2*s*t+2*t^2``; the ``*`` is optional (``2st^2``)."""
        src = "".join(text.split())
        if not src:
            raise PolyParseError("empty polynomial")
        terms: dict = {}
        pos = 0
        for m in _TERM_RE.finditer(src):
            if m.start() != pos:
                raise PolyParseError(f"cannot parse {text!r}")
            pos = m.end()
            tok = m.group()
            sign = -1 if tok[0] == "-" else 1
            body = tok.lstrip("+-")
            cm = _COEF_RE.match(body)
            coef = Fraction(cm.group(1)) if cm.group(1) else Fraction(1)
            rest = body[cm.end():]
            a = b = 0
            fpos = 0
            for fm in _FACTOR_RE.finditer(rest):
                if fm.start() != fpos:
                    raise PolyParseError(f"bad term {tok!r} in {text!r}")
                fpos = fm.end()
                e = int(fm.group(2)) if fm.group(2) else 1
                if fm.group(1) == "s":
                    a += e
                else:
                    b += e
            if fpos != len(rest) or (not cm.group(1) and not rest):
                raise PolyParseError(f"bad term {tok!r} in {text!r}")
            terms[(a, b)] = terms.get((a, b), 0) + sign * coef
        if pos != len(src):
            raise PolyParseError(f"cannot parse {text!r}")
        return cls(terms)

    # inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def items(self):
        """Terms in canonical order: descending deg_s, then ascending deg_t."""
        return sorted(self._terms.items(), key=lambda kv: (-kv[0][0], kv[0][1]))

    def coeff(self, a: int, b: int):
        return self._terms.get((a, b), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(k == (0, 0) for k in self._terms)

    def constant(self):
        if not self.is_constant():
            raise ValueError(f"{self} is not constant")
        return self._terms.get((0, 0), 0)

    def is_integral(self) -> bool:
        return all(isinstance(c, int) for c in self._terms.values())

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(a + b for a, b in self._terms)

    def is_homogeneous(self, degree: int | None = None) -> bool:
        degs = {a + b for a, b in self._terms}
        if degree is not None:
            return degs <= {degree}
        return len(degs) <= 1

    # arithmetic -------------------------------------------------------------

    def __add__(self, other):
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return BiPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return BiPoly({k: c * other for k, c in self._terms.items()})
        try:
            other = BiPoly.coerce(other)
        except TypeError:
            return NotImplemented
        out: dict = {}
        for (a1, b1), c1 in self._terms.items():
            for (a2, b2), c2 in other._terms.items():
                k = (a1 + a2, b1 + b2)
                out[k] = out.get(k, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative power")
        result = ONE
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def scale_t(self, factor) -> "BiPoly":
        """Substitute t -> factor * t."""
        return BiPoly({(a, b): c * Fraction(factor) ** b for (a, b), c in self._terms.items()})

    def shift(self, da: int, db: int) -> "BiPoly":
        """Multiply by s^da t^db; negative shifts must divide exactly."""
        out = {}
        for (a, b), c in self._terms.items():
            if a + da < 0 or b + db < 0:
                raise ValueError(f"{self} not divisible by s^{-da} t^{-db}")
            out[(a + da, b + db)] = c
        return BiPoly(out)

    def evaluate(self, s, t):
        total = 0
        for (a, b), c in self._terms.items():
            total += c * s**a * t**b
        return _norm(total) if isinstance(total, (int, Fraction)) else total

    # comparison --------------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, BiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(0, 0): _norm(other)} if other else {})
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self):
        return bool(self._terms)

    # printing ------------------------------------------------------------------

    def to_str(self, star: bool = True) -> str:
        if not self._terms:
            return "0"
        sep = "*" if star else ""
        out = []
        for (a, b), c in self.items():
            factors = []
            if a:
                factors.append("s" if a == 1 else f"s^{a}")
            if b:
                factors.append("t" if b == 1 else f"t^{b}")
            mono = sep.join(factors)
            neg = c < 0
            mag = -c if neg else c
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}{sep}{mono}"
            if out:
                out.append(("-" if neg else "+") + body)
            else:
                out.append(("-" if neg else "") + body)
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"BiPoly({self.to_str()!r})"


ONE = BiPoly.const(1)
ZERO = BiPoly()
S = BiPoly.monomial(1, 0)
T = BiPoly.monomial(0, 1)


# --------------------------------------------------------------------------
# univariate polynomials
# --------------------------------------------------------------------------


class UniPoly:
    """Dense univariate polynomial, coefficients in ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def const(cls, c) -> "UniPoly":
        return cls((c,))

    @classmethod
    def from_roots(cls, roots) -> "UniPoly":
        """Monic product of (x - r)^m over ``roots``, a mapping root -> m or
        an iterable of (root, m) pairs."""
        pairs = roots.items() if hasattr(roots, "items") else roots
        out = cls.const(1)
        for r, m in pairs:
            out = out * cls((-r, 1)) ** m
        return out

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __add__(self, other):
        other = _as_uni(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        return self + (-_as_uni(other))

    def __rsub__(self, other):
        return _as_uni(other) - self

    def __mul__(self, other):
        other = _as_uni(other)
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        out = UniPoly.const(1)
        for _ in range(e):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (UniPoly, int, Fraction)):
            return self.coeffs == _as_uni(other).coeffs
        return NotImplemented

    def __hash__(self):
        return hash(self.coeffs)

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod_linear(self, r):
        """Synthetic division by (x - r); returns (quotient, remainder)."""
        if not self.coeffs:
            return UniPoly(), 0
        acc = 0
        q = []
        for c in reversed(self.coeffs):
            acc = acc * r + c
            q.append(acc)
        rem = q.pop()
        return UniPoly(reversed(q)), rem

    def integer_roots(self):
        """Split off all integer roots.

        Returns ``(roots, rest)`` where ``roots`` maps each integer root to
        its multiplicity and ``rest`` is the cofactor with no integer roots.
        """
        if not self.coeffs:
            raise ValueError("zero polynomial")
        roots: dict = {}
        p = self
        while p.degree > 0 and p.coeffs[0] == 0:
            p = UniPoly(p.coeffs[1:])
            roots[0] = roots.get(0, 0) + 1
        if any(not isinstance(c, int) for c in p.coeffs) or p.degree <= 0:
            return roots, p
        # an integer root divides the constant term
        for d in sorted(_divisors(abs(p.coeffs[0]))):
            for r in (d, -d):
                while p.degree > 0:
                    q, rem = p.divmod_linear(r)
                    if rem != 0:
                        break
                    p = q
                    roots[r] = roots.get(r, 0) + 1
        return roots, p

    def factor_str(self, var: str = "x") -> str:
        """Render as a product of integer linear factors where possible,
        e.g. ``x^5*(x-32)*(x+3)^4``."""
        roots, rest = self.integer_roots()
        parts = []
        for r in sorted(roots, key=lambda r: (r != 0, -r)):
            m = roots[r]
            if r == 0:
                base = var
            else:
                base = f"({var}{'-' if r > 0 else '+'}{abs(r)})"
            parts.append(base if m == 1 else f"{base}^{m}")
        if rest != 1:
            parts.insert(0, f"({rest.to_str(var)})")
        return "*".join(parts) if parts else "1"

    def to_str(self, var: str = "x") -> str:
        if not self.coeffs:
            return "0"
        out = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c == 0:
                continue
            mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            sign = "-" if c < 0 else "+"
            out.append(body if not out and c > 0 else (sign + body if out else "-" + body))
        return "".join(out)

    def __str__(self):
        return self.to_str()

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"


def _as_uni(x) -> UniPoly:
    return x if isinstance(x, UniPoly) else UniPoly.const(x)


def _divisors(m: int):
    if m == 0:
        return {0}
    primes: dict = {}
    p = 2
    while p * p <= m:
        while m % p == 0:
            primes[p] = primes.get(p, 0) + 1
            m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        primes[m] = primes.get(m, 0) + 1
    divs = [1]
    for p, e in primes.items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return set(divs)


# --------------------------------------------------------------------------
# integer matrices
# --------------------------------------------------------------------------


def _int_rows(M):
    rows = M.to_int_rows() if hasattr(M, "to_int_rows") else [list(r) for r in M]
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("matrix is not square")
    return rows


def charpoly_exact(M) -> UniPoly:
    """det(x I - M) for a square integer matrix, by Faddeev-LeVerrier.

    Every division in the recurrence is exact for integer input, so the
    iteration stays in the integers.
    """
    A = _int_rows(M)
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        for i in range(n):
            Mk[i][i] += c_prev
        AM = [[sum(A[i][r] * Mk[r][j] for r in range(n) if A[i][r]) for j in range(n)]
              for i in range(n)]
        tr = sum(AM[i][i] for i in range(n))
        q, rem = divmod(-tr, k)
        assert rem == 0, "non-integral Faddeev-LeVerrier coefficient"
        coeffs[n - k] = q
        Mk = AM
    return UniPoly(coeffs)


def det_bareiss(M) -> int:
    """Determinant by fraction-free (Bareiss) elimination."""
    A = [list(r) for r in _int_rows(M)]
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            for r in range(k + 1, n):
                if A[r][k] != 0:
                    A[k], A[r] = A[r], A[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


# --------------------------------------------------------------------------
# generating function check
# --------------------------------------------------------------------------


def expgf_check(seq, m: int, order: int) -> bool:
    """Check sum_n z^n/n! seq[n] / (t^m m!) == e^{zx} (1 - tz)^{-(1+m)}
    through z^order, coefficientwise in (x, t) with x written as ``s``."""
    if order >= len(seq):
        raise ValueError(f"order {order} exceeds sequence length {len(seq)}")
    norm = math.factorial(m)
    for n in range(order + 1):
        rhs = BiPoly({(n - j, j): Fraction(binom(m + j, j), math.factorial(n - j))
                      for j in range(n + 1)})
        try:
            lhs = BiPoly.coerce(seq[n]).shift(0, -m) * Fraction(1, math.factorial(n) * norm)
        except ValueError:
            return False
        if lhs != rhs:
            return False
    return True
