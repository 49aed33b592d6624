"""Permutations, groups generated by them, cycle indices and orbit counts
on l-subsets.

Points are 0-based internally; cycle notation on input and output is
1-based.  A permutation ``p`` acts as the function i -> p[i], represented
by the 0/1 matrix with a one at (i, p[i]); with ``p * q`` meaning "p, then
q" the matrix of ``p * q`` is ``matrix(p) @ matrix(q)``.
"""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import UniPoly, binom
from .kernels import fixed_subset_counts
from .matrix import ExactMatrix

__all__ = [
    "Permutation", "parse_cycles", "parse_generators", "GroupClosure", "GroupTooLarge",
    "group_closure", "cycle_type", "per_I_tX", "CycleIndexPoly", "cycle_index",
    "burnside_counts", "orbit_partition_counts", "orbit_count_ellsets", "molien_check",
    "trivial_gens", "cyclic_gens", "dihedral_gens", "symmetric_gens",
]

DEFAULT_CAP = 50000


class GroupTooLarge(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Permutation:
    images: tuple

    def __post_init__(self):
        imgs = tuple(self.images)
        object.__setattr__(self, "images", imgs)
        if sorted(imgs) != list(range(len(imgs))):
            raise ValueError(f"{imgs} is not a permutation of range({len(imgs)})")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, cycles, n: int) -> "Permutation":
        """From 0-based cycles, e.g. [(0, 1, 2)]."""
        img = list(range(n))
        seen = set()
        for cyc in cycles:
            for a in cyc:
                if a in seen or not 0 <= a < n:
                    raise ValueError(f"bad cycle point {a + 1} in {cycles}")
                seen.add(a)
            for a, b in zip(cyc, cyc[1:] + cyc[:1]):
                img[a] = b
        return cls(tuple(img))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    def __mul__(self, other: "Permutation") -> "Permutation":
        if other.n != self.n:
            raise ValueError("permutations on different point sets")
        o = other.images
        return Permutation(tuple(o[i] for i in self.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def cycles(self) -> list:
        seen = [False] * self.n
        out = []
        for i in range(self.n):
            if seen[i]:
                continue
            cyc = []
            j = i
            while not seen[j]:
                seen[j] = True
                cyc.append(j)
                j = self.images[j]
            out.append(tuple(cyc))
        return out

    def matrix(self) -> ExactMatrix:
        return ExactMatrix([[1 if self.images[i] == j else 0 for j in range(self.n)]
                            for i in range(self.n)])

    def one_line(self) -> str:
        return "".join(str(i + 1) for i in self.images)

    def __str__(self):
        cyc = [c for c in self.cycles() if len(c) > 1]
        if not cyc:
            return "()"
        return "".join("(" + " ".join(str(i + 1) for i in c) + ")" for c in cyc)


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int | None = None) -> Permutation:
    """Parse 1-based cycle notation such as ``(1 2 3)(4 5)``; ``()`` is the identity."""
    body = text.strip()
    if _CYCLE_RE.sub("", body).strip():
        raise ValueError(f"cannot parse cycle notation {text!r}")
    cycles = []
    for m in _CYCLE_RE.finditer(body):
        pts = [int(x) - 1 for x in re.split(r"[\s,]+", m.group(1).strip()) if x]
        if pts:
            cycles.append(pts)
    top = max((p + 1 for c in cycles for p in c), default=0)
    if n is None:
        n = top
    elif top > n:
        raise ValueError(f"point {top} exceeds n={n}")
    return Permutation.from_cycles(cycles, n)


def parse_generators(text: str, n: int | None = None) -> list:
    """Split ``"(1 2 3 4),(1 3)"`` at top-level commas into permutations
    on a common point set."""
    chunks, depth, cur = [], 0, []
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            chunks.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    chunks.append("".join(cur))
    chunks = [c for c in chunks if c.strip()]
    if not chunks:
        raise ValueError("no generators given")
    top = max(int(x) for c in chunks for x in re.findall(r"\d+", c) or ["0"])
    n = top if n is None else n
    return [parse_cycles(c, n) for c in chunks]


@dataclass(frozen=True)
class GroupClosure:
    n: int
    elements: tuple
    gens: tuple = field(default=())

    @property
    def order(self) -> int:
        return len(self.elements)


def group_closure(gens, cap: int = DEFAULT_CAP, n: int | None = None) -> GroupClosure:
    """All products of the generators, found breadth-first; elements sorted
    by one-line form."""
    gens = tuple(gens)
    if n is None:
        if not gens:
            raise ValueError("need generators or n")
        n = gens[0].n
    if any(g.n != n for g in gens):
        raise ValueError("generators act on different point sets")
    e = Permutation.identity(n)
    seen = {e}
    queue = deque([e])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = x * g
            if y not in seen:
                seen.add(y)
                if len(seen) > cap:
                    raise GroupTooLarge(f"group order exceeds cap {cap}")
                queue.append(y)
    if len(seen) > cap:
        raise GroupTooLarge(f"group order exceeds cap {cap}")
    return GroupClosure(n, tuple(sorted(seen)), gens)


def cycle_type(p: Permutation) -> tuple:
    """(n_X(1), ..., n_X(n)): number of cycles of each length."""
    counts = [0] * p.n
    for c in p.cycles():
        counts[len(c) - 1] += 1
    return tuple(counts)


def per_I_tX(p: Permutation) -> UniPoly:
    """per(I + tX) = prod_l (1 + t^l)^{n_X(l)} for the permutation matrix X."""
    return _per_from_cycle_type(cycle_type(p))


def _per_from_cycle_type(ctype) -> UniPoly:
    out = UniPoly.const(1)
    for length, k in enumerate(ctype, start=1):
        if k:
            out = out * (UniPoly.const(1) + UniPoly([0] * length + [1])) ** k
    return out


@dataclass(frozen=True)
class CycleIndexPoly:
    n: int
    terms: dict  # cycle-type tuple -> Fraction

    def substitute(self, values) -> UniPoly:
        """Z_G with z_l replaced by ``values(l)`` (a UniPoly)."""
        out = UniPoly()
        zs = [values(l) for l in range(1, self.n + 1)]
        for ctype, c in self.terms.items():
            mono = UniPoly.const(c)
            for z, k in zip(zs, ctype):
                if k:
                    mono = mono * z**k
            out = out + mono
        return out

    def __str__(self):
        parts = []
        for ctype in sorted(self.terms, reverse=True):
            c = self.terms[ctype]
            mono = "*".join(f"z{l}" + (f"^{k}" if k > 1 else "")
                            for l, k in enumerate(ctype, start=1) if k)
            coef = "" if c == 1 else f"{c}*"
            parts.append(coef + (mono or "1"))
        return " + ".join(parts)


def cycle_index(G: GroupClosure) -> CycleIndexPoly:
    if not G.elements:
        raise ValueError("empty group")
    counts = Counter(cycle_type(p) for p in G.elements)
    return CycleIndexPoly(G.n, {ct: Fraction(k, G.order) for ct, k in counts.items()})


def burnside_counts(G: GroupClosure, backend=None) -> list:
    """Orbits on l-subsets for every l, as the average number of fixed
    l-subsets per element (fixed subsets found on bitmasks)."""
    total = [0] * (G.n + 1)
    for p in G.elements:
        for l, c in enumerate(fixed_subset_counts(p.images, backend=backend)):
            total[l] += c
    out = []
    for l, v in enumerate(total):
        q, r = divmod(v, G.order)
        assert r == 0, f"Burnside average for l={l} is not integral"
        out.append(q)
    return out


def orbit_partition_counts(G: GroupClosure) -> list:
    """Orbits on l-subsets for every l, by closing each subset under the
    generators directly."""
    n = G.n
    gens = G.gens or G.elements
    bit_imgs = [[1 << g.images[i] for i in range(n)] for g in gens]
    seen = bytearray(1 << n)
    out = [0] * (n + 1)
    for start in range(1 << n):
        if seen[start]:
            continue
        out[bin(start).count("1")] += 1
        seen[start] = 1
        stack = [start]
        while stack:
            m = stack.pop()
            for bi in bit_imgs:
                img = 0
                x = m
                while x:
                    low = x & -x
                    img |= bi[low.bit_length() - 1]
                    x ^= low
                if not seen[img]:
                    seen[img] = 1
                    stack.append(img)
    return out


class OrbitCountMismatch(AssertionError):
    pass


def orbit_count_ellsets(G: GroupClosure, ell: int) -> int:
    if not 0 <= ell <= G.n:
        raise ValueError(f"ell={ell} outside 0..{G.n}")
    a = burnside_counts(G)[ell]
    b = orbit_partition_counts(G)[ell]
    if a != b:
        raise OrbitCountMismatch(f"Burnside gives {a}, orbit partition gives {b}")
    return a


def molien_check(G: GroupClosure) -> tuple:
    """(average of per(I + tX), Z_G(1+t, ..., 1+t^n), sum_l t^l #orbits)."""
    # per(I + tX) depends only on the cycle type of X
    avg = UniPoly()
    for ctype, k in Counter(cycle_type(p) for p in G.elements).items():
        avg = avg + k * _per_from_cycle_type(ctype)
    avg = avg * Fraction(1, G.order)
    Z = cycle_index(G).substitute(lambda l: UniPoly([1] + [0] * (l - 1) + [1]))
    orbits = UniPoly(orbit_partition_counts(G))
    return avg, Z, orbits


# standard generating sets ----------------------------------------------------


def trivial_gens(n: int) -> list:
    return [Permutation.identity(n)]


def cyclic_gens(n: int) -> list:
    return [Permutation(tuple((i + 1) % n for i in range(n)))]


def dihedral_gens(n: int) -> list:
    return [Permutation(tuple((i + 1) % n for i in range(n))),
            Permutation(tuple((-i) % n for i in range(n)))]


def symmetric_gens(n: int) -> list:
    if n < 2:
        return trivial_gens(n)
    return [Permutation.from_cycles([[0, 1]], n), cyclic_gens(n)[0]]


def orbit_count_formula(n: int, ell: int) -> int:
    """Orbit count of the trivial group: every l-subset is its own orbit."""
    return binom(n, ell)
