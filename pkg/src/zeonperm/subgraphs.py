"""Elementary subgraphs of the complete graph K_n with the first n-l
vertices distinguished, and the permanent expansion over them.

A spanning subgraph is elementary when every component is an isolated
vertex, a single edge, or a cycle of length at least 3.  Each cycle is
stored once, starting at its smallest vertex with second vertex smaller
than last; the two orientations are accounted for by the factor 2^c(E).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .algebra import BiPoly, ZERO, S, T

__all__ = ["ElementarySubgraph", "enumerate_elementary", "perm_via_subgraphs", "ENUM_BOUND"]

ENUM_BOUND = 9


@dataclass(frozen=True)
class ElementarySubgraph:
    n: int
    ell: int
    isolated: tuple
    matching_edges: tuple
    cycles: tuple

    @property
    def distinguished(self) -> int:
        return self.n - self.ell

    @property
    def isolated_distinguished(self) -> int:
        """d(E): isolated vertices among the distinguished ones."""
        return sum(1 for v in self.isolated if v < self.distinguished)

    @property
    def isolated_plain(self) -> int:
        return len(self.isolated) - self.isolated_distinguished

    @property
    def num_cycles(self) -> int:
        return len(self.cycles)

    def weight(self) -> BiPoly:
        """(s+t)^d(E) t^(n-d(E))."""
        d = self.isolated_distinguished
        return (S + T) ** d * T ** (self.n - d)

    def weight_factored(self) -> str:
        """wt(E) as (s+t)^d t^k, e.g. "(s+t)t^2"."""
        d = self.isolated_distinguished
        k = self.n - d
        parts = []
        if d:
            parts.append("(s+t)" + (f"^{d}" if d > 1 else ""))
        if k:
            parts.append("t" + (f"^{k}" if k > 1 else ""))
        return "".join(parts) or "1"

    def describe(self) -> str:
        parts = [str(v + 1) for v in self.isolated]
        parts += [f"{a + 1}-{b + 1}" for a, b in self.matching_edges]
        parts += ["(" + " ".join(str(v + 1) for v in c) + ")" for c in self.cycles]
        return " ".join(parts)


def enumerate_elementary(n: int, ell: int) -> list:
    """Every elementary subgraph of K_n^(l), exactly once.

    The smallest unassigned vertex is either left isolated, matched to a
    later vertex, or opens a cycle through two or more later vertices.
    """
    if not 0 <= ell <= n:
        raise ValueError(f"ell={ell} outside 0..{n}")
    if n > ENUM_BOUND:
        raise ValueError(f"enumeration limited to n <= {ENUM_BOUND}")
    out: list = []

    def rec(free: tuple, iso: tuple, edges: tuple, cycles: tuple):
        if not free:
            out.append(ElementarySubgraph(n, ell, iso, edges, cycles))
            return
        v, rest = free[0], free[1:]
        rec(rest, iso + (v,), edges, cycles)
        for idx, w in enumerate(rest):
            rec(rest[:idx] + rest[idx + 1:], iso, edges + ((v, w),), cycles)
        for size in range(2, len(rest) + 1):
            for path in permutations(rest, size):
                if path[0] > path[-1]:
                    continue
                left = tuple(x for x in rest if x not in path)
                rec(left, iso, edges, cycles + ((v,) + path,))

    rec(tuple(range(n)), (), (), ())
    return out


def perm_via_subgraphs(n: int, ell: int) -> BiPoly:
    """P_{n,l} = sum_E 2^c(E) wt(E)."""
    acc = ZERO
    for E in enumerate_elementary(n, ell):
        acc = acc + (1 << E.num_cycles) * E.weight()
    return acc
