"""Immutable k-uniform hypergraphs and their codegree analytics.

Vertices are the integers ``0..n-1``. Edges are stored as strictly
increasing k-tuples in lexicographic order, so two hypergraphs compare
equal exactly when they have the same uniformity, vertex count and edge set.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations, product
from math import comb
from typing import Iterable, Sequence

from kgraph.errors import InputError

Edge = tuple[int, ...]
CoSet = tuple[int, ...]


@dataclass(frozen=True)
class Hypergraph:
    """A k-uniform hypergraph on vertices ``0..n-1``.

    ``edges`` may be given in any order and each edge in any vertex order;
    they are normalised to sorted tuples in lexicographic order. Repeated
    edges collapse to one.
    """

    k: int
    n: int
    edges: tuple[Edge, ...] = field(default=())

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 2:
            raise InputError(f"uniformity must be an integer >= 2, got {self.k!r}")
        if not isinstance(self.n, int) or self.n < 0:
            raise InputError(f"vertex count must be a non-negative integer, got {self.n!r}")
        normalised = set()
        for raw in self.edges:
            e = tuple(sorted(raw))
            if len(e) != self.k or len(set(e)) != self.k:
                raise InputError(f"edge {tuple(raw)} is not a set of {self.k} distinct vertices")
            if e[0] < 0 or e[-1] >= self.n:
                raise InputError(f"edge {tuple(raw)} has a vertex outside [0, {self.n})")
            normalised.add(e)
        object.__setattr__(self, "edges", tuple(sorted(normalised)))

    @classmethod
    def complete(cls, k: int, n: int) -> Hypergraph:
        return cls(k, n, tuple(combinations(range(n), k)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    @cached_property
    def links(self) -> dict[CoSet, tuple[int, ...]]:
        """Map each (k-1)-set of positive codegree to its sorted neighbourhood."""
        acc: dict[CoSet, list[int]] = {}
        for e in self.edges:
            for i, v in enumerate(e):
                acc.setdefault(e[:i] + e[i + 1 :], []).append(v)
        return {s: tuple(sorted(vs)) for s, vs in acc.items()}

    def has_edge(self, vertices: Iterable[int]) -> bool:
        return tuple(sorted(vertices)) in self.edge_set

    def check_coset(self, s: Iterable[int]) -> CoSet:
        """Normalise ``s`` to a sorted (k-1)-tuple, raising InputError if invalid."""
        t = tuple(sorted(s))
        if len(t) != self.k - 1 or len(set(t)) != len(t):
            raise InputError(f"{tuple(s)} is not a set of {self.k - 1} distinct vertices")
        if t and (t[0] < 0 or t[-1] >= self.n):
            raise InputError(f"{tuple(s)} has a vertex outside [0, {self.n})")
        return t

    def __repr__(self):
        return f"Hypergraph(k={self.k}, n={self.n}, m={self.m})"


@dataclass(frozen=True)
class CodegreeReport:
    min_codegree: int
    max_codegree: int
    histogram: dict[int, int]
    argmin: CoSet


def codegree(h: Hypergraph, s: Iterable[int]) -> int:
    """Number of edges of ``h`` containing the (k-1)-set ``s``."""
    return len(h.links.get(h.check_coset(s), ()))


def neighborhood(h: Hypergraph, s: Iterable[int]) -> frozenset[int]:
    """Vertices v such that ``s`` plus v is an edge."""
    return frozenset(h.links.get(h.check_coset(s), ()))


def common_neighborhood(h: Hypergraph, sets: Sequence[Iterable[int]]) -> frozenset[int]:
    if not sets:
        raise InputError("common_neighborhood needs at least one (k-1)-set")
    result = neighborhood(h, sets[0])
    for s in sets[1:]:
        result &= neighborhood(h, s)
    return result


def min_codegree_report(h: Hypergraph) -> CodegreeReport:
    """Codegree statistics over all C(n, k-1) sets, zero-codegree sets included.

    ``argmin`` is the lexicographically first (k-1)-set attaining the minimum.
    """
    if h.n < h.k - 1:
        raise InputError(f"need at least {h.k - 1} vertices, hypergraph has {h.n}")
    links = h.links
    hist: Counter[int] = Counter()
    best = None
    argmin: CoSet = ()
    for s in combinations(range(h.n), h.k - 1):
        d = len(links.get(s, ()))
        hist[d] += 1
        if best is None or d < best:
            best, argmin = d, s
    return CodegreeReport(
        min_codegree=best,
        max_codegree=max(hist),
        histogram=dict(sorted(hist.items())),
        argmin=argmin,
    )


def min_codegree(h: Hypergraph) -> int:
    return min_codegree_report(h).min_codegree


def blow_up(f: Hypergraph, t: int) -> Hypergraph:
    """Replace every vertex v by t copies ``v*t .. v*t + t-1``."""
    if not isinstance(t, int) or t < 1:
        raise InputError(f"blow-up factor must be a positive integer, got {t!r}")
    copies = [range(v * t, v * t + t) for v in range(f.n)]
    edges = [c for e in f.edges for c in product(*(copies[v] for v in e))]
    return Hypergraph(f.k, f.n * t, tuple(edges))


def induced_subgraph(h: Hypergraph, keep: Iterable[int]) -> Hypergraph:
    """Restrict to ``keep``, relabelling kept vertices 0.. in ascending order."""
    kept = sorted(set(keep))
    if kept and (kept[0] < 0 or kept[-1] >= h.n):
        raise InputError(f"vertex set contains indices outside [0, {h.n})")
    index = {v: i for i, v in enumerate(kept)}
    edges = [tuple(index[v] for v in e) for e in h.edges if all(v in index for v in e)]
    return Hypergraph(h.k, len(kept), tuple(edges))


def remove_vertices(h: Hypergraph, drop: Iterable[int]) -> Hypergraph:
    dropped = set(drop)
    if any(v < 0 or v >= h.n for v in dropped):
        raise InputError(f"vertex set contains indices outside [0, {h.n})")
    return induced_subgraph(h, (v for v in range(h.n) if v not in dropped))


def count_labeled_embeddings(f: Hypergraph, h: Hypergraph) -> int:
    """Number of injective edge-preserving maps V(f) -> V(h).

    Labeled count; divide by the automorphism count of ``f`` for copies.
    """
    from kgraph.search import count_maps

    if f.k != h.k:
        raise InputError(f"uniformity mismatch: pattern {f.k}, host {h.k}")
    if f.n > h.n:
        return 0
    return count_maps(f, h, injective=True)


def codegree_sum_identity(h: Hypergraph) -> bool:
    """Sum of d(S) over all (k-1)-sets equals k|E|."""
    hist = min_codegree_report(h).histogram
    total = sum(d * c for d, c in hist.items())
    return total == h.k * h.m and sum(hist.values()) == comb(h.n, h.k - 1)
