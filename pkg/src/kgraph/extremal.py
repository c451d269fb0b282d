"""Exact codegree Turán numbers ex_co(n, F) for very small n.

The decision problem "is there an F-free k-graph on n labelled vertices
with minimum codegree >= t" is solved by depth-first search over the
C(n, k) candidate edges in lexicographic order, trying *exclude* before
*include*. The first witness found is therefore the one whose edge
indicator vector (in lexicographic edge order) is least. Branches are cut
when

* an included edge completes a copy of F (only copies through the newest
  edge are looked for), or
* some (k-1)-set can no longer reach codegree t even with every undecided
  edge through it added.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from kgraph.errors import InputError
from kgraph.hypergraph import Hypergraph, min_codegree_report
from kgraph.search import (
    UNLIMITED,
    EdgeExtender,
    HostIndex,
    SearchBudget,
    Status,
    find_embedding,
)


@dataclass(frozen=True)
class ExCoQuery:
    n: int
    k: int
    pattern: Hypergraph
    budget: SearchBudget = field(default=UNLIMITED)

    def __post_init__(self):
        if self.pattern.m == 0:
            raise InputError("the forbidden pattern needs at least one edge")
        if self.pattern.k != self.k:
            raise InputError(f"pattern is {self.pattern.k}-uniform, query asks for k={self.k}")
        if self.n < self.k:
            raise InputError(f"need n >= k, got n={self.n}, k={self.k}")


@dataclass(frozen=True)
class FreeSearchOutcome:
    status: Status
    witness: Hypergraph | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


@dataclass(frozen=True)
class ExCoResult:
    value: int
    witness: Hypergraph
    nodes_explored: int
    exact: bool


class _Budget(Exception):
    pass


def exists_free_with_min_codegree(q: ExCoQuery, t: int, symmetry_breaking: bool = False) -> FreeSearchOutcome:
    """Decide whether some F-free k-graph on n vertices has minimum codegree >= t.

    With ``symmetry_breaking`` the neighbourhood of the (k-1)-set
    {0..k-2} is forced to be an initial segment of {k-1..n-1}; this loses
    no generality (relabel the other vertices) but changes which witness is
    returned.
    """
    n, k = q.n, q.k
    if not 0 <= t <= n - k + 1:
        raise InputError(f"t must lie in [0, {n - k + 1}], got {t}")
    edges = list(combinations(range(n), k))
    coset_id = {s: i for i, s in enumerate(combinations(range(n), k - 1))}
    edge_cosets = [[coset_id[e[:i] + e[i + 1 :]] for i in range(k)] for e in edges]
    reach = [n - k + 1] * len(coset_id)
    # edges through the first (k-1)-set come first in lexicographic order
    head = n - k + 1 if symmetry_breaking else 0
    extender = EdgeExtender(q.pattern)
    chosen: list[tuple[int, ...]] = []
    limit = q.budget.node_limit
    deadline = None if q.budget.time_limit is None else time.monotonic() + q.budget.time_limit
    nodes = 0

    def tick():
        nonlocal nodes
        nodes += 1
        if limit is not None and nodes > limit:
            raise _Budget
        if deadline is not None and not nodes & 255 and time.monotonic() > deadline:
            raise _Budget

    def dfs(i: int, head_open: bool) -> bool:
        if i == len(edges):
            return True
        cosets = edge_cosets[i]
        tick()
        for s in cosets:
            reach[s] -= 1
        if all(reach[s] >= t for s in cosets):
            if dfs(i + 1, head_open and i >= head):
                return True
        for s in cosets:
            reach[s] += 1
        if i < head and not head_open:
            return False
        tick()
        chosen.append(edges[i])
        if q.pattern.n <= n:
            host = Hypergraph(k, n, tuple(chosen))
            if extender.copy_through(host, edges[i], HostIndex(host, twins=False)) is not None:
                chosen.pop()
                return False
        if dfs(i + 1, head_open):
            return True
        chosen.pop()
        return False

    try:
        ok = dfs(0, True)
    except _Budget:
        return FreeSearchOutcome(Status.BUDGET_EXCEEDED, None, nodes)
    if not ok:
        return FreeSearchOutcome(Status.NOT_FOUND, None, nodes)
    return FreeSearchOutcome(Status.FOUND, Hypergraph(k, n, tuple(chosen)), nodes)


def _check_witness(q: ExCoQuery, witness: Hypergraph, value: int):
    if min_codegree_report(witness).min_codegree < value:
        raise AssertionError("extremal witness fails the codegree bound")
    if find_embedding(q.pattern, witness).status is not Status.NOT_FOUND:
        raise AssertionError("extremal witness contains the forbidden pattern")


def ex_co_exact(q: ExCoQuery, symmetry_breaking: bool = False) -> ExCoResult:
    """Largest t for which an F-free witness exists, scanning t downwards
    from n-k+1. ``exact`` is False if any larger t ran out of budget, in
    which case ``value`` is only a certified lower bound."""
    exact = True
    nodes = 0
    for t in range(q.n - q.k + 1, -1, -1):
        out = exists_free_with_min_codegree(q, t, symmetry_breaking)
        nodes += out.nodes_explored
        if out.status is Status.BUDGET_EXCEEDED:
            exact = False
            continue
        if out.found:
            # above a tripped budget the witness may beat t
            value = min_codegree_report(out.witness).min_codegree
            _check_witness(q, out.witness, value)
            return ExCoResult(value, out.witness, nodes, exact)
    # t = 0 is always satisfiable by the edgeless graph
    raise AssertionError("no witness even at t = 0")


@dataclass(frozen=True)
class ProfileEntry:
    n: int
    value: int
    ratio: Fraction


def density_profile(f: Hypergraph, n_list: Iterable[int], budget: SearchBudget = UNLIMITED) -> list[ProfileEntry]:
    profile = []
    for n in n_list:
        res = ex_co_exact(ExCoQuery(n, f.k, f, budget))
        profile.append(ProfileEntry(n, res.value, Fraction(res.value, n)))
    return profile


def brute_force_ex_co(n: int, f: Hypergraph) -> tuple[int, Hypergraph]:
    """Reference value by plain enumeration of all 2^C(n,k) edge sets.

    Codegrees and F-containment are computed naively (every injection of
    V(F) is tried), independently of the search machinery. Returns the
    value and the first maximising edge set in enumeration order.
    """
    from itertools import permutations

    k = f.k
    all_edges = list(combinations(range(n), k))
    cosets = list(combinations(range(n), k - 1))
    best = -1
    best_edges: tuple = ()
    for mask in range(1 << len(all_edges)):
        chosen = [e for i, e in enumerate(all_edges) if mask >> i & 1]
        eset = set(chosen)
        delta = min(sum(1 for e in chosen if set(s) <= set(e)) for s in cosets)
        if delta <= best:
            continue
        contains = f.n <= n and any(
            all(tuple(sorted(phi[v] for v in fe)) in eset for fe in f.edges)
            for phi in permutations(range(n), f.n)
        )
        if not contains:
            best, best_edges = delta, tuple(chosen)
    return best, Hypergraph(k, n, best_edges)
