"""Backtracking search for embeddings and homomorphisms between k-graphs.

The host is indexed by *shadows*: for every set T that lies inside some
host edge (1 <= |T| <= k-1), a bitmask of the vertices x with T + x still
inside a host edge. For |T| = k-1 this is exactly the neighbourhood N(T).
A pattern vertex about to be placed is restricted, for each pattern edge
through it, to the shadow of the images of that edge's already placed
vertices. Repeated images (possible in homomorphism mode) never occur in a
shadow key, so per-edge distinctness comes for free.
"""

from __future__ import annotations

import enum
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations, permutations, product
from typing import Mapping, Sequence

from kgraph.errors import InputError, ParameterError, SizeError
from kgraph.hypergraph import Hypergraph

THREADS_ENV = "KGRAPH_THREADS"


class Status(enum.Enum):
    FOUND = "found"
    NOT_FOUND = "not_found_exhausted"
    BUDGET_EXCEEDED = "budget_exceeded"


@dataclass(frozen=True)
class SearchBudget:
    node_limit: int | None = None
    time_limit: float | None = None

    def __post_init__(self):
        if self.node_limit is not None and self.node_limit <= 0:
            raise InputError("node_limit must be positive")
        if self.time_limit is not None and self.time_limit <= 0:
            raise InputError("time_limit must be positive")


UNLIMITED = SearchBudget()


@dataclass(frozen=True)
class VertexMap:
    assignment: tuple[int, ...]
    mode: str = "injective"

    def as_dict(self) -> dict[int, int]:
        return dict(enumerate(self.assignment))


@dataclass(frozen=True)
class SearchOutcome:
    status: Status
    witness: VertexMap | None
    nodes_explored: int

    @property
    def found(self) -> bool:
        return self.status is Status.FOUND


def validate_map(f: Hypergraph, h: Hypergraph, assignment: Sequence[int], injective: bool) -> bool:
    """Check a candidate map edge by edge, without using any search index."""
    if len(assignment) != f.n or any(not 0 <= x < h.n for x in assignment):
        return False
    if injective and len(set(assignment)) != len(assignment):
        return False
    for e in f.edges:
        image = {assignment[v] for v in e}
        if len(image) != f.k or not h.has_edge(image):
            return False
    return True


def search_order(f: Hypergraph, first: Sequence[int] = ()) -> list[int]:
    """Static placement order: ``first`` verbatim, then repeatedly the
    smallest unplaced vertex sharing an edge with a placed one (or the
    smallest unplaced vertex if none does)."""
    incident: list[list[tuple[int, ...]]] = [[] for _ in range(f.n)]
    for e in f.edges:
        for v in e:
            incident[v].append(e)
    order = list(first)
    placed = set(order)
    touching = set()
    for v in order:
        for e in incident[v]:
            touching.update(e)
    while len(order) < f.n:
        frontier = touching - placed
        v = min(frontier) if frontier else min(set(range(f.n)) - placed)
        order.append(v)
        placed.add(v)
        for e in incident[v]:
            touching.update(e)
    return order


def twin_classes(h: Hypergraph) -> list[int]:
    """Class id per vertex, where x and y share a class iff swapping x and y
    is an automorphism of ``h`` (an equivalence relation)."""
    incident: list[list[frozenset[int]]] = [[] for _ in range(h.n)]
    for e in h.edges:
        fe = frozenset(e)
        for v in e:
            incident[v].append(fe)

    def link_avoiding(x, y):
        return {e - {x} for e in incident[x] if y not in e}

    reps: list[int] = []
    cls = [0] * h.n
    for x in range(h.n):
        for c, y in enumerate(reps):
            if len(incident[x]) == len(incident[y]) and link_avoiding(x, y) == link_avoiding(y, x):
                cls[x] = c
                break
        else:
            cls[x] = len(reps)
            reps.append(x)
    return cls


class HostIndex:
    def __init__(self, h: Hypergraph, twins: bool = True):
        self.n = h.n
        self.twin_class = twin_classes(h) if twins else None
        self.full = (1 << h.n) - 1
        shadows: dict[tuple[int, ...], int] = {}
        k = h.k
        for e in h.edges:
            for size in range(1, k):
                for t in combinations(e, size):
                    bits = 0
                    for x in e:
                        if x not in t:
                            bits |= 1 << x
                    shadows[t] = shadows.get(t, 0) | bits
        self.shadows = shadows


class Plan:
    """Per-position constraint lists for one pattern and placement order."""

    def __init__(self, f: Hypergraph, order: Sequence[int]):
        self.order = tuple(order)
        self.n = f.n
        pos = {v: i for i, v in enumerate(order)}
        constraints: list[set[tuple[int, ...]]] = [set() for _ in order]
        for e in f.edges:
            ranked = sorted(pos[v] for v in e)
            for j in range(1, len(ranked)):
                constraints[ranked[j]].add(tuple(ranked[:j]))
        # most restrictive (largest placed set) first
        self.constraints = [sorted(c, key=lambda c: -len(c)) for c in constraints]


class _BudgetHit(Exception):
    pass


class _Runner:
    def __init__(self, plan: Plan, index: HostIndex, injective: bool, budget: SearchBudget):
        self.plan = plan
        self.index = index
        self.injective = injective
        self.node_limit = budget.node_limit
        self.deadline = None if budget.time_limit is None else time.monotonic() + budget.time_limit
        self.nodes = 0
        self.images = [0] * plan.n
        self.count = 0

    def _tick(self):
        self.nodes += 1
        if self.node_limit is not None and self.nodes > self.node_limit:
            raise _BudgetHit
        if self.deadline is not None and not self.nodes & 255 and time.monotonic() > self.deadline:
            raise _BudgetHit

    def _candidates(self, i: int, used: int, fixed: Mapping[int, int]) -> int:
        cand = self.index.full
        if i in fixed:
            cand &= 1 << fixed[i]
        if self.injective:
            cand &= ~used
        images = self.images
        shadows = self.index.shadows
        for placed in self.plan.constraints[i]:
            key = tuple(sorted(images[j] for j in placed))
            cand &= shadows.get(key, 0)
            if not cand:
                return 0
        return cand

    def first(self, fixed: Mapping[int, int]) -> tuple[int, ...] | None:
        """Lexicographically first map in placement order; positions in
        ``fixed`` are pinned to the given host vertex.

        If candidate x failed and y is a twin of x, y fails as well provided
        neither appears among the current images or the pinned vertices (the
        swap fixes the partial map), so y is skipped. Only failing branches
        are cut, so the first witness is unchanged.
        """
        twin = self.index.twin_class
        pinned = 0
        for x in fixed.values():
            pinned |= 1 << x

        def dfs(i, used):
            if i == self.plan.n:
                return True
            cand = self._candidates(i, used, fixed)
            blocked = used | pinned
            failed = set()
            while cand:
                low = cand & -cand
                cand ^= low
                x = low.bit_length() - 1
                free = twin is not None and not blocked & low
                if free and twin[x] in failed:
                    continue
                self._tick()
                self.images[i] = x
                if dfs(i + 1, used | low):
                    return True
                if free:
                    failed.add(twin[x])
            return False

        if dfs(0, 0):
            return tuple(self.images)
        return None

    def count_all(self) -> int:
        def dfs(i, used):
            if i == self.plan.n:
                self.count += 1
                return
            cand = self._candidates(i, used, {})
            while cand:
                low = cand & -cand
                cand ^= low
                self._tick()
                self.images[i] = low.bit_length() - 1
                dfs(i + 1, used | low)

        dfs(0, 0)
        return self.count


def _to_assignment(plan: Plan, images: Sequence[int]) -> tuple[int, ...]:
    out = [0] * plan.n
    for i, v in enumerate(plan.order):
        out[v] = images[i]
    return tuple(out)


def _search_branch(f, h, injective, budget, root):
    # ascending placement keeps the witness lexicographically least
    plan = Plan(f, range(f.n))
    runner = _Runner(plan, HostIndex(h), injective, budget)
    fixed = {} if root is None else {0: root}
    try:
        images = runner.first(fixed)
    except _BudgetHit:
        return Status.BUDGET_EXCEEDED, None, runner.nodes
    if images is None:
        return Status.NOT_FOUND, None, runner.nodes
    return Status.FOUND, _to_assignment(plan, images), runner.nodes


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(THREADS_ENV, "1")))
    except ValueError:
        return 1


def _find(f, h, budget, injective, workers):
    if f.k != h.k:
        raise InputError(f"uniformity mismatch: pattern {f.k}, host {h.k}")
    budget = budget or UNLIMITED
    mode = "injective" if injective else "homomorphism"
    if workers is None:
        workers = default_workers()
    if f.n == 0:
        return SearchOutcome(Status.FOUND, VertexMap((), mode), 0)
    if (injective and f.n > h.n) or h.n == 0:
        return SearchOutcome(Status.NOT_FOUND, None, 0)
    if workers <= 1:
        results = [_search_branch(f, h, injective, budget, None)]
    else:
        # root branches in parallel; the first non-exhausted branch in root order
        # decides, which reproduces the sequential answer
        roots = list(range(h.n))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_search_branch, *zip(*[(f, h, injective, budget, r) for r in roots])))
    nodes = sum(r[2] for r in results)
    for status, assignment, _ in results:
        if status is Status.FOUND:
            witness = VertexMap(assignment, mode)
            if not validate_map(f, h, assignment, injective):
                raise AssertionError("search produced an invalid witness")
            return SearchOutcome(status, witness, nodes)
        if status is Status.BUDGET_EXCEEDED:
            return SearchOutcome(status, None, nodes)
    return SearchOutcome(Status.NOT_FOUND, None, nodes)


def find_embedding(f: Hypergraph, h: Hypergraph, budget: SearchBudget | None = None,
                   workers: int | None = None) -> SearchOutcome:
    """Search for an injective edge-preserving map from ``f`` into ``h``.

    Pattern vertices are placed in ascending order and host candidates are
    tried in ascending order, so the witness is the lexicographically least
    embedding.

    ``NOT_FOUND`` is only reported after the search space is exhausted;
    a tripped budget gives ``BUDGET_EXCEEDED``.
    """
    return _find(f, h, budget, True, workers)


def find_homomorphism(f: Hypergraph, h: Hypergraph, budget: SearchBudget | None = None,
                      workers: int | None = None) -> SearchOutcome:
    """Like :func:`find_embedding` without injectivity. Each pattern edge
    still needs k distinct images forming a host edge."""
    return _find(f, h, budget, False, workers)


def count_maps(f: Hypergraph, h: Hypergraph, injective: bool = True) -> int:
    if f.n == 0:
        return 1
    plan = Plan(f, search_order(f))
    return _Runner(plan, HostIndex(h), injective, UNLIMITED).count_all()


class EdgeExtender:
    """Answers "does h contain a copy of f through edge e?" for one fixed
    pattern, reusing per-pattern plans across many hosts."""

    def __init__(self, f: Hypergraph):
        self.f = f
        self.plans = []
        for fe in f.edges:
            plan = Plan(f, search_order(f, fe))
            self.plans.append(plan)

    def copy_through(self, h: Hypergraph, e: Sequence[int], index: HostIndex | None = None) -> tuple[int, ...] | None:
        if self.f.n > h.n:
            return None
        index = index or HostIndex(h, twins=False)
        k = self.f.k
        for plan in self.plans:
            for image in permutations(e):
                fixed = {i: image[i] for i in range(k)}
                runner = _Runner(plan, index, True, UNLIMITED)
                images = runner.first(fixed)
                if images is not None:
                    return _to_assignment(plan, images)
        return None


def fp_edge_rule(labels: Sequence[int], p: int) -> bool:
    """Whether a k-set whose part labels are ``labels`` is an edge of F_p^(k)."""
    if sum(labels) % p == 0 and any(labels):
        return True
    return sorted(labels) == [0] * (len(labels) - 1) + [1]


def zycle_fp_label_witness(k: int, ell: int, p: int, max_assignments: int = 10**7) -> tuple[int, ...] | None:
    """First label assignment (in lexicographic order over [0, p)^(ell*(k-1)))
    under which every zycle edge obeys the F_p edge rule, or None.

    The zycle vertex v_i^j is position (i-1)(k-1) + (j-1).
    """
    from sympy import isprime

    from kgraph.constructions import make_zycle

    if not (ell >= k >= 3):
        raise ParameterError(f"need ell >= k >= 3, got k={k}, ell={ell}")
    if not isprime(p):
        raise ParameterError(f"p={p} is not prime")
    size = ell * (k - 1)
    if p**size > max_assignments:
        raise SizeError(f"{p}^{size} label assignments exceed the budget of {max_assignments}")
    edges = make_zycle(k, ell).edges
    for labels in product(range(p), repeat=size):
        if all(fp_edge_rule([labels[v] for v in e], p) for e in edges):
            return labels
    return None


def zycle_in_fp_by_labels(k: int, ell: int, p: int, max_assignments: int = 10**7) -> bool:
    """Decide whether Z_ell^(k) embeds into F_p^(k)(n) (all parts of size at
    least ell*(k-1)) by exhausting label assignments instead of vertices."""
    return zycle_fp_label_witness(k, ell, p, max_assignments) is not None
