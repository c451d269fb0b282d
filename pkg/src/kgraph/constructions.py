"""Generators for zycles, the F_p hypergraphs, layered hosts and the
recursive patterns G_ell^r.

All layouts are deterministic: parts occupy consecutive index ranges and
pattern blocks follow lexicographic order, so two constructions that should
agree up to an order-preserving relabelling compare equal after
:func:`kgraph.hypergraph.induced_subgraph`.

Choosing parameters that realise the intended asymptotic regime (p large
compared with ell, and 1/eta large compared with p, n larger still) is left
to the caller; every function here only enforces exact finite
preconditions.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement, product
from math import comb
from typing import NamedTuple, Union

from sympy import isprime

from kgraph.errors import ParameterError, SizeError
from kgraph.hypergraph import Hypergraph, blow_up
from kgraph.search import fp_edge_rule

DEFAULT_VERTEX_BUDGET = 10**5

RationalLike = Union[Fraction, str, tuple, int]


def as_rational(value: RationalLike) -> Fraction:
    """Accept a Fraction, an ``"a/b"`` string or an ``(a, b)`` pair. Floats are refused."""
    if isinstance(value, bool) or isinstance(value, float):
        raise ParameterError(f"eta must be an exact rational, got {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, tuple) and len(value) == 2:
        return Fraction(int(value[0]), int(value[1]))
    if isinstance(value, str):
        num, sep, den = value.strip().partition("/")
        try:
            if not sep:
                return Fraction(int(num))
            return Fraction(int(num), int(den))
        except (ValueError, ZeroDivisionError):
            pass
    raise ParameterError(f"cannot read {value!r} as an exact rational a/b")


@dataclass(frozen=True)
class PartLabeling:
    part_of: tuple[int, ...]
    part_count: int

    def part(self, i: int) -> list[int]:
        return [v for v, q in enumerate(self.part_of) if q == i]

    def sizes(self) -> list[int]:
        sizes = [0] * self.part_count
        for q in self.part_of:
            sizes[q] += 1
        return sizes


@dataclass(frozen=True)
class HostParams:
    k: int
    r: int
    eta: Fraction
    n: int
    p: int | None = None

    @property
    def layer_size(self) -> int:
        # floor((1 - eta) n / r) in integers
        return (self.eta.denominator - self.eta.numerator) * self.n // (self.eta.denominator * self.r)

    @property
    def last_size(self) -> int:
        return self.n - (self.r - 1) * self.layer_size

    def validate(self):
        if self.k < 2:
            raise ParameterError(f"k must be >= 2, got {self.k}")
        if self.r < 1:
            raise ParameterError(f"r must be >= 1, got {self.r}")
        if not 0 < self.eta < 1:
            raise ParameterError(f"eta must lie strictly between 0 and 1, got {self.eta}")
        if self.n < 0:
            raise ParameterError(f"n must be non-negative, got {self.n}")
        if self.r > 1 and self.layer_size < self.k - 1:
            raise ParameterError(
                f"layer size floor((1-eta)n/r) = {self.layer_size} is below k-1 = {self.k - 1}"
            )
        if self.p is not None:
            if not isprime(self.p):
                raise ParameterError(f"p={self.p} is not prime")
            if self.last_size % self.p:
                raise ParameterError(
                    f"p={self.p} does not divide n - (r-1)*floor((1-eta)n/r) = {self.last_size}"
                )


class ReducedParams(NamedTuple):
    n_prime: int
    eta_prime: Fraction


class BlowupCopy(NamedTuple):
    vertex: int
    copy: int


class ZycleBlock(NamedTuple):
    subset: tuple[int, ...]
    position: int


@dataclass(frozen=True)
class GLayout:
    role_of: tuple[BlowupCopy | ZycleBlock, ...]

    def block(self, subset) -> list[int]:
        subset = tuple(subset)
        return [v for v, role in enumerate(self.role_of) if isinstance(role, ZycleBlock) and role.subset == subset]

    def blocks(self) -> list[tuple[int, ...]]:
        seen = []
        for role in self.role_of:
            if isinstance(role, ZycleBlock) and (not seen or seen[-1] != role.subset):
                seen.append(role.subset)
        return seen

    def copies(self, v: int) -> list[int]:
        return [u for u, role in enumerate(self.role_of) if isinstance(role, BlowupCopy) and role.vertex == v]


def _zycle_edges(k: int, ell: int, offset: int = 0) -> list[tuple[int, ...]]:
    w = k - 1
    edges = []
    for i in range(ell):
        body = tuple(offset + i * w + j for j in range(w))
        nxt = (i + 1) % ell
        for j in range(w):
            edges.append(body + (offset + nxt * w + j,))
    return edges


def make_zycle(k: int, ell: int) -> Hypergraph:
    """The k-uniform zycle of length ell.

    Vertex v_i^j (1-based i in [ell], j in [k-1]) is index (i-1)(k-1) + (j-1).
    For k = 2 the construction is the cycle C_ell (ell = 2 degenerates to a
    single edge).
    """
    if k < 2 or ell < k:
        raise ParameterError(f"a zycle needs ell >= k >= 2, got k={k}, ell={ell}")
    return Hypergraph(k, ell * (k - 1), tuple(_zycle_edges(k, ell)))


def _fp_edges(k: int, p: int, part: int, offset: int = 0) -> list[tuple[int, ...]]:
    edges = []
    for labels in combinations_with_replacement(range(p), k):
        if not fp_edge_rule(labels, p):
            continue
        groups = []
        for label in sorted(set(labels)):
            start = offset + label * part
            groups.append(combinations(range(start, start + part), labels.count(label)))
        for choice in product(*groups):
            edges.append(tuple(v for chunk in choice for v in chunk))
    return edges


def make_fp(k: int, p: int, n: int) -> tuple[Hypergraph, PartLabeling]:
    """The hypergraph F_p^(k)(n) with parts V_0..V_{p-1} of size n/p laid
    out consecutively; ``part_of`` is the field label of each vertex."""
    if k < 2:
        raise ParameterError(f"k must be >= 2, got {k}")
    if not isprime(p):
        raise ParameterError(f"p={p} is not prime")
    if n % p:
        raise ParameterError(f"p={p} does not divide n={n}")
    part = n // p
    if part < k:
        raise ParameterError(f"parts of size n/p={part} are smaller than k={k}")
    labels = PartLabeling(tuple(v // part for v in range(n)), p)
    return Hypergraph(k, n, tuple(_fp_edges(k, p, part))), labels


def host_params(k, r, eta, n, p=None) -> HostParams:
    params = HostParams(k, r, as_rational(eta), n, p)
    params.validate()
    return params


def make_host(k: int, r: int, eta: RationalLike, n: int, p: int | None = None) -> tuple[Hypergraph, PartLabeling]:
    """The layered host H^r(eta, n), or H^r_{F_p}(eta, n) when ``p`` is given.

    Parts V_1..V_{r-1} have size floor((1-eta)n/r) and V_r takes the rest;
    part index i-1 in the labeling is V_i. Edges are the k-sets meeting at
    least two parts, plus a copy of F_p^(k)(|V_r|) on V_r.
    """
    params = host_params(k, r, eta, n, p)
    sizes = [params.layer_size] * (r - 1) + [params.last_size]
    part_of = tuple(i for i, size in enumerate(sizes) for _ in range(size))
    edges = [e for e in combinations(range(n), k) if part_of[e[0]] != part_of[e[-1]]]
    if p is not None:
        last = sizes[-1]
        if last // p < k:
            raise ParameterError(f"|V_r|/p = {last // p} is smaller than k={k}")
        edges += _fp_edges(k, p, last // p, offset=n - last)
    return Hypergraph(k, n, tuple(edges)), PartLabeling(part_of, r)


def reduce_host_params(r: int, eta: RationalLike, n: int) -> ReducedParams:
    """Parameters (n', eta') of the host left after deleting one layer V_i, i < r.

    n' = n - L and eta' = 1 - (r-1)L/n' with L = floor((1-eta)n/r); the
    layer size floor((1-eta')n'/(r-1)) is again L.
    """
    if r < 2:
        raise ParameterError(f"reduction needs r >= 2, got {r}")
    eta = as_rational(eta)
    if not 0 < eta < 1:
        raise ParameterError(f"eta must lie strictly between 0 and 1, got {eta}")
    layer = HostParams(2, r, eta, n).layer_size
    n_prime = n - layer
    if n_prime <= 0:
        raise ParameterError(f"reduced vertex count n'={n_prime} is not positive")
    eta_prime = 1 - Fraction((r - 1) * layer, n_prime)
    if not 0 < eta_prime < 1:
        raise ParameterError(f"reduced eta'={eta_prime} is not strictly between 0 and 1")
    return ReducedParams(n_prime, eta_prime)


def g_vertex_count(k: int, ell: int, r: int) -> int:
    count = ell * (k - 1)
    for level in range(2, r + 1):
        count = (k - 1) * count + comb(count, level - 1) * ell * (k - 1)
    return count


def make_g(k: int, ell: int, r: int, max_vertices: int = DEFAULT_VERTEX_BUDGET) -> tuple[Hypergraph, GLayout]:
    """The recursive pattern G_ell^r.

    G_ell^1 is the zycle. For r > 1 the (k-1)-fold blow-up of G_ell^{r-1}
    fills the leading indices (copy j of v at v(k-1) + j); then, for every
    (r-1)-subset S of V(G_ell^{r-1}) in lexicographic order, a fresh zycle
    block V_S is appended and every copy tuple {x_v^1..x_v^{k-1}}, v in S,
    is joined to every vertex of V_S.
    """
    if r < 1:
        raise ParameterError(f"r must be >= 1, got {r}")
    if k < 3 or ell < k:
        raise ParameterError(f"need ell >= k >= 3, got k={k}, ell={ell}")
    total = g_vertex_count(k, ell, r)
    if total > max_vertices:
        raise SizeError(f"G_{ell}^{r} for k={k} has {total} vertices, above the budget of {max_vertices}")
    zycle = make_zycle(k, ell)
    if r == 1:
        return zycle, GLayout(tuple(ZycleBlock((), i) for i in range(zycle.n)))
    prev, _ = make_g(k, ell, r - 1, max_vertices)
    w = k - 1
    base = blow_up(prev, w)
    roles: list[BlowupCopy | ZycleBlock] = [BlowupCopy(v, j) for v in range(prev.n) for j in range(w)]
    edges = list(base.edges)
    block_size = zycle.n
    offset = base.n
    for subset in combinations(range(prev.n), r - 1):
        edges += _zycle_edges(k, ell, offset)
        block = range(offset, offset + block_size)
        for v in subset:
            copies = tuple(range(v * w, v * w + w))
            edges += [copies + (y,) for y in block]
        roles += [ZycleBlock(subset, i) for i in range(block_size)]
        offset += block_size
    return Hypergraph(k, offset, tuple(edges)), GLayout(tuple(roles))
