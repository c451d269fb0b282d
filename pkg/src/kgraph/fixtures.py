"""Reproducible finite fixtures for the constructions, run by ``kgraph verify``.

Each fixture returns ``(passed, detail)``; :func:`run_suite` adds timing
and checks the per-fixture runtime limit.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Callable

from kgraph.constructions import make_fp, make_g, make_host, make_zycle, reduce_host_params
from kgraph.errors import InputError
from kgraph.extremal import ExCoQuery, brute_force_ex_co, density_profile, ex_co_exact
from kgraph.hypergraph import (
    Hypergraph,
    blow_up,
    common_neighborhood,
    induced_subgraph,
    min_codegree,
    min_codegree_report,
    remove_vertices,
)
from kgraph.search import (
    Status,
    find_embedding,
    find_homomorphism,
    validate_map,
    zycle_fp_label_witness,
)

# statuses of Z_3^(3) in F_p^(3)(6p), frozen from the two exhaustive oracles
ZYCLE_33_IN_FP = {3: True, 5: False, 7: False}

EX_CO_K3 = {4: 2, 5: 2, 6: 3}


@dataclass(frozen=True)
class Fixture:
    key: str
    statement: str
    time_limit: float
    check: Callable[[], tuple[bool, str]]


@dataclass(frozen=True)
class FixtureResult:
    key: str
    statement: str
    passed: bool
    detail: str
    seconds: float


def fp_codegree() -> tuple[bool, str]:
    observed = {}
    for p, n in [(3, 9), (3, 18), (5, 15), (7, 21)]:
        observed[(p, n)] = (min_codegree(make_fp(3, p, n)[0]), n // p)
    ok = all(got == want for got, want in observed.values())
    detail = ", ".join(f"(p={p},n={n}): delta={got} vs n/p={want}" for (p, n), (got, want) in observed.items())
    return ok, detail


def zycle_fp_boundary() -> tuple[bool, str]:
    parts = []
    ok = True
    for p, expected in ZYCLE_33_IN_FP.items():
        witness = zycle_fp_label_witness(3, 3, p)
        by_labels = witness is not None
        by_search = find_embedding(make_zycle(3, 3), make_fp(3, p, 6 * p)[0]).found
        ok &= by_labels == by_search == expected
        parts.append(f"p={p}: labels={by_labels} search={by_search}")
    ok &= zycle_fp_label_witness(3, 3, 3) == (1,) * 6
    return ok, "; ".join(parts)


def host_codegree() -> tuple[bool, str]:
    with_p = min_codegree(make_host(3, 2, "1/5", 30, 3)[0])
    without_p = min_codegree(make_host(3, 2, "1/5", 30)[0])
    bound = (Fraction(1, 2) + Fraction(1, 10)) * 30
    ok = with_p == 18 and with_p >= bound and without_p == 18
    return ok, f"delta(with p=3)={with_p}, bound={bound}, delta(no p)={without_p}"


def reduction_isomorphism() -> tuple[bool, str]:
    parts = []
    ok = True
    for r, eta, n, p, expected in [(2, "1/5", 30, 3, (18, Fraction(1, 3))), (3, "1/10", 30, 3, (21, Fraction(1, 7)))]:
        host, labels = make_host(3, r, eta, n, p)
        reduced = reduce_host_params(r, eta, n)
        smaller = make_host(3, r - 1, reduced.eta_prime, reduced.n_prime, p)[0]
        same = remove_vertices(host, labels.part(0)) == smaller
        ok &= same and tuple(reduced) == expected
        parts.append(f"r={r}: (n',eta')=({reduced.n_prime},{reduced.eta_prime}) equal={same}")
    return ok, "; ".join(parts)


def common_neighbourhood_identity() -> tuple[bool, str]:
    host, labels = make_host(3, 3, "1/10", 30, 3)
    v1, v2, v3 = (labels.part(i) for i in range(3))
    identity = all(
        common_neighborhood(host, [s1, s2]) == frozenset(v3)
        for s1 in combinations(v1, 2)
        for s2 in combinations(v2, 2)
    )
    core = induced_subgraph(host, v3) == make_fp(3, 3, len(v3))[0]
    return identity and core, f"|V_3|={len(v3)}, intersection identity={identity}, core is F_3={core}"


def recursive_pattern() -> tuple[bool, str]:
    k, ell, r = 3, 3, 2
    g, layout = make_g(k, ell, r)
    base = make_zycle(k, ell)
    blocks = comb(base.n, r - 1)
    want_v = (k - 1) * base.n + blocks * ell * (k - 1)
    want_e = (k - 1) ** k * base.m + blocks * ell * (k - 1) * (1 + r - 1)
    zycle_blocks = all(induced_subgraph(g, layout.block(s)) == base for s in layout.blocks())
    ok = (g.n, g.m) == (48, 120) == (want_v, want_e) and zycle_blocks and len(layout.blocks()) == blocks
    return ok, f"|V|={g.n} (closed form {want_v}), |E|={g.m} (closed form {want_e}), blocks are zycles={zycle_blocks}"


def blow_up_growth() -> tuple[bool, str]:
    out = find_embedding(make_zycle(3, 6), blow_up(make_zycle(3, 3), 2))
    return out.found, f"status={out.status.value}, witness={out.witness and out.witness.assignment}"


def homomorphism_surrogate() -> tuple[bool, str]:
    z6, z3 = make_zycle(3, 6), make_zycle(3, 3)
    hom = find_homomorphism(z6, z3)
    emb = find_embedding(z6, blow_up(z3, z6.n))
    return hom.found and emb.found, f"hom={hom.status.value}, embedding into blow-up={emb.status.value}"


def exact_extremal() -> tuple[bool, str]:
    k3 = Hypergraph.complete(2, 3)
    k4 = Hypergraph.complete(3, 4)
    profile = density_profile(k3, [4, 5, 6])
    values = {e.n: e.value for e in profile}
    ratios = [e.ratio for e in profile]
    ok = values == EX_CO_K3 and ratios == [Fraction(1, 2), Fraction(2, 5), Fraction(1, 2)]
    ok &= all(e.value == brute_force_ex_co(e.n, k3)[0] for e in profile[:2])
    mismatches = []
    for f, ns in [(k3, range(2, 6)), (k4, range(3, 6))]:
        for n in ns:
            got = ex_co_exact(ExCoQuery(n, f.k, f))
            want = brute_force_ex_co(n, f)[0]
            if not got.exact or got.value != want:
                mismatches.append((f.k, n, got.value, want))
    ok &= not mismatches
    return ok, f"ex_co(n,K3)={values}, ratios={[str(x) for x in ratios]}, mismatches vs enumeration={mismatches}"


def random_instance(rng: random.Random, k: int = 3):
    pn = rng.randint(k, 5)
    hn = rng.randint(pn, 9)
    pm = rng.randint(1, min(4, comb(pn, k)))
    pattern = Hypergraph(k, pn, tuple(rng.sample(list(combinations(range(pn), k)), pm)))
    density = rng.choice([0.3, 0.5, 0.7, 0.9])
    host = Hypergraph(k, hn, tuple(e for e in combinations(range(hn), k) if rng.random() < density))
    return pattern, host


def brute_force_first_embedding(f: Hypergraph, h: Hypergraph):
    """Lexicographically least injection, by enumeration."""
    eset = h.edge_set
    for phi in permutations(range(h.n), f.n):
        if all(tuple(sorted(phi[v] for v in e)) in eset for e in f.edges):
            return phi
    return None


def search_soundness(instances: int = 60, seed: int = 20241016) -> tuple[bool, str]:
    rng = random.Random(seed)
    disagreements = 0
    found = 0
    for _ in range(instances):
        f, h = random_instance(rng)
        out = find_embedding(f, h)
        truth = brute_force_first_embedding(f, h)
        if out.found:
            found += 1
            ok = validate_map(f, h, out.witness.assignment, injective=True) and out.witness.assignment == truth
        else:
            ok = out.status is Status.NOT_FOUND and truth is None
        sums = sum(d * c for d, c in min_codegree_report(h).histogram.items()) == h.k * h.m
        sums &= sum(d * c for d, c in min_codegree_report(f).histogram.items()) == f.k * f.m
        disagreements += not (ok and sums)
    return disagreements == 0, f"{instances} instances, {found} found, {disagreements} disagreements"


FIXTURES = [
    Fixture("fp-codegree", "min codegree of F_p^(3)(n) equals n/p for (p,n) in (3,9),(3,18),(5,15),(7,21)", 1.0, fp_codegree),
    Fixture("zycle-fp-boundary", "Z_3^(3) in F_p^(3)(6p): label oracle and vertex search agree for p=3,5,7", 300.0, zycle_fp_boundary),
    Fixture("host-codegree", "H^2_{F_3}(1/5,30) has min codegree 18 >= (1/2+1/10)*30; H^2(1/5,30) has min codegree 18", 10.0, host_codegree),
    Fixture("reduction", "deleting V_1 from H^r_{F_3}(eta,n) gives H^{r-1}_{F_3}(eta',n')", 10.0, reduction_isomorphism),
    Fixture("common-neighbourhood", "in H^3_{F_3}(1/10,30), N(S_1) & N(S_2) = V_3 and H[V_3] is F_3^(3)(12)", 10.0, common_neighbourhood_identity),
    Fixture("recursive-pattern", "G_3^2 for k=3 has 48 vertices and 120 edges; each V_S block is Z_3^(3)", 1.0, recursive_pattern),
    Fixture("blow-up-growth", "Z_6^(3) embeds into the 2-blow-up of Z_3^(3)", 10.0, blow_up_growth),
    Fixture("homomorphism", "Z_6^(3) -> Z_3^(3) homomorphism exists and Z_6^(3) embeds into the 12-blow-up of Z_3^(3)", 120.0, homomorphism_surrogate),
    Fixture("exact-extremal", "ex_co(n,K_3) = 2,2,3 for n=4,5,6; branch-and-bound equals full enumeration", 300.0, exact_extremal),
    Fixture("search-soundness", "embedding search agrees with brute force on random k=3 instances", 120.0, search_soundness),
]


def run_fixture(fx: Fixture) -> FixtureResult:
    start = time.perf_counter()
    try:
        passed, detail = fx.check()
    except Exception as exc:  # a crashing fixture is a failed fixture
        passed, detail = False, f"raised {type(exc).__name__}: {exc}"
    seconds = time.perf_counter() - start
    if seconds > fx.time_limit:
        passed = False
        detail += f"; runtime {seconds:.2f}s over limit {fx.time_limit}s"
    return FixtureResult(fx.key, fx.statement, passed, detail, seconds)


def run_suite(keys=None) -> list[FixtureResult]:
    unknown = set(keys or ()) - {fx.key for fx in FIXTURES}
    if unknown:
        raise InputError(f"unknown fixture key(s): {', '.join(sorted(unknown))}")
    return [run_fixture(fx) for fx in FIXTURES if keys is None or fx.key in keys]
