from fractions import Fraction
from itertools import combinations

import pytest

import naive
from kgraph.errors import InputError
from kgraph.extremal import (
    ExCoQuery,
    brute_force_ex_co,
    density_profile,
    ex_co_exact,
    exists_free_with_min_codegree,
)
from kgraph.hypergraph import Hypergraph, min_codegree
from kgraph.search import SearchBudget, Status, find_embedding

K3 = Hypergraph.complete(2, 3)
K4_3 = Hypergraph.complete(3, 4)
EDGE2 = Hypergraph(2, 2, ((0, 1),))
EDGE3 = Hypergraph(3, 3, ((0, 1, 2),))
C4 = Hypergraph(2, 4, ((0, 2), (0, 3), (1, 2), (1, 3)))


def query(n, f, **budget):
    return ExCoQuery(n, f.k, f, SearchBudget(**budget))


class TestDecision:
    def test_t0_gives_edgeless(self):
        out = exists_free_with_min_codegree(query(5, K3), 0)
        assert out.found and out.witness.m == 0

    def test_c4(self):
        out = exists_free_with_min_codegree(query(4, K3), 2)
        assert out.found
        # the least indicator vector with min degree 2 and no triangle is C_4
        assert out.witness == C4

    def test_forced_k4(self):
        out = exists_free_with_min_codegree(query(4, K3), 3)
        assert out.status is Status.NOT_FOUND

    def test_t_range(self):
        with pytest.raises(InputError):
            exists_free_with_min_codegree(query(4, K3), 4)
        with pytest.raises(InputError):
            exists_free_with_min_codegree(query(4, K3), -1)

    def test_budget(self):
        out = exists_free_with_min_codegree(query(7, K3, node_limit=5), 3)
        assert out.status is Status.BUDGET_EXCEEDED

    @pytest.mark.parametrize("n,f", [(5, K3), (6, K3), (5, K4_3)])
    def test_anti_monotone(self, n, f):
        q = query(n, f)
        top = ex_co_exact(q)
        for t in range(top.value + 1):
            out = exists_free_with_min_codegree(q, t)
            assert out.found
            assert min_codegree(top.witness) >= t
        if top.value < n - f.k + 1:
            assert exists_free_with_min_codegree(q, top.value + 1).status is Status.NOT_FOUND

    @pytest.mark.parametrize("n,f,t", [(5, K3, 2), (6, K3, 3), (5, K4_3, 1), (6, K4_3, 2)])
    def test_symmetry_breaking_agrees(self, n, f, t):
        plain = exists_free_with_min_codegree(query(n, f), t)
        broken = exists_free_with_min_codegree(query(n, f), t, symmetry_breaking=True)
        assert plain.status is broken.status
        for out in (plain, broken):
            if out.found:
                assert min_codegree(out.witness) >= t
                assert find_embedding(f, out.witness).status is Status.NOT_FOUND


class TestExCo:
    @pytest.mark.parametrize("n,value", [(4, 2), (5, 2), (6, 3)])
    def test_triangle(self, n, value):
        res = ex_co_exact(query(n, K3))
        assert res.exact and res.value == value == n // 2
        assert min_codegree(res.witness) == value
        assert find_embedding(K3, res.witness).status is Status.NOT_FOUND

    @pytest.mark.parametrize("f,ns", [(EDGE2, range(2, 7)), (EDGE3, range(3, 7))])
    def test_single_edge(self, f, ns):
        for n in ns:
            assert ex_co_exact(query(n, f)).value == 0

    @pytest.mark.parametrize("n", [4, 5])
    def test_k4_3(self, n):
        # values frozen from full enumeration of all 2^C(n,3) edge sets
        assert ex_co_exact(query(n, K4_3)).value == 1 == brute_force_ex_co(n, K4_3)[0]

    @pytest.mark.parametrize("f,ns", [(K3, range(2, 6)), (K4_3, range(3, 6)), (C4, range(4, 6))])
    def test_matches_enumeration(self, f, ns):
        for n in ns:
            res = ex_co_exact(query(n, f))
            assert res.exact and res.value == brute_force_ex_co(n, f)[0]
            assert res.value <= n - f.k + 1

    def test_pattern_bigger_than_host(self):
        res = ex_co_exact(query(3, K4_3))
        assert res.value == 1 and res.witness == Hypergraph.complete(3, 3)

    def test_budget_gives_lower_bound(self):
        res = ex_co_exact(query(7, K3, node_limit=40))
        assert not res.exact
        assert res.value <= 3
        assert find_embedding(K3, res.witness).status is Status.NOT_FOUND

    def test_query_validation(self):
        with pytest.raises(InputError):
            ExCoQuery(5, 2, Hypergraph(2, 3))
        with pytest.raises(InputError):
            ExCoQuery(5, 3, K3)
        with pytest.raises(InputError):
            ExCoQuery(2, 3, K4_3)


class TestProfile:
    def test_triangle(self):
        prof = density_profile(K3, [4, 5, 6])
        assert [(e.n, e.value, e.ratio) for e in prof] == [
            (4, 2, Fraction(1, 2)),
            (5, 2, Fraction(2, 5)),
            (6, 3, Fraction(1, 2)),
        ]

    def test_single_edge(self):
        assert all(e.ratio == 0 for e in density_profile(EDGE3, [3, 4, 5]))

    def test_empty(self):
        assert density_profile(K3, []) == []


def test_brute_force_reference_is_naive():
    # cross-check the packaged reference against the test-local naive helpers
    value, witness = brute_force_ex_co(5, K3)
    assert naive.min_codegree(2, 5, witness.edges) == value
    assert not naive.injections(3, K3.edges, 5, witness.edges)
    pairs = list(combinations(range(5), 2))
    subsets = ([e for i, e in enumerate(pairs) if mask >> i & 1] for mask in range(1 << len(pairs)))
    better = [e for e in subsets if naive.min_codegree(2, 5, e) > value and not naive.injections(3, K3.edges, 5, e)]
    assert better == []
