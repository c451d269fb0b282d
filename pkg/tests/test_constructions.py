from fractions import Fraction
from itertools import combinations
from math import comb

import pytest

import naive
from kgraph.constructions import (
    BlowupCopy,
    ZycleBlock,
    as_rational,
    g_vertex_count,
    make_fp,
    make_g,
    make_host,
    make_zycle,
    reduce_host_params,
)
from kgraph.errors import ParameterError, SizeError
from kgraph.hypergraph import blow_up, codegree, common_neighborhood, induced_subgraph, min_codegree, remove_vertices


class TestZycle:
    @pytest.mark.parametrize("k,ell", [(3, 3), (4, 4), (3, 5), (4, 6), (2, 5)])
    def test_counts_and_definition(self, k, ell):
        z = make_zycle(k, ell)
        assert z.n == z.m == ell * (k - 1)
        assert list(z.edges) == naive.zycle_edges(k, ell)

    def test_body_codegree(self):
        z = make_zycle(4, 5)
        for i in range(5):
            assert codegree(z, range(3 * i, 3 * i + 3)) == 3

    @pytest.mark.parametrize("k,ell", [(3, 2), (1, 3), (4, 3)])
    def test_bad_parameters(self, k, ell):
        with pytest.raises(ParameterError):
            make_zycle(k, ell)


class TestFp:
    @pytest.mark.parametrize("k,p,n", [(3, 3, 9), (3, 5, 15), (3, 7, 21), (4, 3, 12), (4, 5, 20), (2, 3, 6)])
    def test_matches_definition(self, k, p, n):
        h, labels = make_fp(k, p, n)
        assert list(h.edges) == naive.fp_edges(k, p, n)
        assert labels.sizes() == [n // p] * p
        assert labels.part_of == tuple(v // (n // p) for v in range(n))

    def test_label_examples(self):
        h, labels = make_fp(3, 3, 9)
        v0, v1 = labels.part(0), labels.part(1)
        assert h.has_edge(v1)  # labels (1,1,1)
        assert not h.has_edge(v0)  # labels (0,0,0)
        assert h.has_edge(v0[:2] + v1[:1])  # labels (0,0,1)

    # d(S) for S of labels (a, a) with 3a = 0 mod p loses both vertices of S,
    # so the exact minimum sits below n/p; values from naive enumeration
    @pytest.mark.parametrize("p,n,expected", [(3, 9, 1), (3, 18, 4), (5, 15, 2), (7, 21, 2), (5, 25, 4), (11, 44, 3)])
    def test_min_codegree_k3(self, p, n, expected):
        h, _ = make_fp(3, p, n)
        assert min_codegree(h) == expected == naive.min_codegree(3, n, h.edges)
        assert expected == n // p - (2 if p == 3 else 1)

    @pytest.mark.parametrize("k,p,n", [(3, 3, 12), (3, 5, 20), (4, 3, 12), (4, 5, 20), (4, 7, 28)])
    def test_min_codegree_within_k_minus_1_of_n_over_p(self, k, p, n):
        delta = min_codegree(make_fp(k, p, n)[0])
        assert n // p - (k - 1) <= delta <= n // p

    @pytest.mark.parametrize("k,p,n", [(3, 4, 8), (3, 3, 10), (3, 3, 6), (1, 3, 9)])
    def test_bad_parameters(self, k, p, n):
        with pytest.raises(ParameterError):
            make_fp(k, p, n)


class TestHost:
    def test_two_layers_no_p(self):
        h, labels = make_host(3, 2, Fraction(1, 5), 30)
        assert labels.sizes() == [12, 18]
        assert list(h.edges) == naive.host_edges(3, [12, 18])
        # pairs inside the larger part V_2 only reach V_1
        assert min_codegree(h) == 30 - 18 == 12

    def test_two_layers_with_p(self):
        h, labels = make_host(3, 2, "1/5", 30, 3)
        assert list(h.edges) == naive.host_edges(3, [12, 18], 3)
        assert min_codegree(h) == naive.min_codegree(3, 30, h.edges) == 16

    def test_codegree_splits_on_core(self):
        h, labels = make_host(3, 2, "1/5", 30, 3)
        core, _ = make_fp(3, 3, 18)
        v2 = labels.part(1)
        for s in combinations(range(18), 2):
            assert codegree(h, [v2[i] for i in s]) == 12 + codegree(core, s)

    def test_layer_neighbourhood(self):
        h, labels = make_host(4, 3, "1/10", 40)
        for i in range(3):
            part = labels.part(i)
            nb = common_neighborhood(h, [part[:3]])
            assert nb == frozenset(range(40)) - set(part)

    def test_no_p_delta_is_n_minus_last(self):
        for k, r, eta, n in [(3, 2, "1/5", 30), (3, 3, "1/10", 30), (4, 2, "1/4", 24)]:
            h, labels = make_host(k, r, eta, n)
            assert min_codegree(h) == n - labels.sizes()[-1]

    def test_r1_is_fp(self):
        assert make_host(3, 1, "1/2", 9, 3)[0] == make_fp(3, 3, 9)[0]
        assert make_host(3, 1, "1/99", 9, 3)[0] == make_fp(3, 3, 9)[0]

    def test_common_neighbourhood_is_last_part(self):
        h, labels = make_host(3, 3, "1/10", 30, 3)
        v1, v2, v3 = (labels.part(i) for i in range(3))
        assert labels.sizes() == [9, 9, 12]
        for s1 in combinations(v1, 2):
            assert common_neighborhood(h, [s1, v2[4:6]]) == frozenset(v3)
        assert induced_subgraph(h, v3) == make_fp(3, 3, 12)[0]

    @pytest.mark.parametrize(
        "args",
        [
            (3, 2, "1/5", 30, 5),  # 5 does not divide 18
            (3, 2, "1/5", 30, 4),  # not prime
            (3, 2, "0/1", 30, None),
            (3, 2, "1/1", 30, None),
            (3, 4, "1/2", 10, None),  # layers of size 1 < k-1
            (3, 0, "1/2", 10, None),
        ],
    )
    def test_bad_parameters(self, args):
        with pytest.raises(ParameterError):
            make_host(*args)

    def test_float_eta_refused(self):
        with pytest.raises(ParameterError):
            make_host(3, 2, 0.2, 30)


class TestReduction:
    def test_examples(self):
        assert reduce_host_params(2, "1/5", 30) == (18, Fraction(1, 3))
        assert reduce_host_params(3, "1/10", 30) == (21, Fraction(1, 7))

    def test_r1_refused(self):
        with pytest.raises(ParameterError):
            reduce_host_params(1, "1/5", 30)

    @pytest.mark.parametrize(
        "k,r,eta,n,p",
        [(3, 2, "1/5", 30, 3), (3, 3, "1/10", 30, 3), (3, 3, "1/5", 40, None), (4, 3, "1/7", 45, 3), (3, 4, "1/9", 48, 3)],
    )
    def test_layer_removal(self, k, r, eta, n, p):
        host, labels = make_host(k, r, eta, n, p)
        reduced = reduce_host_params(r, eta, n)
        layer = labels.sizes()[0]
        assert (1 - reduced.eta_prime) * reduced.n_prime // (r - 1) == layer
        smaller, _ = make_host(k, r - 1, reduced.eta_prime, reduced.n_prime, p)
        for i in range(r - 1):
            assert remove_vertices(host, labels.part(i)) == smaller


class TestG:
    def test_r1_is_zycle(self):
        g, layout = make_g(3, 3, 1)
        assert g == make_zycle(3, 3)
        assert all(isinstance(role, ZycleBlock) for role in layout.role_of)

    @pytest.mark.parametrize("k,ell,r", [(3, 3, 2), (3, 4, 2), (4, 4, 2), (3, 3, 3)])
    def test_closed_form_counts(self, k, ell, r):
        g, layout = make_g(k, ell, r, max_vertices=10**6)
        prev, _ = make_g(k, ell, r - 1, max_vertices=10**6)
        blocks = comb(prev.n, r - 1)
        assert g.n == (k - 1) * prev.n + blocks * ell * (k - 1) == g_vertex_count(k, ell, r)
        assert g.m == (k - 1) ** k * prev.m + blocks * ell * (k - 1) * (1 + r - 1)

    def test_small_instance(self):
        g, _ = make_g(3, 3, 2)
        assert (g.n, g.m) == (48, 120)

    def test_layout_and_blocks(self):
        k, ell = 3, 3
        g, layout = make_g(k, ell, 2)
        prev = make_zycle(k, ell)
        assert layout.role_of[:12] == tuple(BlowupCopy(v, j) for v in range(6) for j in range(2))
        assert layout.blocks() == [(v,) for v in range(6)]
        base = blow_up(prev, 2)
        assert induced_subgraph(g, range(12)) == base
        for subset in layout.blocks():
            block = layout.block(subset)
            assert induced_subgraph(g, block) == prev
            for v in subset:
                copies = layout.copies(v)
                assert all(g.has_edge(copies + [y]) for y in block)

    def test_block_joins_only_its_subset(self):
        g, layout = make_g(3, 3, 3, max_vertices=10**6)
        for subset in layout.blocks()[:5]:
            block = set(layout.block(subset))
            outside = [e for e in g.edges if block & set(e) and not set(e) <= block]
            expected_tuples = {tuple(layout.copies(v)) for v in subset}
            assert {tuple(x for x in e if x not in block) for e in outside} == expected_tuples

    @pytest.mark.parametrize("k,ell,r", [(3, 3, 0), (2, 3, 2), (3, 2, 2)])
    def test_bad_parameters(self, k, ell, r):
        with pytest.raises(ParameterError):
            make_g(k, ell, r)

    def test_vertex_budget(self):
        with pytest.raises(SizeError):
            make_g(3, 3, 3, max_vertices=1000)
        with pytest.raises(SizeError):
            make_g(3, 3, 4)


def test_as_rational():
    assert as_rational("2/10") == Fraction(1, 5)
    assert as_rational((1, 5)) == Fraction(1, 5)
    for bad in ("0.2", 0.2, "a/b", "1/0"):
        with pytest.raises(ParameterError):
            as_rational(bad)
