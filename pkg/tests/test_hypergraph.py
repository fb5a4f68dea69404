import itertools
import random

import pytest
from hypothesis import given, strategies as st

from ilth import Graph, Hypergraph, HypergraphError, ResourceLimitError, validate
from ilth.hypergraph import (ilt_prime_step, ilth2_edge_count, ilth2_iterate, ilth2_step,
                             ilth_iterate, ilth_step, project_to_initial, two_section)

from conftest import hypergraphs


def raw(k, n, edges):
    # bypasses from_edges so validate sees the broken instance
    from ilth.hypergraph import _build_incidence
    return Hypergraph(k, n, tuple(map(tuple, edges)), _build_incidence(n, edges))


class TestValidate:
    def test_single_edge_ok(self):
        validate(Hypergraph.single_edge(3))

    def test_duplicate_edge(self):
        with pytest.raises(HypergraphError, match="duplicate"):
            Hypergraph.from_edges(3, 3, [(0, 1, 2), (2, 1, 0)])

    def test_wrong_cardinality(self):
        with pytest.raises(HypergraphError, match="cardinality"):
            Hypergraph.from_edges(3, 3, [(0, 1)])

    def test_out_of_range(self):
        with pytest.raises(HypergraphError, match="out of range"):
            Hypergraph.from_edges(3, 3, [(0, 1, 3)])

    def test_unsorted_raw_edge(self):
        with pytest.raises(HypergraphError, match="ascending"):
            validate(raw(3, 3, [(2, 1, 0)]))

    def test_repeated_vertex(self):
        with pytest.raises(HypergraphError):
            Hypergraph.from_edges(3, 3, [(0, 0, 1)])

    def test_stale_incidence(self):
        h = Hypergraph(3, 4, ((0, 1, 2),), ((0,), (0,), (0,), (0,)))
        with pytest.raises(HypergraphError, match="stale incidence"):
            validate(h)


class TestIlthStep:
    def test_single_three_edge(self):
        h1, lin = ilth_step(Hypergraph.single_edge(3))
        assert h1.n == 6
        assert h1.edges == ((0, 1, 2), (1, 2, 3), (0, 2, 4), (0, 1, 5))
        assert lin.vertex_parent.tolist() == [0, 1, 2, 0, 1, 2]
        assert lin.edge_parent.tolist() == [0, 0, 0, 0]

    def test_empty_hypergraph(self):
        h1, _ = ilth_step(Hypergraph.from_edges(3, 3, []))
        assert (h1.n, h1.m) == (6, 0)

    def test_iterate_identity_at_zero(self):
        h0 = Hypergraph.single_edge(3)
        h, lins = ilth_iterate(h0, 0)
        assert h == h0 and lins == []

    def test_iterate_counts(self):
        h, _ = ilth_iterate(Hypergraph.single_edge(3), 2)
        assert (h.n, h.m) == (12, 16)
        h, _ = ilth_iterate(Hypergraph.single_edge(4), 3)
        assert h.m == 125

    def test_cap(self):
        with pytest.raises(ResourceLimitError):
            ilth_iterate(Hypergraph.single_edge(3), 6, max_edges=1000)

    def test_cap_env(self, monkeypatch):
        monkeypatch.setenv("ILTH_MAX_EDGES", "10")
        with pytest.raises(ResourceLimitError):
            ilth_iterate(Hypergraph.single_edge(3), 2)

    def test_negative_t(self):
        with pytest.raises(ValueError):
            ilth_iterate(Hypergraph.single_edge(3), -1)

    @given(hypergraphs(max_m=8), st.integers(0, 3))
    def test_growth_laws(self, h0, t):
        h, lins = ilth_iterate(h0, t)
        validate(h)
        assert h.n == 2**t * h0.n
        assert h.m == (h0.k + 1) ** t * h0.m
        assert len(lins) == t

    @given(hypergraphs(max_m=8))
    def test_clones_independent(self, h0):
        h1, _ = ilth_step(h0)
        n = h0.n
        for e in h1.edges:
            clones = [v for v in e if v >= n]
            assert len(clones) <= 1
            for c in clones:
                assert c - n not in e

    @given(hypergraphs(max_m=8))
    def test_descendant_counts(self, h0):
        h1, lin = ilth_step(h0)
        assert all(c == h0.k + 1 for c in
                   [lin.edge_parent.tolist().count(i) for i in range(h0.m)])
        assert all(lin.vertex_parent.tolist().count(v) == 2 for v in range(h0.n))

    @given(hypergraphs(max_m=8), st.integers(0, 3))
    def test_projection_maps_edges_to_edges(self, h0, t):
        h, lins = ilth_iterate(h0, t)
        base = set(h0.edges)
        for e in h.edges:
            assert tuple(sorted(project_to_initial(lins, v) for v in e)) in base


class TestIlth2:
    def test_single_three_edge(self):
        h, lin = ilth2_step(Hypergraph.single_edge(3))
        assert (h.n, h.m) == (9, 10)
        assert set(lin.clone_rank.tolist()) == {0, 1, 2}

    @given(hypergraphs(k=3, max_n=6, max_m=5), st.integers(0, 2))
    def test_recurrence(self, h0, t):
        h, _ = ilth2_iterate(h0, t)
        validate(h)
        assert h.n == 3**t * h0.n
        assert h.m == ilth2_edge_count(3, h0.n, h0.m, t)

    def test_recurrence_by_hand(self):
        # e(t+1) = (k^2 - k + 1) e(t) + n(t)
        assert ilth2_edge_count(3, 3, 1, 1) == 7 + 3
        assert ilth2_edge_count(3, 3, 1, 2) == 7 * 10 + 9

    @given(hypergraphs(k=3, max_n=6, max_m=5))
    def test_each_vertex_has_k_descendants(self, h0):
        _, lin = ilth2_step(h0)
        assert all(lin.vertex_parent.tolist().count(v) == 3 for v in range(h0.n))


class TestTwoSection:
    def test_triangle(self):
        g = two_section(Hypergraph.single_edge(3))
        assert g.edges() == [(0, 1), (0, 2), (1, 2)]

    def test_disjoint_triangles(self):
        g = two_section(Hypergraph.from_edges(3, 6, [(0, 1, 2), (3, 4, 5)]))
        assert g.num_edges == 6 and not g.has_edge(2, 3)

    def test_ilt_prime_small(self):
        g = ilt_prime_step(Graph.from_edges(2, [(0, 1)]))
        assert g.edges() == [(0, 1), (0, 3), (1, 2)]

    def test_ilt_prime_triangle(self):
        g = ilt_prime_step(two_section(Hypergraph.single_edge(3)))
        assert (g.n, g.num_edges) == (6, 9)

    def test_ilt_prime_empty(self):
        g = ilt_prime_step(Graph.from_edges(3, []))
        assert (g.n, g.num_edges) == (6, 0)

    @given(hypergraphs(max_m=10))
    def test_commutes_with_step(self, h0):
        assert two_section(ilth_step(h0)[0]) == ilt_prime_step(two_section(h0))

    @given(hypergraphs(max_m=10))
    def test_graph_valid(self, h0):
        two_section(h0).validate()


class TestProjection:
    def test_identity(self):
        assert project_to_initial([], 5) == 5

    def test_one_step(self):
        _, lins = ilth_iterate(Hypergraph.single_edge(3), 1)
        assert project_to_initial(lins, 4) == 1

    def test_out_of_range(self):
        _, lins = ilth_iterate(Hypergraph.single_edge(3), 1)
        with pytest.raises(IndexError):
            project_to_initial(lins, 6)


@given(hypergraphs(max_m=10), st.randoms(use_true_random=False))
def test_relabel_preserves_structure(h, r):
    perm = list(range(h.n))
    r.shuffle(perm)
    g = h.relabel(perm)
    validate(g)
    assert g.m == h.m
    assert sorted(g.degree(perm[v]) for v in range(h.n)) == sorted(h.degree(v) for v in range(h.n))


def test_equality_and_hash():
    a = Hypergraph.from_edges(3, 4, [(2, 1, 0), (1, 2, 3)])
    b = Hypergraph.from_edges(3, 4, [(0, 1, 2), (1, 2, 3)])
    assert a == b and hash(a) == hash(b)
    c = Hypergraph.from_edges(3, 4, [(1, 2, 3), (0, 1, 2)])
    assert a != c and a.same_edge_set(c)
