import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ilth import Hypergraph, ilth_iterate, ilth_step
from ilth.clustering import (clustering_report, hc1, hc1_literal, hc2, hc2_literal, hc3,
                             hc3_bruteforce, tuple_counts, tuple_counts_bruteforce)

from conftest import hypergraphs


def complete(n, k):
    return Hypergraph.from_edges(k, n, itertools.combinations(range(n), k))


K5 = complete(5, 3)


class TestTupleCounts:
    def test_single_edge(self):
        tc = tuple_counts(Hypergraph.single_edge(3))
        assert (tc.p_prime, tc.t_prime, tc.a_count, tc.lambda_count, tc.paths2, tc.hypertriangles) \
            == (3, 6, 6, 0, 0, 0)

    @pytest.mark.parametrize("t", range(4))
    def test_single_edge_powers(self, t):
        h, _ = ilth_iterate(Hypergraph.single_edge(3), t)
        tc = tuple_counts(h)
        assert (tc.p_prime, tc.t_prime, tc.a_count) == (3 * 10**t, 6 * 14**t, 6 * 9**t)

    @settings(max_examples=60)
    @given(hypergraphs(max_n=8, max_m=12))
    def test_fast_matches_enumeration(self, h):
        assert tuple_counts(h) == tuple_counts_bruteforce(h)

    @given(hypergraphs(max_n=9, max_m=14))
    def test_histogram_diagonal(self, h):
        tc = tuple_counts(h)
        assert tc.p_histogram[h.k] == h.m
        assert sum(tc.p_histogram) == h.m * h.m

    @given(hypergraphs(min_m=1, max_n=9, max_m=14))
    def test_lambda_identity(self, h):
        tc = tuple_counts(h)
        k = h.k
        assert tc.lambda_count == tc.a_count - k * (k - 1) * (k - 2) * h.m

    @given(hypergraphs(max_n=9, max_m=14))
    def test_hypertriangle_decomposition(self, h):
        tc = tuple_counts_bruteforce(h)
        k = h.k
        degenerate = 3 * (k - 2) * sum(i * (i - 1) * c for i, c in enumerate(tc.p_histogram))
        degenerate -= 3 * (k - 2) * k * (k - 1) * h.m  # e1 = e2 pairs sit in the last term
        assert tc.t_prime - tc.hypertriangles == degenerate + k * (k - 1) * (k - 2) * h.m

    @settings(max_examples=20)
    @given(hypergraphs(k=3, max_n=7, max_m=6), st.sampled_from([3]))
    def test_step_identities(self, h, _):
        k = h.k
        a = tuple_counts(h)
        b = tuple_counts(ilth_step(h)[0])
        assert b.p_prime == (k * k + 1) * a.p_prime
        assert b.t_prime == ((k - 1) ** 3 + 3 * (k - 1)) * a.t_prime
        assert b.a_count == k * k * a.a_count

    @given(hypergraphs(max_n=9, max_m=14), st.randoms(use_true_random=False))
    def test_relabel_invariant(self, h, r):
        perm = list(range(h.n))
        r.shuffle(perm)
        assert tuple_counts(h) == tuple_counts(h.relabel(perm))


class TestCoefficients:
    def test_complete_hypergraph(self):
        assert hc1(K5) == 3
        assert hc2(K5) == 1
        assert hc3(K5) == 1

    @pytest.mark.parametrize("n,k", [(6, 3), (6, 4), (7, 3), (7, 5)])
    def test_complete_hc1_is_binomial(self, n, k):
        from math import comb
        assert hc1(complete(n, k)) == comb(n - 2, k - 2)

    def test_single_edge_undefined(self):
        rep = clustering_report(Hypergraph.single_edge(3))
        assert rep.hc1 is None and not rep.hc1_defined
        assert rep.hc2 is None and rep.hc3 is None
        assert rep.as_dict()["hc1_defined"] is False

    def test_two_edges_sharing_one_vertex(self):
        h = Hypergraph.from_edges(3, 5, [(0, 1, 2), (2, 3, 4)])
        assert hc2(h) == 0
        assert hc3(h) == 0

    def test_extra_overlap_example(self):
        h = Hypergraph.from_edges(3, 6, [(0, 1, 2), (2, 3, 4), (1, 4, 5)])
        # every intersecting pair, e.g. {0,1,2},{2,3,4}, contributes (1 + 1) / 4
        assert hc3(h) == hc3_bruteforce(h) == Fraction(1, 2)

    def test_literal_diagnostics(self):
        tc = tuple_counts(K5)
        # literal paths let u also sit in e2, which drags the mean below C(n-2, k-2)
        assert hc1_literal(tc) == Fraction(5, 2)
        assert hc2_literal(tc) == 1
        assert tc.paths2 == 2 * tc.paths2_strict

    @given(hypergraphs(max_n=9, max_m=14))
    def test_ranges(self, h):
        rep = clustering_report(h)
        if rep.hc2 is not None:
            assert 0 <= rep.hc2 <= 1
        if rep.hc3 is not None:
            assert 0 <= rep.hc3 <= 1
        if rep.hc1 is not None:
            assert rep.hc1 >= rep.hc2

    @given(hypergraphs(max_n=9, max_m=14))
    def test_hc3_matches_enumeration(self, h):
        assert hc3(h) == hc3_bruteforce(h)

    def test_trend_ratios_single_edge(self):
        vals = [clustering_report(ilth_iterate(Hypergraph.single_edge(3), t)[0], with_hc3=False)
                for t in range(1, 6)]
        r1 = [float(b.hc1 / a.hc1) for a, b in zip(vals, vals[1:])]
        r2 = [float(b.hc2 / a.hc2) for a, b in zip(vals, vals[1:])]
        # ratios move toward 1.4 and 0.9 respectively
        assert abs(r1[-1] - 1.4) < abs(r1[0] - 1.4)
        assert abs(r2[-1] - 0.9) < abs(r2[0] - 0.9)
