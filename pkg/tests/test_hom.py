from __future__ import annotations

import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from loopthresh.errors import InstanceTooLarge, PatternUnsupported
from loopthresh.graph import (
    FOX,
    H_IND,
    J,
    Graph,
    clique_looped_split,
    complete_graph,
    count_isolates,
    decode_loop_threshold,
    decode_threshold,
    empty_graph,
    loop_threshold_codes,
    path_graph,
    star_graph,
    union,
)
from loopthresh.hom import (
    closed_form_pattern,
    hard_core_weights,
    hom_closed_forms,
    hom_count,
    hom_count_threshold,
    ind_count,
    ind_profile,
    independence_poly_eval,
    partition_function,
    s_circ_identity_check,
    s_circ_identity_terms,
)
from oracles import brute_hom, brute_ind_profile, codes, graphs

K2 = complete_graph(2)
K3 = complete_graph(3)
K12 = star_graph(2)

IMAGES_4 = [decode_loop_threshold(c) for c in loop_threshold_codes(4)]
PATTERN_CODES = ["0" * q + "1" * p for p in range(5) for q in range(5) if 1 <= p + q <= 4]


class TestHomCount:
    def test_free_vertex_into_j(self):
        assert hom_count(empty_graph(1), J) == 3

    def test_edge_into_h_ind(self):
        assert hom_count(K2, H_IND) == 3 == ind_count(K2)

    def test_edge_plus_isolate_into_j(self):
        g = union(K2, empty_graph(1))
        assert hom_count(g, J) == 9 == brute_hom(g, J)

    def test_empty_source(self):
        for h in (H_IND, J, FOX, empty_graph(0)):
            assert hom_count(empty_graph(0), h) == 1

    def test_empty_image(self):
        assert hom_count(empty_graph(2), empty_graph(0)) == 0

    def test_looped_source_vertex(self):
        assert hom_count(Graph(1, (0,), loops=1), H_IND) == 1
        assert hom_count(Graph(1, (0,), loops=1), decode_loop_threshold("00")) == 0

    @settings(max_examples=300, deadline=None)
    @given(graphs(max_n=6, loops=True), graphs(min_n=1, max_n=4, loops=True))
    def test_matches_brute_force(self, g, h):
        assert hom_count(g, h) == brute_hom(g, h)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=6), st.sampled_from(IMAGES_4))
    def test_isolate_factor(self, g, h):
        assert hom_count(union(g, empty_graph(1)), h) == h.n * hom_count(g, h)

    def test_work_bound(self):
        with pytest.raises(InstanceTooLarge):
            hom_count(path_graph(12), complete_graph(5), max_work=50)
        # a generous bound leaves the answer unchanged
        assert hom_count(path_graph(6), K3, max_work=10**6) == 3 * 2**5

    def test_large_exact_count(self):
        # components multiply, so this stays exact far past machine words
        assert hom_count(empty_graph(100), J) == 3**100
        assert hom_count(union(empty_graph(60), path_graph(12)), K3) == 3**60 * 3 * 2**11


class TestThresholdDP:
    def test_star_into_h_ind_counts_independent_sets(self):
        for m in range(1, 10):
            bits = (0,) * (m - 1) + (1,)
            assert hom_count_threshold(bits, H_IND) == 2**m + 1 == ind_count(star_graph(m))
        assert hom_count_threshold("100", H_IND) == 9

    def test_clique_into_j(self):
        for n in range(2, 12):
            bits = (1,) * (n - 1)
            assert hom_count_threshold(bits, J) == n + 1 == hom_count(decode_threshold(bits), J)

    @settings(max_examples=100)
    @given(codes(10), st.integers(1, 5))
    def test_into_all_looped_complete(self, bits, p):
        h = decode_loop_threshold("1" * p)
        assert hom_count_threshold(bits, h) == p ** (len(bits) + 1)

    def test_single_vertex(self):
        assert hom_count_threshold("", J) == 3
        assert hom_count_threshold("", decode_loop_threshold("111")) == 3

    @pytest.mark.parametrize("length", range(7))
    def test_matches_backtracking(self, length):
        for bits in product((0, 1), repeat=length):
            g = decode_threshold(bits)
            for h in IMAGES_4:
                assert hom_count_threshold(bits, h) == hom_count(g, h)

    @settings(max_examples=60, deadline=None)
    @given(codes(5), graphs(min_n=1, max_n=4, loops=True))
    def test_arbitrary_images_match_brute_force(self, bits, h):
        assert hom_count_threshold(bits, h) == brute_hom(decode_threshold(bits), h)

    def test_image_too_large(self):
        with pytest.raises(InstanceTooLarge):
            hom_count_threshold("1", empty_graph(21))


class TestIndependentSets:
    @pytest.mark.parametrize("n", range(10))
    def test_empty_graph(self, n):
        assert ind_count(empty_graph(n)) == 2**n

    def test_cherry(self):
        assert ind_count(K12) == 5

    def test_triangle_profile(self):
        assert ind_profile(K3) == [1, 3, 0, 0]

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=9))
    def test_matches_brute_force(self, g):
        prof = ind_profile(g)
        assert prof == brute_ind_profile(g)
        assert ind_count(g) == sum(prof)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7))
    def test_equals_hom_into_h_ind(self, g):
        assert ind_count(g) == hom_count(g, H_IND)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8))
    def test_profile_consistency(self, g):
        prof = ind_profile(g)
        assert prof[0] == 1
        assert len(prof) == g.n + 1
        if g.n:
            assert prof[1] == g.n
        assert independence_poly_eval(g, 1) == ind_count(g)
        assert independence_poly_eval(g, 0) == 1
        alpha = max(t for t, c in enumerate(prof) if c)
        assert all(c == 0 for c in prof[alpha + 1:])

    def test_loops_rejected(self):
        with pytest.raises(ValueError):
            ind_count(H_IND)

    def test_work_bound(self):
        with pytest.raises(InstanceTooLarge):
            ind_count(path_graph(30), max_work=5)


class TestWeighted:
    def test_unit_weights(self):
        g = union(K2, empty_graph(1))
        assert partition_function(g, J, {0: 1, 1: 1, 2: 1}) == 9

    def test_hard_core_on_edge(self):
        assert partition_function(K2, H_IND, hard_core_weights(2)) == 5 == independence_poly_eval(K2, 2)

    def test_single_vertex(self):
        for lam in (Fraction(1, 3), 2, 7):
            assert partition_function(empty_graph(1), H_IND, hard_core_weights(lam)) == Fraction(lam) + 1

    def test_sequence_weights_and_validation(self):
        assert partition_function(K2, H_IND, [2, 1]) == 5
        with pytest.raises(ValueError):
            partition_function(K2, H_IND, [1])
        with pytest.raises(ValueError):
            partition_function(K2, H_IND, [-1, 1])

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=5), graphs(min_n=1, max_n=3, loops=True), st.data())
    def test_matches_brute_force(self, g, h, data):
        beta = [data.draw(st.fractions(0, 4, max_denominator=5)) for _ in range(h.n)]
        assert partition_function(g, h, beta) == brute_hom(g, h, beta)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7), st.fractions(0, 5, max_denominator=7))
    def test_polynomial_is_hard_core_partition_function(self, g, lam):
        assert independence_poly_eval(g, lam) == partition_function(g, H_IND, hard_core_weights(lam))


class TestPolynomial:
    @given(st.fractions(-3, 3, max_denominator=9))
    def test_two_isolates(self, lam):
        assert independence_poly_eval(empty_graph(2), lam) == (1 + lam) ** 2

    def test_cherry_at_one(self):
        assert independence_poly_eval(K12, 1) == 5

    @given(st.fractions(-3, 3, max_denominator=9))
    def test_triangle(self, lam):
        assert independence_poly_eval(K3, lam) == 1 + 3 * lam


class TestClosedForms:
    def test_pattern_example(self):
        g = union(K2, empty_graph(2))
        assert hom_closed_forms(g, "011") == 36 == brute_hom(g, decode_loop_threshold("011"))

    def test_all_unlooped_image(self):
        assert hom_closed_forms(K2, "00") == 0
        assert hom_closed_forms(empty_graph(3), "00") == 8

    def test_all_looped_image(self):
        assert hom_closed_forms(K3, "111") == 27
        assert hom_closed_forms(path_graph(3), "111") == 27

    def test_patterns(self):
        assert closed_form_pattern("000") == ("zeros", 0, 3)
        assert closed_form_pattern("11") == ("ones", 2, 0)
        assert closed_form_pattern("0011") == ("zeros_ones", 2, 2)

    @pytest.mark.parametrize("code", ["010", "101", "110", "1001"])
    def test_unsupported(self, code):
        with pytest.raises(PatternUnsupported):
            hom_closed_forms(K2, code)

    def test_loop_free_source_required(self):
        with pytest.raises(ValueError):
            hom_closed_forms(Graph(1, (0,), loops=1), "1")

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=7), st.sampled_from(PATTERN_CODES))
    def test_matches_search(self, g, code):
        assert hom_closed_forms(g, code) == hom_count(g, decode_loop_threshold(code))

    def test_isolate_count_drives_pattern_form(self):
        g = union(K3, empty_graph(2))
        assert count_isolates(g) == 2
        assert hom_closed_forms(g, "001") == 3**2 * 1**3


class TestLoopedCliqueSplit:
    def test_edge_with_unit_sides(self):
        assert s_circ_identity_check(K2, 1, 1)
        assert hom_count(K2, clique_looped_split(1, 1)) == 3

    def test_activity_orientation_for_looped_clique_split(self):
        # hom(K_{1,2}, S°(2,1)): centre on a looped vertex gives 2*3*3, on the
        # unlooped vertex 2*2, so 22. Independent sets go to the q side, so the
        # weights are q^t p^(n-t); the swapped weights p^t q^(n-t) give 11.
        h = clique_looped_split(2, 1)
        assert hom_count(K12, h) == 22 == brute_hom(K12, h)
        assert s_circ_identity_terms(K12, 2, 1) == 22
        prof = ind_profile(K12)
        assert sum(c * 2**t * 1 ** (3 - t) for t, c in enumerate(prof)) == 11
        assert s_circ_identity_check(K12, 2, 1)

    def test_free_vertices(self):
        g = empty_graph(2)
        assert hom_count(g, clique_looped_split(1, 2)) == 9
        assert s_circ_identity_terms(g, 1, 2) == 9
        # p^n P_G(q/p) with p=1, q=2
        assert independence_poly_eval(g, 2) == 9

    @settings(max_examples=150, deadline=None)
    @given(graphs(max_n=8), st.integers(1, 3), st.integers(1, 3))
    def test_identity_holds(self, g, p, q):
        assert s_circ_identity_check(g, p, q)
        assert s_circ_identity_terms(g, p, q) == p**g.n * independence_poly_eval(g, Fraction(q, p))

    def test_rejects_nonpositive(self):
        with pytest.raises(ValueError):
            s_circ_identity_check(K2, 0, 1)


def test_random_graphs_seeded():
    rng = random.Random(7)
    for _ in range(50):
        g = Graph.from_edges(6, [(u, v) for u in range(6) for v in range(u + 1, 6) if rng.random() < 0.4])
        for h in (H_IND, J, FOX):
            assert hom_count(g, h) == brute_hom(g, h)
