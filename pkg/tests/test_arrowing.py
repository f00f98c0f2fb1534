import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_arrows, brute_arrows_pointed, brute_isomorphic, contains_by_subsets
from ramsey_minimal.arrowing import (
    BLUE,
    RED,
    arrows,
    arrows_pointed,
    check_family_conditions,
    color_class,
    enumerate_minimal,
    generate_graphs,
    is_minimal,
    verify_good_coloring,
    verify_good_pointed_coloring,
    witness_edges,
)
from ramsey_minimal.families import Star, truncate
from ramsey_minimal.graph import (
    FiniteGraph,
    PointedGraph,
    canonical_form,
    complete,
    copies,
    cycle,
    delete_edge,
    disjoint_union,
    embeds,
    matching,
    path,
    star,
)
from strategies import graphs

P3, P4, K2, K3 = path(3), path(4), complete(2), complete(3)
TWO_K2 = matching(2)
TWO_P3 = copies(P3, 2)
SMALL_PATTERNS = [K2, P3, TWO_K2, K3, star(3)]


def forms(gs):
    return sorted(canonical_form(g) for g in gs)


class TestVerifyGoodColoring:
    def test_p4_red_blue_red(self):
        c = {(0, 1): RED, (1, 2): BLUE, (2, 3): RED}
        assert verify_good_coloring(P4, c, P3, P3)

    def test_single_edge_never_good(self):
        for col in (RED, BLUE):
            assert not verify_good_coloring(K2, {(0, 1): col}, K2, K2)

    def test_all_red_2p3(self):
        c = {e: RED for e in TWO_P3.edges}
        assert not verify_good_coloring(TWO_P3, c, P3, TWO_K2)

    def test_partial_coloring_rejected(self):
        with pytest.raises(ValueError):
            verify_good_coloring(P4, {(0, 1): RED}, P3, P3)

    def test_unknown_color_rejected(self):
        with pytest.raises(ValueError):
            verify_good_coloring(K2, {(0, 1): "green"}, K2, K2)


class TestArrows:
    def test_k2(self):
        assert arrows(K2, K2, K2).arrows

    def test_p4_p3_p3_witness(self):
        v = arrows(P4, P3, P3)
        assert not v.arrows
        assert v.witness == {(0, 1): RED, (1, 2): BLUE, (2, 3): RED}
        assert verify_good_coloring(P4, v.witness, P3, P3)
        assert not brute_arrows(P4, P3, P3)

    def test_2p3_p3_2k2(self):
        assert arrows(TWO_P3, P3, TWO_K2).arrows
        assert brute_arrows(TWO_P3, P3, TWO_K2)

    def test_k6_k3_k3(self):
        assert arrows(complete(6), K3, K3).arrows
        assert not arrows(complete(5), K3, K3).arrows

    def test_certificates(self):
        v = arrows(TWO_P3, P3, TWO_K2, certify=True)
        assert v.arrows and v.certificates
        for cert in v.certificates:
            assert len(cert.red_witness) == 2 and len(cert.blue_witness) == 2
            assert cert.edge in cert.red_witness and cert.edge in cert.blue_witness
            # every other witness edge already carries the matching color in the prefix
            assert all(cert.prefix[e] == RED for e in cert.red_witness if e != cert.edge)
            assert all(cert.prefix[e] == BLUE for e in cert.blue_witness if e != cert.edge)

    def test_empty_host(self):
        v = arrows(FiniteGraph((), frozenset()), K2, K2)
        assert not v.arrows and v.witness == {}

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=6, isolated=False), st.sampled_from(SMALL_PATTERNS), st.sampled_from(SMALL_PATTERNS))
    def test_symmetry(self, f, g, h):
        assert arrows(f, g, h).arrows == arrows(f, h, g).arrows

    @settings(max_examples=80, deadline=None)
    @given(graphs(max_n=6, isolated=False), st.sampled_from(SMALL_PATTERNS), st.sampled_from(SMALL_PATTERNS), st.data())
    def test_monotone_under_edge_deletion(self, f, g, h, data):
        e = data.draw(st.sampled_from(sorted(f.edges)))
        if arrows(delete_edge(f, e), g, h).arrows:
            assert arrows(f, g, h).arrows

    @settings(max_examples=120, deadline=None)
    @given(graphs(max_n=7, isolated=False), st.sampled_from(SMALL_PATTERNS), st.sampled_from(SMALL_PATTERNS))
    def test_witness_sound_against_oracle(self, f, g, h):
        if f.size() > 12:
            return
        v = arrows(f, g, h)
        assert v.arrows == brute_arrows(f, g, h)
        if not v.arrows:
            red = [e for e, c in v.witness.items() if c == RED]
            blue = [e for e, c in v.witness.items() if c == BLUE]
            assert set(v.witness) == set(f.edges)
            assert not contains_by_subsets(g, red) and not contains_by_subsets(h, blue)


class TestArrowsPointed:
    def test_k12_center_p2(self):
        f = PointedGraph(star(2), 0)
        v = arrows_pointed(f, PointedGraph(path(2), 0), K2)
        assert v.arrows
        assert brute_arrows_pointed(star(2), 0, path(2), 0, K2)

    def test_p3_endpoint(self):
        f = PointedGraph(P3, 0)
        v = arrows_pointed(f, PointedGraph(P3, 0), TWO_K2)
        assert not v.arrows
        assert verify_good_pointed_coloring(f, v.witness, PointedGraph(P3, 0), TWO_K2)
        assert not brute_arrows_pointed(P3, 0, P3, 0, TWO_K2)

    def test_star3_center_k12_2k2(self):
        # all-blue is good: no red K_{1,2} and a star holds no 2K2
        f = PointedGraph(truncate(Star(), 3), 0)
        g = PointedGraph(star(2), 0)
        v = arrows_pointed(f, g, TWO_K2)
        assert not v.arrows
        assert not brute_arrows_pointed(truncate(Star(), 3), 0, star(2), 0, TWO_K2)
        assert verify_good_pointed_coloring(f, v.witness, g, TWO_K2)

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_n=2, max_n=5, isolated=False), st.data())
    def test_agrees_with_oracle(self, f, data):
        fb = data.draw(st.sampled_from(f.vertices))
        pattern = data.draw(st.sampled_from([path(2), path(3), star(2)]))
        gb = data.draw(st.sampled_from(pattern.vertices))
        h = data.draw(st.sampled_from([K2, P3, TWO_K2]))
        v = arrows_pointed(PointedGraph(f, fb), PointedGraph(pattern, gb), h)
        assert v.arrows == brute_arrows_pointed(f, fb, pattern, gb, h)


class TestMinimality:
    def test_examples(self):
        assert is_minimal(K2, K2, K2)
        assert is_minimal(TWO_P3, P3, TWO_K2)
        assert not is_minimal(copies(P3, 3), P3, TWO_K2)
        assert not is_minimal(disjoint_union([P4, K2]), P3, TWO_K2)

    def test_2p3_deletions_by_oracle(self):
        assert brute_arrows(TWO_P3, P3, TWO_K2)
        for e in TWO_P3.edge_list:
            assert not brute_arrows(delete_edge(TWO_P3, e), P3, TWO_K2)


class TestEnumeration:
    def test_generate_counts(self):
        # graphs without isolated vertices by edge count: 1, 2, 5, 11, 26, 68, 177
        per_size = {}
        for g in generate_graphs(14, 7):
            per_size[g.size()] = per_size.get(g.size(), 0) + 1
        assert [per_size[k] for k in range(1, 8)] == [1, 2, 5, 11, 26, 68, 177]

    def test_generate_pairwise_nonisomorphic(self):
        gs = generate_graphs(5, 5)
        for a, b in itertools.combinations(gs, 2):
            assert not brute_isomorphic(a, b)

    def test_k2_k2(self):
        assert forms(enumerate_minimal(K2, K2, 4, 4)) == forms([K2])

    def test_p3_k2(self):
        assert forms(enumerate_minimal(P3, K2, 3, 2)) == forms([P3])

    def test_p3_2k2(self):
        found = enumerate_minimal(P3, TWO_K2, 6, 5)
        assert forms(found) == forms([cycle(4), TWO_P3, cycle(5)])

    def test_p3_2k2_against_oracle(self):
        expected = [
            g
            for g in generate_graphs(6, 4)
            if brute_arrows(g, P3, TWO_K2)
            and all(not brute_arrows(delete_edge(g, e), P3, TWO_K2) for e in g.edge_list)
        ]
        assert forms(enumerate_minimal(P3, TWO_K2, 6, 4)) == forms(expected)
        assert canonical_form(TWO_P3) in forms(expected)

    def test_bad_bounds(self):
        with pytest.raises(ValueError):
            enumerate_minimal(K2, K2, 0, 3)


class TestFamilyConditions:
    def test_2p3_family_misses_cycles(self):
        rep = check_family_conditions([TWO_P3], P3, TWO_K2, 6, 5)
        assert rep.condition1
        assert rep.condition3
        assert not rep.condition2
        assert forms(rep.condition2_counterexamples) == forms([cycle(4), cycle(5)])
        assert rep.condition2_scope.startswith("bounded")
        for c in rep.condition2_counterexamples:
            assert brute_arrows(c, P3, TWO_K2) and not embeds(TWO_P3, c)

    def test_full_family_within_bounds(self):
        rep = check_family_conditions([cycle(4), TWO_P3, cycle(5)], P3, TWO_K2, 6, 5)
        assert rep.condition1 and rep.condition2 and rep.condition3

    def test_k2(self):
        rep = check_family_conditions([K2], K2, K2, 4, 4)
        assert rep.condition1 and rep.condition2 and rep.condition3

    def test_containment_fails_condition3(self):
        rep = check_family_conditions([P3, P4], P3, K2, 4, 3)
        assert not rep.condition3
        assert rep.containing_pairs == [(0, 1)]

    def test_empty_family(self):
        with pytest.raises(ValueError):
            check_family_conditions([], K2, K2, 2, 1)


def test_witness_edges():
    c = {(0, 1): RED, (1, 2): RED, (2, 3): BLUE}
    assert witness_edges(P4, P3, c, RED) == [(0, 1), (1, 2)]
    assert witness_edges(P4, P3, c, BLUE) is None
    assert color_class(P4, c, BLUE).edges == {(2, 3)}
