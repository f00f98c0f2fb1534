import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_isomorphic
from strategies import tooth_fns
from ramsey_minimal.families import (
    Arithmetic,
    Comb,
    CompleteInfinite,
    DoubleRay,
    KRay,
    Matching,
    Periodic,
    Ray,
    Star,
    ToothFn,
    UnionCopies,
    comb_spine,
    eval_tooth,
    pair,
    spine_degree_first_branch,
    symbolic_from_obj,
    symbolic_to_obj,
    tooth_from_obj,
    tooth_to_obj,
    truncate,
    unpair,
)
from ramsey_minimal.graph import complete, find_embedding, is_isomorphic, is_valid_embedding, path, star
from ramsey_minimal.graph import EmbeddingMap
from ramsey_minimal.hubgraph import HubGraph, INF

IDENTITY = ToothFn((), Arithmetic(1, 1))
THREE_THEN_TWOS = ToothFn((3,), Periodic((2,)))
TWO_THEN_ONES = ToothFn((2,), Periodic((1,)))


VARIANTS = [Ray(), DoubleRay(), KRay(1), KRay(3), Star(), CompleteInfinite(), Comb(IDENTITY), Comb(THREE_THEN_TWOS), Comb(TWO_THEN_ONES), Matching(3), UnionCopies(2, Ray()), UnionCopies(3, Comb(IDENTITY))]


class TestToothFn:
    def test_examples(self):
        assert eval_tooth(THREE_THEN_TWOS, 1) == 3
        assert eval_tooth(IDENTITY, 5) == 5
        assert eval_tooth(TWO_THEN_ONES, 4) == 1

    def test_rejects_zero_index(self):
        with pytest.raises(ValueError):
            eval_tooth(IDENTITY, 0)

    def test_rejects_nonpositive_values(self):
        with pytest.raises(ValueError):
            ToothFn((0,), Periodic((1,)))
        with pytest.raises(ValueError):
            Periodic(())
        with pytest.raises(ValueError):
            Arithmetic(0, 1)

    def test_zero_step_becomes_periodic(self):
        assert ToothFn((), Arithmetic(4, 0)).tail == Periodic((4,))

    def test_first_branch(self):
        assert spine_degree_first_branch(THREE_THEN_TWOS) == 1
        assert spine_degree_first_branch(ToothFn((1, 1), Periodic((1,)))) is None
        assert spine_degree_first_branch(IDENTITY) == 2

    @settings(max_examples=200, deadline=None)
    @given(tooth_fns())
    def test_evaluation_rule(self, t):
        for n in range(1, 30):
            v = eval_tooth(t, n)
            assert v >= 1
            if n <= t.m:
                assert v == t.prefix[n - 1]
            elif isinstance(t.tail, Periodic):
                assert v == t.tail.cycle[(n - t.m - 1) % len(t.tail.cycle)]
            else:
                assert v == t.tail.start + (n - t.m - 1) * t.tail.step

    @settings(max_examples=200, deadline=None)
    @given(tooth_fns())
    def test_first_branch_is_least_index(self, t):
        s = spine_degree_first_branch(t)
        values = t.values(t.m + 12)
        if s is None:
            assert set(values) == {1}
        else:
            assert values[s - 1] > 1 and all(v == 1 for v in values[: s - 1])

    @settings(max_examples=200, deadline=None)
    @given(tooth_fns())
    def test_simplified_same_function(self, t):
        assert t.simplified().values(40) == t.values(40)

    @settings(max_examples=100, deadline=None)
    @given(tooth_fns())
    def test_json_roundtrip(self, t):
        assert tooth_from_obj(tooth_to_obj(t)) == t


class TestTruncate:
    def test_ray(self):
        assert is_isomorphic(truncate(Ray(), 3), path(4))

    def test_kray_unit(self):
        assert is_isomorphic(truncate(KRay(3), 1), star(3))

    def test_identity_comb_depth2(self):
        g = truncate(Comb(IDENTITY), 2)
        assert g.order() == 4 and g.size() == 3
        x0, x1, x2 = comb_spine(0), comb_spine(1), comb_spine(2)
        assert g.has_edge(x0, x1) and g.has_edge(x1, x2)
        assert g.degree(x2) == 2 and g.degree(x1) == 2

    def test_star_complete_doubleray(self):
        assert is_isomorphic(truncate(Star(), 4), star(4))
        assert is_isomorphic(truncate(CompleteInfinite(), 5), complete(5))
        assert is_isomorphic(truncate(DoubleRay(), 2), path(5))

    def test_hub_graph_redirected(self):
        with pytest.raises(TypeError, match="hub_truncate"):
            truncate(HubGraph.build(1, {(1,): INF}), 2)

    def test_depth_must_be_positive(self):
        with pytest.raises(ValueError):
            truncate(Ray(), 0)

    @pytest.mark.parametrize("g", VARIANTS, ids=repr)
    def test_monotone_labeled(self, g):
        for d in range(1, 6):
            small, big = truncate(g, d), truncate(g, d + 1)
            assert set(small.vertices) <= set(big.vertices) and small.edges <= big.edges
            assert is_valid_embedding(EmbeddingMap({v: v for v in small.vertices}), small, big)
            assert find_embedding(small, big) is not None

    @pytest.mark.parametrize("of", [Ray(), KRay(2), Comb(THREE_THEN_TWOS), Star()], ids=repr)
    def test_union_components(self, of):
        for n in (1, 2, 3):
            g = truncate(UnionCopies(n, of), 3)
            comps = g.components()
            assert len(comps) == n
            assert all(brute_isomorphic(c, truncate(of, 3)) for c in comps)

    @settings(max_examples=100, deadline=None)
    @given(tooth_fns(), st.integers(1, 6))
    def test_comb_shape_and_degrees(self, t, d):
        g = truncate(Comb(t), d)
        assert g.size() == d + sum(eval_tooth(t, n) - 1 for n in range(1, d + 1))
        assert g.is_connected()
        for n in range(d + 1):
            deg3 = 1 <= n < d and eval_tooth(t, n) > 1
            assert (g.degree(comb_spine(n)) == 3) == deg3

    def test_variant_json_roundtrip(self):
        for g in VARIANTS:
            assert symbolic_from_obj(symbolic_to_obj(g)) == g

    def test_unknown_family(self):
        with pytest.raises(ValueError):
            symbolic_from_obj({"family": "lattice"})


@settings(max_examples=200)
@given(st.integers(0, 200), st.integers(0, 200))
def test_pairing_inverts(n, j):
    assert unpair(pair(n, j)) == (n, j)
