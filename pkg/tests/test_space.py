import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from netspace import (POINT_MASS_ZERO, EdgeDistribution, GraphSpace, InputError,
                      RealizedGraph, mle_graph, neighbors, sample_graph)

import support


class TestEdgeDistribution:
    def test_rejects_bad_prob_sum(self):
        with pytest.raises(InputError, match="sum to 1"):
            EdgeDistribution((0.0, 1.0), (0.5, 0.6))

    def test_rejects_nonpositive_prob(self):
        with pytest.raises(InputError, match="not > 0"):
            EdgeDistribution((0.0, 1.0), (1.0, 0.0))

    def test_rejects_unsorted_support(self):
        with pytest.raises(InputError, match="strictly increasing"):
            EdgeDistribution((0.5, 0.5), (0.5, 0.5))

    def test_rejects_out_of_range_support(self):
        with pytest.raises(InputError, match="outside"):
            EdgeDistribution((0.0, 1.5), (0.5, 0.5))

    def test_rejects_length_mismatch(self):
        with pytest.raises(InputError, match="same length"):
            EdgeDistribution((0.0, 1.0), (1.0,))

    def test_mode_unique_argmax(self):
        d = EdgeDistribution((0.0, 1.0), (0.2, 0.8))
        assert d.mode == 1.0

    def test_mode_tie_breaks_to_smallest(self):
        d = EdgeDistribution((0.3, 0.7), (0.5, 0.5))
        assert d.mode == 0.3

    def test_mass_on_and_off_support(self):
        d = EdgeDistribution((0.0, 0.5, 1.0), (0.6, 0.3, 0.1))
        assert d.mass(0.5) == 0.3
        assert d.mass(0.25) == 0.0
        assert d.max_mass == 0.6

    @given(st.integers(1, 5), st.integers(0, 10_000))
    @settings(max_examples=50, deadline=None)
    def test_sample_stays_on_support(self, size, seed):
        import numpy as np
        rng = np.random.default_rng(seed)
        support_vals = tuple(sorted(rng.choice(support.DYADIC, size=size, replace=False)))
        raw = rng.random(size) + 0.01
        d = EdgeDistribution(support_vals, tuple(raw / raw.sum()))
        assert d.sample(rng.random()) in support_vals


class TestGraphSpaceValidation:
    def test_rejects_threshold_out_of_range(self):
        with pytest.raises(InputError, match="threshold"):
            GraphSpace(2, (0.5, 1.5), (0, 0), {})

    def test_rejects_bad_label(self):
        with pytest.raises(InputError, match="label"):
            GraphSpace(2, (0.5, 0.5), (0, 2), {})

    def test_rejects_wrong_lengths(self):
        with pytest.raises(InputError, match="thresholds"):
            GraphSpace(3, (0.5, 0.5), (0, 0, 0), {})

    def test_rejects_self_pair(self):
        with pytest.raises(InputError, match="pair"):
            GraphSpace(2, (0.5, 0.5), (0, 0), {(1, 1): POINT_MASS_ZERO})

    def test_rejects_reversed_pair(self):
        with pytest.raises(InputError, match="pair"):
            GraphSpace(2, (0.5, 0.5), (0, 0), {(1, 0): POINT_MASS_ZERO})

    def test_default_dist_is_point_mass_at_zero(self):
        space = GraphSpace(3, (0.5,) * 3, (0,) * 3, {})
        assert space.dist(0, 2) == POINT_MASS_ZERO


class TestRealizedGraph:
    def test_zero_weights_are_dropped(self):
        g = RealizedGraph(3, {(0, 1): 0.0, (0, 2): 0.4})
        assert g.weights == {(0, 2): 0.4}
        assert g.weight(0, 1) == 0.0
        assert g.weight(2, 0) == 0.4

    def test_rejects_out_of_range_weight(self):
        with pytest.raises(InputError, match="outside"):
            RealizedGraph(2, {(0, 1): 1.2})

    def test_replace_returns_new_graph(self):
        g = RealizedGraph(3, {(0, 1): 0.4})
        h = g.replace(0, 1, 0.0)
        assert g.weights == {(0, 1): 0.4}
        assert h.weights == {}


class TestMleGraph:
    def test_all_point_mass_zero_gives_empty_map(self):
        space = GraphSpace(3, (0.5,) * 3, (0,) * 3,
                           {(0, 1): POINT_MASS_ZERO, (1, 2): POINT_MASS_ZERO})
        assert mle_graph(space).weights == {}

    def test_unique_argmax(self):
        space = GraphSpace(2, (0.5, 0.5), (0, 0),
                           {(0, 1): EdgeDistribution((0.0, 1.0), (0.2, 0.8))})
        assert mle_graph(space).weights == {(0, 1): 1.0}

    def test_tie_broken_to_smallest_support_value(self):
        space = GraphSpace(2, (0.5, 0.5), (0, 0),
                           {(0, 1): EdgeDistribution((0.3, 0.7), (0.5, 0.5))})
        assert mle_graph(space).weights == {(0, 1): 0.3}

    def test_idempotent(self):
        for seed in range(20):
            space = support.random_space(seed, max_n=8)
            assert mle_graph(space) == mle_graph(space)


class TestSampleGraph:
    def test_point_mass_space_matches_mle_for_any_seed(self):
        space = GraphSpace(3, (0.5,) * 3, (0,) * 3,
                           {(0, 1): support.point_mass(0.4), (1, 2): support.point_mass(0.9)})
        for seed in (0, 1, 17, 999):
            assert sample_graph(space, seed) == mle_graph(space)

    def test_single_atom_always_drawn(self):
        space = GraphSpace(2, (0.5, 0.5), (0, 0), {(0, 1): support.point_mass(0.5)})
        assert all(sample_graph(space, s).weight(0, 1) == 0.5 for s in range(10))

    def test_fair_coin_frequency(self):
        # Binomial(10000, 0.5): the central 99.9% interval is
        # 5000 +- 3.2905 * 50, i.e. frequencies in [0.48355, 0.51645].
        space = GraphSpace(2, (0.5, 0.5), (0, 0),
                           {(0, 1): EdgeDistribution((0.0, 1.0), (0.5, 0.5))})
        hits = sum(sample_graph(space, s).weight(0, 1) == 1.0 for s in range(10_000))
        assert 0.48355 <= hits / 10_000 <= 0.51645
        assert 0.47 <= hits / 10_000 <= 0.53

    def test_deterministic_across_random_spaces(self):
        for seed in range(100):
            space = support.random_space(seed, max_n=10)
            assert sample_graph(space, seed * 7 + 1) == sample_graph(space, seed * 7 + 1)

    def test_samples_stay_on_support(self):
        for seed in range(50):
            space = support.random_space(seed, max_n=10)
            graph = sample_graph(space, seed + 12345)
            for pair, w in graph.weights.items():
                assert w in space.dists[pair].support

    def test_implicit_edge_equivalence(self):
        explicit = GraphSpace(3, (0.5,) * 3, (0,) * 3,
                              {(0, 1): POINT_MASS_ZERO, (1, 2): support.point_mass(0.75)})
        implicit = GraphSpace(3, (0.5,) * 3, (0,) * 3,
                              {(1, 2): support.point_mass(0.75)})
        assert mle_graph(explicit) == mle_graph(implicit)
        for seed in range(10):
            assert sample_graph(explicit, seed) == sample_graph(implicit, seed)


class TestNeighbors:
    def test_empty_graph(self):
        assert neighbors(RealizedGraph(3, {}), 1) == []

    def test_direct_read_sorted(self):
        g = RealizedGraph(3, {(0, 1): 0.4, (0, 2): 0.6})
        assert neighbors(g, 0) == [(1, 0.4), (2, 0.6)]

    def test_isolated_node(self):
        g = RealizedGraph(3, {(0, 1): 0.4})
        assert neighbors(g, 2) == []

    def test_out_of_range_rejected(self):
        with pytest.raises(InputError, match="out of range"):
            neighbors(RealizedGraph(3, {}), 3)
