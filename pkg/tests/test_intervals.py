"""Tests for the greedy line partition and interval star spanners."""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopspan.geometry import GeometryError, Interval
from hopspan.graphs import build_intersection_graph, verify_hop_spanner
from hopspan.intervals import (
    GreedyPartition,
    interval_2hop,
    line_restricted_2hop,
    partition_stars,
)


class TestGreedyPartition:
    def test_frozen_three_interval_trace(self):
        part = GreedyPartition([(0, 2), (1, 4), (3, 5)])
        assert part.component_breakpoints == ((0.0, 2.0, 4.0, 5.0),)
        assert [c.center for c in part.cells] == [0, 1, 2]
        assert part.covers == ((0, 1), (1, 2), (2,))

    def test_point_clique(self):
        part = GreedyPartition([(1.0, 1.0), (1.0, 1.0), (1.0, 1.0)])
        assert len(part.cells) == 1
        cell = part.cells[0]
        assert cell.lo == cell.hi == 1.0 and cell.closed_lo
        assert cell.center == 0
        assert part.covers == ((0, 1, 2),)

    def test_two_components(self):
        part = GreedyPartition([(0, 1), (0.5, 2), (5, 6), (5.5, 7)])
        assert len(part.component_breakpoints) == 2
        assert part.component_breakpoints[0][0] == 0.0
        assert part.component_breakpoints[1][0] == 5.0

    def test_touching_intervals_share_component(self):
        part = GreedyPartition([(0, 1), (1, 2)])
        assert len(part.component_breakpoints) == 1

    def test_center_tie_breaks_to_lowest_index(self):
        part = GreedyPartition([(0, 3), (0, 3)])
        assert part.cells[0].center == 0

    def test_nested_intervals(self):
        part = GreedyPartition([(0, 10), (2, 3), (4, 5)])
        # one cell: the big interval swallows everything
        assert part.component_breakpoints == ((0.0, 10.0),)
        assert part.covers == ((0, 1, 2),)

    def test_hits_and_locate(self):
        part = GreedyPartition([(0, 2), (1, 4), (3, 5)])
        assert part.hits(0.0, 0.5) == [0]
        assert part.hits(1.9, 4.5) == [0, 1, 2]
        assert part.hits(2.0, 2.0) == [0]  # cell 1 is (2, 4], so 2.0 is in cell 0
        assert part.hits(6.0, 7.0) == []
        assert part.locate(0.0) == 0
        assert part.locate(2.0) == 0
        assert part.locate(2.0000001) == 1
        assert part.locate(5.0) == 2
        assert part.locate(5.1) is None

    def test_rejects_inverted_query(self):
        part = GreedyPartition([(0, 1)])
        with pytest.raises(GeometryError):
            part.hits(2.0, 1.0)

    def test_every_interval_in_at_most_two_cells(self):
        rng = np.random.default_rng(21)
        for _ in range(30):
            los = rng.uniform(0, 50, size=80)
            lens = rng.uniform(0, 8, size=80)
            part = GreedyPartition(list(zip(los, los + lens)))
            for lo, ln in zip(los, lens):
                assert 1 <= len(part.hits(lo, lo + ln)) <= 2


class TestIntervalSpanner:
    def test_frozen_trace_edges(self):
        g = build_intersection_graph([Interval(0, 2), Interval(1, 4), Interval(3, 5)])
        s = interval_2hop(g)
        assert s.edges == ((0, 1), (1, 2))
        assert verify_hop_spanner(g, s).ok

    def test_clique_becomes_star(self):
        g = build_intersection_graph([Interval(0, 10)] + [
            Interval(i, i + 1) for i in range(9)
        ])
        s = interval_2hop(g)
        assert s.edge_count == 9
        assert verify_hop_spanner(g, s).ok

    def test_requires_interval_objects(self):
        from hopspan.graphs import graph_from_edges

        with pytest.raises(GeometryError):
            interval_2hop(graph_from_edges(3, [(0, 1)]))

    @pytest.mark.parametrize("seed", range(10))
    def test_random_instances_valid_and_sparse(self, seed):
        rng = np.random.default_rng(seed)
        n = int(rng.integers(2, 300))
        los = rng.uniform(0, n / 4, size=n)
        lens = rng.exponential(1.0, size=n)
        objs = [Interval(lo, lo + ln) for lo, ln in zip(los, lens)]
        g = build_intersection_graph(objs)
        s = interval_2hop(g)
        rep = verify_hop_spanner(g, s)
        assert rep.ok
        assert s.edge_count < 2 * n

    @settings(max_examples=60, deadline=None)
    @given(
        data=st.lists(
            st.tuples(
                st.floats(-100, 100, allow_nan=False),
                st.floats(0, 10, allow_nan=False),
            ),
            min_size=1,
            max_size=40,
        )
    )
    def test_property_valid_two_hop(self, data):
        objs = [Interval(lo, lo + ln) for lo, ln in data]
        g = build_intersection_graph(objs)
        s = interval_2hop(g)
        assert verify_hop_spanner(g, s).ok
        assert s.edge_count <= 2 * len(objs)

    def test_duplicate_intervals(self):
        objs = [Interval(0, 1)] * 5
        g = build_intersection_graph(objs)
        s = interval_2hop(g)
        assert verify_hop_spanner(g, s).ok
        assert s.edge_count == 4  # star at index 0


class TestLineRestricted:
    def test_maps_vertex_ids(self):
        # traces on a line for vertices 7, 3, 9
        edges = line_restricted_2hop([(7, 0.0, 2.0), (3, 1.0, 4.0), (9, 3.0, 5.0)])
        assert edges == [(3, 7), (3, 9)]

    def test_empty_trace_rejected(self):
        with pytest.raises(GeometryError):
            line_restricted_2hop([(0, 1.0, 0.0)])

    def test_partition_stars_returns_partition(self):
        edges, part = partition_stars([(0, 0.0, 1.0), (1, 0.5, 2.0)])
        assert [c.center for c in part.cells] == [0, 1]
        assert edges == [(0, 1)]
