"""Interval graphs: greedy line partition and 2-hop star spanners.

The partition is the workhorse reused by the rectangle and fat-body
constructions, which restrict their objects to a horizontal line and
run the same machinery on the resulting intervals.

All comparisons are exact and closed (touching intervals intersect), on
purpose: the host graph is built with the same predicates, so the two
can never disagree at a boundary.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass
from typing import Sequence

from .geometry import GeometryError, Interval
from .graphs import IntersectionGraph, Spanner, make_spanner


@dataclass(frozen=True)
class Cell:
    """One cell of the partition: (lo, hi], or [lo, hi] when closed_lo.

    ``center`` indexes the input interval whose right endpoint produced
    hi; it contains the whole cell, so starring the cell's members on it
    uses true graph edges only.
    """

    lo: float
    hi: float
    closed_lo: bool
    center: int


class GreedyPartition:
    """Greedy breakpoint partition of a family of closed intervals.

    Per connected component (components of the interval graph itself):
    start at the leftmost endpoint p0 and repeatedly jump to the largest
    right endpoint among intervals containing the current breakpoint.
    The component's span splits into cells [p0, p1], (p1, p2], ...;
    every input interval meets at least one and at most two consecutive
    cells, which is what caps the star spanner at 2n edges.
    """

    def __init__(self, intervals: Sequence[tuple[float, float]]):
        items = []
        for i, (lo, hi) in enumerate(intervals):
            if lo > hi:
                raise GeometryError(f"interval {i} has lo > hi")
            items.append((float(lo), float(hi), i))
        self.m = len(items)
        cells: list[Cell] = []
        comp_breaks: list[tuple[float, ...]] = []

        order = sorted(items)  # by (lo, hi, index)
        pos = 0
        while pos < len(order):
            # new component starts here
            p_prev = order[pos][0]
            breaks = [p_prev]
            first = True
            max_hi = -float("inf")
            best = -1
            while True:
                while pos < len(order) and order[pos][0] <= p_prev:
                    lo, hi, idx = order[pos]
                    if hi > max_hi or (hi == max_hi and idx < best):
                        max_hi, best = hi, idx
                    pos += 1
                if max_hi > p_prev:
                    cells.append(Cell(p_prev, max_hi, first, best))
                    breaks.append(max_hi)
                    p_prev = max_hi
                    first = False
                else:
                    if first:
                        # point component: one degenerate closed cell
                        cells.append(Cell(p_prev, p_prev, True, best))
                    break
            comp_breaks.append(tuple(breaks))

        self.cells: tuple[Cell, ...] = tuple(cells)
        self.component_breakpoints: tuple[tuple[float, ...], ...] = tuple(comp_breaks)
        self._cell_lo = [c.lo for c in cells]
        self._cell_hi = [c.hi for c in cells]

        covers: list[list[int]] = [[] for _ in cells]
        for lo, hi, idx in items:
            mine = self.hits(lo, hi)
            assert 1 <= len(mine) <= 2, (
                f"interval {idx} meets {len(mine)} cells; partition broken"
            )
            for ci in mine:
                covers[ci].append(idx)
        self.covers: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(c)) for c in covers
        )

    def _overlaps_cell(self, ci: int, lo: float, hi: float) -> bool:
        c = self.cells[ci]
        if c.closed_lo:
            return hi >= c.lo and lo <= c.hi
        return hi > c.lo and lo <= c.hi

    def hits(self, lo: float, hi: float) -> list[int]:
        """Indices of cells the query interval [lo, hi] meets, in order."""
        if lo > hi:
            raise GeometryError("query interval has lo > hi")
        out: list[int] = []
        i = bisect_left(self._cell_hi, lo)
        while i < len(self.cells) and self._cell_lo[i] <= hi:
            if self._overlaps_cell(i, lo, hi):
                out.append(i)
            i += 1
        return out

    def locate(self, x: float) -> int | None:
        """Index of the cell containing the point x, if any."""
        i = bisect_left(self._cell_hi, x)
        if i < len(self.cells) and self._overlaps_cell(i, x, x):
            return i
        return None


def partition_stars(
    items: Sequence[tuple[int, float, float]],
) -> tuple[list[tuple[int, int]], GreedyPartition]:
    """Star edges of the greedy partition, mapped back to vertex ids.

    ``items`` are (vertex_id, lo, hi) triples.  Each cell contributes
    edges from its center's vertex to every other member's vertex; the
    center contains the whole cell and each member meets it, so every
    emitted pair shares a point of the line.
    """
    part = GreedyPartition([(lo, hi) for _, lo, hi in items])
    edges: list[tuple[int, int]] = []
    for cell, members in zip(part.cells, part.covers):
        cv = items[cell.center][0]
        for s in members:
            if s != cell.center:
                sv = items[s][0]
                edges.append((cv, sv) if cv < sv else (sv, cv))
    return edges, part


def interval_2hop(graph: IntersectionGraph) -> Spanner:
    """2-hop spanner of an interval graph with fewer than 2n edges.

    Any two intersecting intervals share a point, that point lies in
    some cell, and both intervals are members of that cell, so the
    common center bridges them in two hops.
    """
    if graph.objects is None or not all(
        isinstance(o, Interval) for o in graph.objects
    ):
        raise GeometryError("interval_2hop needs a graph backed by intervals")
    items = [(i, o.lo, o.hi) for i, o in enumerate(graph.objects)]
    edges, _ = partition_stars(items)
    uniq = sorted(set(edges))
    return make_spanner(graph.n, 2, uniq, ["cell-star"] * len(uniq))


def line_restricted_2hop(
    items: Sequence[tuple[int, float, float]],
) -> list[tuple[int, int]]:
    """Star edges covering, in 2 hops, every pair whose line traces meet.

    ``items`` are (vertex_id, lo, hi) where [lo, hi] is the trace of the
    vertex's object on a fixed horizontal line; the caller guarantees
    each listed object actually meets the line (so traces are nonempty
    and trace overlap implies a true graph edge).
    """
    for vid, lo, hi in items:
        if lo > hi:
            raise GeometryError(f"vertex {vid}: empty trace on the line")
    edges, _ = partition_stars(items)
    return sorted(set(edges))
