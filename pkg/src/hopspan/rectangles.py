"""Hop spanners for axis-aligned rectangle intersection graphs.

Two constructions share the slab machinery:

* ``fat_rect_2hop``: a 2-hop spanner for families of alpha-fat
  rectangles, with O(alpha^2 n log n) edges.  Per slab-tree node, the
  rectangles reaching the bottom (resp. top) boundary line are starred
  through the greedy partition of their traces on that line; rectangles
  spanning the whole slab are starred through the partition of their
  x-projections, and strictly interior rectangles attach to the star
  center of every partition cell their x-projection meets (fatness caps
  how many that can be).

* ``rect_3hop``: a 3-hop spanner for arbitrary rectangles, with
  O(n log^2 n) edges.  The same node spanner in its "corner" variant
  (interior rectangles attach only at cells containing their corner
  x-coordinates) covers every pair where one rectangle holds a corner
  of the intersection; the remaining "crossing" pairs (one rectangle
  piercing the other like a plus sign) are grouped into true bicliques
  on a dyadic grid over compressed coordinates and each biclique is
  wired with a double star.

Assumes general position: distinct y-coordinates across rectangle
corners (random perturbation restores this; the verifier catches
violations after the fact).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .geometry import AxisRect, GeometryError, fatness
from .graphs import IntersectionGraph, Spanner, SpannerError, make_spanner
from .intervals import line_restricted_2hop, partition_stars
from .slabs import SlabTree, build_slab_tree


def _rects_of(graph: IntersectionGraph) -> list[AxisRect]:
    if graph.objects is None or not all(
        isinstance(o, AxisRect) for o in graph.objects
    ):
        raise GeometryError("this construction needs a graph backed by rectangles")
    return list(graph.objects)


def rect_slab_tree(graph: IntersectionGraph) -> SlabTree:
    """Slab tree for a rectangle graph, split on intersection bottoms.

    Witness of a pair = y-coordinate of the lowest point of the
    intersection, i.e. the larger of the two bottom edges.
    """
    rects = _rects_of(graph)
    extents = [(r.y_lo, r.y_hi) for r in rects]
    witnesses = [max(rects[u].y_lo, rects[v].y_lo) for u, v in graph.edges]
    return build_slab_tree(extents, witnesses)


# ---------------------------------------------------------------------------
# per-node spanner


@dataclass(frozen=True)
class NodeBudget:
    """Edges a slab node emitted, for auditing per-node bounds."""

    depth: int
    size: int  # |S(P)|
    line_edges: int
    across_edges: int
    attach_edges: int

    @property
    def total(self) -> int:
        return self.line_edges + self.across_edges + self.attach_edges


def _cell_components(part) -> list[int]:
    """Component id of each partition cell, in cell order."""
    out: list[int] = []
    for comp_id, breaks in enumerate(part.component_breakpoints):
        ncells = max(1, len(breaks) - 1)
        out.extend([comp_id] * ncells)
    assert len(out) == len(part.cells)
    return out


def _node_edges(
    rects: Sequence[AxisRect],
    node,
    variant: str,
    alpha_sq: float | None,
    sink: dict[tuple[int, int], str],
) -> NodeBudget:
    def put(u: int, v: int, tag: str) -> int:
        if u == v:
            return 0
        e = (u, v) if u < v else (v, u)
        sink.setdefault(e, tag)
        return 1

    line_edges = 0
    for ids, tag in ((node.bottom, "b-line"), (node.top, "t-line")):
        if len(ids) > 1:
            items = [(i, rects[i].x_lo, rects[i].x_hi) for i in ids]
            for u, v in line_restricted_2hop(items):
                line_edges += put(u, v, tag)

    across_edges = attach_edges = 0
    if node.across:
        items = [(a, rects[a].x_lo, rects[a].x_hi) for a in node.across]
        star_edges, part = partition_stars(items)
        for u, v in star_edges:
            across_edges += put(u, v, "c-star")
        centers = [items[c.center][0] for c in part.cells]
        if variant == "fat":
            comp_of = _cell_components(part)
            for s in node.inside:
                hit = part.hits(rects[s].x_lo, rects[s].x_hi)
                if not hit:
                    continue
                comps = len({comp_of[ci] for ci in hit})
                cap = 2.0 * alpha_sq + comps + 1e-9
                if len(hit) > cap:
                    raise SpannerError(
                        f"interior rectangle {s} meets {len(hit)} cells across "
                        f"{comps} runs; fatness cap is {cap:.3f}"
                    )
                for ci in hit:
                    attach_edges += put(s, centers[ci], "c-att")
        elif variant == "corner":
            for s in node.inside:
                for x in (rects[s].x_lo, rects[s].x_hi):
                    ci = part.locate(x)
                    if ci is not None:
                        attach_edges += put(s, centers[ci], "c-att")
        else:
            raise GeometryError(f"unknown node-spanner variant {variant!r}")

    return NodeBudget(
        depth=node.depth,
        size=len(node.members),
        line_edges=line_edges,
        across_edges=across_edges,
        attach_edges=attach_edges,
    )


def _build_node_spanner(
    graph: IntersectionGraph, variant: str
) -> tuple[dict[tuple[int, int], str], list[NodeBudget]]:
    rects = _rects_of(graph)
    alpha_sq: float | None = None
    if variant == "fat":
        alpha_sq = max(
            (fatness(r).alpha ** 2 for r in rects), default=1.0
        )
    tree = rect_slab_tree(graph)
    sink: dict[tuple[int, int], str] = {}
    budgets = [
        _node_edges(rects, node, variant, alpha_sq, sink) for node in tree.nodes()
    ]
    return sink, budgets


def fat_rect_2hop_report(
    graph: IntersectionGraph, variant: str = "fat"
) -> tuple[Spanner, list[NodeBudget]]:
    """2-hop node spanner plus the per-node edge budgets."""
    sink, budgets = _build_node_spanner(graph, variant)
    edges = sorted(sink)
    spanner = make_spanner(graph.n, 2, edges, [sink[e] for e in edges])
    return spanner, budgets


def fat_rect_2hop(graph: IntersectionGraph) -> Spanner:
    """2-hop spanner for fat axis-aligned rectangles."""
    return fat_rect_2hop_report(graph, "fat")[0]


def corner_2hop(graph: IntersectionGraph) -> Spanner:
    """Corner-variant node spanner for arbitrary rectangles.

    Covers, in 2 hops, every intersecting pair except the crossing
    configurations (one rectangle piercing the other), which
    ``rect_3hop`` finishes off with biclique double stars.  Not a
    complete 2-hop spanner by itself.
    """
    return fat_rect_2hop_report(graph, "corner")[0]


# ---------------------------------------------------------------------------
# crossing pairs: compressed coordinates, dyadic streaks, bicliques


@dataclass(frozen=True)
class CompressedRects:
    """Rectangle endpoints ranked into distinct integers per axis.

    Ranks order by (value, low-end-before-high-end, index), which keeps
    touching rectangles overlapping after compression, so interval
    containment in rank space implies closed intersection in the plane.
    """

    x_lo: tuple[int, ...]
    x_hi: tuple[int, ...]
    y_lo: tuple[int, ...]
    y_hi: tuple[int, ...]
    size: int  # ranks padded to a power of two
    bits: int


def compress_rects(rects: Sequence[AxisRect]) -> CompressedRects:
    n = len(rects)

    def rank(values_lo: list[float], values_hi: list[float]) -> tuple[list[int], list[int]]:
        occ = [(v, 0, i) for i, v in enumerate(values_lo)]
        occ += [(v, 1, i) for i, v in enumerate(values_hi)]
        occ.sort()
        lo = [0] * n
        hi = [0] * n
        for r, (_, which, i) in enumerate(occ):
            if which == 0:
                lo[i] = r
            else:
                hi[i] = r
        return lo, hi

    xl, xh = rank([r.x_lo for r in rects], [r.x_hi for r in rects])
    yl, yh = rank([r.y_lo for r in rects], [r.y_hi for r in rects])
    bits = max(1, (2 * n - 1).bit_length())
    return CompressedRects(
        tuple(xl), tuple(xh), tuple(yl), tuple(yh), size=1 << bits, bits=bits
    )


def maximal_streak(p: int, lo: int, hi: int) -> tuple[int, int]:
    """Largest dyadic block [start, start+length) with p inside and
    the whole block within the inclusive rank range [lo, hi]."""
    if not (lo <= p <= hi):
        raise SpannerError(f"point {p} outside rank range [{lo}, {hi}]")
    start, length = p, 1
    while True:
        plen = length << 1
        pstart = start & ~(plen - 1)
        if pstart >= lo and pstart + plen - 1 <= hi:
            start, length = pstart, plen
        else:
            return start, length


def classify_pair(
    cr: CompressedRects, u: int, v: int
) -> tuple[str, int, int]:
    """("cross", horizontal, vertical) or ("corner", u, v).

    ``horizontal`` is the rectangle whose x-range contains the other's
    while its own y-range is contained.  Evaluated in rank space, so
    ties in raw coordinates resolve deterministically.
    """
    if (
        cr.x_lo[u] < cr.x_lo[v]
        and cr.x_hi[v] < cr.x_hi[u]
        and cr.y_lo[v] < cr.y_lo[u]
        and cr.y_hi[u] < cr.y_hi[v]
    ):
        return ("cross", u, v)
    if (
        cr.x_lo[v] < cr.x_lo[u]
        and cr.x_hi[u] < cr.x_hi[v]
        and cr.y_lo[u] < cr.y_lo[v]
        and cr.y_hi[v] < cr.y_hi[u]
    ):
        return ("cross", v, u)
    return ("corner", u, v)


@dataclass(frozen=True)
class Biclique:
    """All of a_side x b_side are true edges; keyed by a dyadic grid cell."""

    x_run: tuple[int, int]  # (start, length) in x ranks
    y_run: tuple[int, int]
    a_side: tuple[int, ...]  # horizontal rectangles
    b_side: tuple[int, ...]  # vertical rectangles


def crossing_biclique_cover(graph: IntersectionGraph) -> list[Biclique]:
    """Group every crossing pair into dyadic-grid bicliques.

    For a crossing pair, the intersection's lower-left corner (in rank
    space) is snapped to the maximal dyadic x-run inside the horizontal
    rectangle's x-range and the maximal dyadic y-run inside the vertical
    rectangle's y-range.  Pairs sharing the grid cell form one biclique;
    membership of any horizontal with any vertical of the same cell is a
    true intersection because each contains the run that contains an
    endpoint of the other.
    """
    rects = _rects_of(graph)
    cr = compress_rects(rects)
    grids: dict[tuple[tuple[int, int], tuple[int, int]], tuple[set[int], set[int]]] = {}
    for u, v in graph.edges:
        kind, h, w = classify_pair(cr, u, v)
        if kind != "cross":
            continue
        sx = max(cr.x_lo[h], cr.x_lo[w])
        sy = max(cr.y_lo[h], cr.y_lo[w])
        x_run = maximal_streak(sx, cr.x_lo[h], cr.x_hi[h])
        y_run = maximal_streak(sy, cr.y_lo[w], cr.y_hi[w])
        a, b = grids.setdefault((x_run, y_run), (set(), set()))
        a.add(h)
        b.add(w)
    return [
        Biclique(x_run, y_run, tuple(sorted(a)), tuple(sorted(b)))
        for (x_run, y_run), (a, b) in sorted(grids.items())
    ]


def bistar_edges(
    a_side: Sequence[int], b_side: Sequence[int]
) -> list[tuple[int, int]]:
    """Double star on a biclique: |A| + |B| - 1 edges, diameter 3.

    Every a reaches the B hub directly; every b reaches it via the A
    hub, so any a-b pair is linked by a - b0 - a0 - b or shorter.
    """
    if not a_side or not b_side:
        raise SpannerError("bistar needs both sides nonempty")
    a0, b0 = min(a_side), min(b_side)
    edges = {(min(a, b0), max(a, b0)) for a in a_side}
    edges |= {(min(a0, b), max(a0, b)) for b in b_side}
    return sorted(edges)


def rect_3hop(graph: IntersectionGraph) -> Spanner:
    """3-hop spanner for arbitrary axis-aligned rectangles."""
    sink, _ = _build_node_spanner(graph, "corner")
    for bc in crossing_biclique_cover(graph):
        for e in bistar_edges(bc.a_side, bc.b_side):
            sink.setdefault(e, "bistar")
    edges = sorted(sink)
    return make_spanner(graph.n, 3, edges, [sink[e] for e in edges])


def biclique_memberships(bicliques: Sequence[Biclique]) -> dict[int, int]:
    """How many distinct bicliques each rectangle sits in (either side)."""
    counts: dict[int, int] = {}
    for bc in bicliques:
        for r in bc.a_side + bc.b_side:
            counts[r] = counts.get(r, 0) + 1
    return counts
