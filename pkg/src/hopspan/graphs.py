"""Intersection graphs, hop-spanner containers, and the verifier.

The verifier is the trust anchor of the package: every construction in
the other modules is expected to be re-checked with
:func:`verify_hop_spanner`, which compares hop distances in the spanner
against the host graph edge by edge using bitset reachability.  It
shares no geometry with the constructions, only the finished graphs.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .geometry import (
    AxisRect,
    ConvexPolygon,
    GeomObject,
    Interval,
    Translate,
    UnitDisk,
    intersects,
    polygons_overlap,
)


class SpannerError(ValueError):
    """Invalid spanner or verification input."""


class NotASubgraphError(SpannerError):
    """The candidate spanner contains an edge absent from the host graph."""


# ---------------------------------------------------------------------------
# graphs


class IntersectionGraph:
    """Undirected graph on vertices 0..n-1, optionally backed by geometry.

    ``objects[i]`` is the geometric object of vertex i, or None for
    abstract graphs.  Adjacency is stored both as sorted neighbor tuples
    and as a frozenset of (u, v) pairs with u < v.
    """

    __slots__ = ("n", "objects", "adj", "edge_set")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        objects: Sequence[GeomObject] | None = None,
    ):
        if objects is not None and len(objects) != n:
            raise SpannerError("objects length does not match vertex count")
        self.n = n
        self.objects = tuple(objects) if objects is not None else None
        pairs = set()
        for u, v in edges:
            if u == v:
                raise SpannerError(f"self loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise SpannerError(f"edge ({u}, {v}) out of range for n={n}")
            pairs.add((u, v) if u < v else (v, u))
        self.edge_set = frozenset(pairs)
        nbrs: list[list[int]] = [[] for _ in range(n)]
        for u, v in pairs:
            nbrs[u].append(v)
            nbrs[v].append(u)
        self.adj = tuple(tuple(sorted(b)) for b in nbrs)

    @property
    def edges(self) -> list[tuple[int, int]]:
        return sorted(self.edge_set)

    @property
    def edge_count(self) -> int:
        return len(self.edge_set)

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_set

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self.adj[u]

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def connected_components(self) -> list[list[int]]:
        seen = [False] * self.n
        out = []
        for s in range(self.n):
            if seen[s]:
                continue
            comp = [s]
            seen[s] = True
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for v in self.adj[u]:
                    if not seen[v]:
                        seen[v] = True
                        comp.append(v)
                        queue.append(v)
            out.append(sorted(comp))
        return out

    def __repr__(self) -> str:
        return f"IntersectionGraph(n={self.n}, m={self.edge_count})"


def graph_from_edges(n: int, edges: Iterable[tuple[int, int]]) -> IntersectionGraph:
    """Abstract graph without geometry."""
    return IntersectionGraph(n, edges, objects=None)


# ---------------------------------------------------------------------------
# building intersection graphs from geometry

_CHUNK = 512  # row block for pairwise numpy predicates


def _pairs_from_mask(i0: int, block: np.ndarray) -> list[tuple[int, int]]:
    ii, jj = np.nonzero(block)
    return [(int(i0 + a), int(b)) for a, b in zip(ii, jj) if i0 + a < b]


def _disk_edges(objs: Sequence[UnitDisk]) -> list[tuple[int, int]]:
    xy = np.array([[o.x, o.y] for o in objs])
    n = len(objs)
    out: list[tuple[int, int]] = []
    for i0 in range(0, n, _CHUNK):
        hi = min(i0 + _CHUNK, n)
        dx = xy[i0:hi, 0][:, None] - xy[None, :, 0]
        dy = xy[i0:hi, 1][:, None] - xy[None, :, 1]
        out.extend(_pairs_from_mask(i0, dx * dx + dy * dy <= 1.0))
    return out


def _interval_edges(objs: Sequence[Interval]) -> list[tuple[int, int]]:
    lo = np.array([o.lo for o in objs])
    hi = np.array([o.hi for o in objs])
    n = len(objs)
    out: list[tuple[int, int]] = []
    for i0 in range(0, n, _CHUNK):
        j = min(i0 + _CHUNK, n)
        mask = (lo[i0:j][:, None] <= hi[None, :]) & (lo[None, :] <= hi[i0:j][:, None])
        out.extend(_pairs_from_mask(i0, mask))
    return out


def _rect_edges(objs: Sequence[AxisRect]) -> list[tuple[int, int]]:
    xl = np.array([o.x_lo for o in objs])
    xh = np.array([o.x_hi for o in objs])
    yl = np.array([o.y_lo for o in objs])
    yh = np.array([o.y_hi for o in objs])
    n = len(objs)
    out: list[tuple[int, int]] = []
    for i0 in range(0, n, _CHUNK):
        j = min(i0 + _CHUNK, n)
        mask = (
            (xl[i0:j][:, None] <= xh[None, :])
            & (xl[None, :] <= xh[i0:j][:, None])
            & (yl[i0:j][:, None] <= yh[None, :])
            & (yl[None, :] <= yh[i0:j][:, None])
        )
        out.extend(_pairs_from_mask(i0, mask))
    return out


def _polygon_edges(polys: Sequence[ConvexPolygon]) -> list[tuple[int, int]]:
    # bbox prefilter in bulk, exact SAT on the survivors
    xl = np.array([p.min_x for p in polys])
    xh = np.array([p.max_x for p in polys])
    yl = np.array([p.min_y for p in polys])
    yh = np.array([p.max_y for p in polys])
    n = len(polys)
    out: list[tuple[int, int]] = []
    for i0 in range(0, n, _CHUNK):
        j = min(i0 + _CHUNK, n)
        mask = (
            (xl[i0:j][:, None] <= xh[None, :])
            & (xl[None, :] <= xh[i0:j][:, None])
            & (yl[i0:j][:, None] <= yh[None, :])
            & (yl[None, :] <= yh[i0:j][:, None])
        )
        for u, v in _pairs_from_mask(i0, mask):
            if polygons_overlap(polys[u].vertices, polys[v].vertices):
                out.append((u, v))
    return out


def build_intersection_graph(objects: Sequence[GeomObject]) -> IntersectionGraph:
    """Intersection graph of a homogeneous object list.

    Uses vectorized pairwise predicates for disks, intervals, and
    rectangles, and a bounding-box prefilter plus exact tests for convex
    polygons and translates.  A mixed list falls back to the generic
    pairwise predicate.
    """
    objects = list(objects)
    n = len(objects)
    if n == 0:
        return IntersectionGraph(0, [], objects=[])
    kinds = {type(o) for o in objects}
    if kinds == {UnitDisk}:
        edges = _disk_edges(objects)
    elif kinds == {Interval}:
        edges = _interval_edges(objects)
    elif kinds == {AxisRect}:
        edges = _rect_edges(objects)
    elif kinds == {ConvexPolygon}:
        edges = _polygon_edges(objects)
    elif kinds == {Translate}:
        edges = _polygon_edges([t.realized() for t in objects])
    else:
        edges = [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if intersects(objects[u], objects[v])
        ]
    return IntersectionGraph(n, edges, objects=objects)


# ---------------------------------------------------------------------------
# spanners


@dataclass(frozen=True)
class Spanner:
    """Candidate t-hop spanner: a subgraph given by its edge list.

    Edges are stored sorted with u < v; ``provenance`` is a parallel
    tuple of short strings saying which rule emitted each edge (useful
    when auditing per-node edge budgets).
    """

    n: int
    t: int
    edges: tuple[tuple[int, int], ...]
    provenance: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.t < 1:
            raise SpannerError(f"hop bound must be >= 1, got {self.t}")
        edges = tuple(sorted((u, v) if u < v else (v, u) for u, v in self.edges))
        if len(set(edges)) != len(edges):
            raise SpannerError("duplicate spanner edge")
        for u, v in edges:
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise SpannerError(f"bad spanner edge ({u}, {v}) for n={self.n}")
        prov = self.provenance
        if not prov:
            prov = ("unspecified",) * len(edges)
        if len(prov) != len(self.edges):
            raise SpannerError("provenance length does not match edge count")
        if edges != tuple(self.edges):
            # re-sort provenance together with the edges
            order = sorted(
                range(len(self.edges)),
                key=lambda i: (
                    min(self.edges[i]),
                    max(self.edges[i]),
                ),
            )
            prov = tuple(prov[i] for i in order)
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "provenance", prov)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def to_json(self) -> str:
        return json.dumps(
            {
                "n": self.n,
                "t": self.t,
                "edges": [[u, v] for u, v in self.edges],
                "provenance": list(self.provenance),
            }
        )

    @staticmethod
    def from_json(text: str) -> "Spanner":
        data = json.loads(text)
        prov = data.get("provenance")
        return Spanner(
            n=int(data["n"]),
            t=int(data["t"]),
            edges=tuple((int(u), int(v)) for u, v in data["edges"]),
            provenance=tuple(prov) if prov else (),
        )


def make_spanner(
    n: int,
    t: int,
    edges: Iterable[tuple[int, int]],
    provenance: Iterable[str] | None = None,
) -> Spanner:
    edges = tuple(edges)
    prov = tuple(provenance) if provenance is not None else ()
    return Spanner(n=n, t=t, edges=edges, provenance=prov)


# ---------------------------------------------------------------------------
# verification


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a candidate spanner against its host graph."""

    ok: bool
    t: int
    n: int
    edges_checked: int
    max_observed_stretch: int  # t + 1 stands for "more than t hops"
    failures: tuple[tuple[int, int], ...] = ()  # first few violating edges

    def __str__(self) -> str:
        if self.ok:
            return (
                f"ok: {self.edges_checked} edges within {self.t} hops "
                f"(max observed {self.max_observed_stretch})"
            )
        shown = ", ".join(f"({u},{v})" for u, v in self.failures)
        return (
            f"FAIL: {len(self.failures)}+ of {self.edges_checked} edges "
            f"exceed {self.t} hops, e.g. {shown}"
        )


def _bitset_rows(n: int, edges: np.ndarray) -> np.ndarray:
    """Rows R[u] = bitset of {u} union N(u)."""
    w = (n + 63) >> 6
    rows = np.zeros((n, w), dtype=np.uint64)
    idx = np.arange(n)
    rows[idx, idx >> 6] |= np.uint64(1) << (idx & 63).astype(np.uint64)
    if len(edges):
        us, vs = edges[:, 0], edges[:, 1]
        np.bitwise_or.at(
            rows, (us, vs >> 6), np.uint64(1) << (vs & 63).astype(np.uint64)
        )
        np.bitwise_or.at(
            rows, (vs, us >> 6), np.uint64(1) << (us & 63).astype(np.uint64)
        )
    return rows


def _test_bits(rows: np.ndarray, us: np.ndarray, vs: np.ndarray) -> np.ndarray:
    return (rows[us, vs >> 6] >> (vs & 63).astype(np.uint64)) & np.uint64(1) != 0


def verify_hop_spanner(
    graph: IntersectionGraph, spanner: Spanner, t: int | None = None
) -> VerificationReport:
    """Check every host edge is within t hops in the spanner.

    Equivalent to running a BFS truncated at depth t from each edge
    endpoint, implemented as t rounds of bitset reachability (packed
    uint64 rows).  Raises NotASubgraphError when the spanner uses an
    edge the host graph does not have, so an "efficient" spanner can
    never cheat by inventing shortcuts.
    """
    if t is None:
        t = spanner.t
    if t < 1:
        raise SpannerError(f"hop bound must be >= 1, got {t}")
    if spanner.n != graph.n:
        raise SpannerError(
            f"vertex count mismatch: spanner has {spanner.n}, graph has {graph.n}"
        )
    for u, v in spanner.edges:
        if (u, v) not in graph.edge_set:
            raise NotASubgraphError(
                f"spanner edge ({u}, {v}) is not an edge of the host graph"
            )

    n = graph.n
    g_edges = np.array(sorted(graph.edge_set), dtype=np.int64).reshape(-1, 2)
    m = len(g_edges)
    if m == 0:
        return VerificationReport(True, t, n, 0, 0)

    h_edges = np.array(spanner.edges, dtype=np.int64).reshape(-1, 2)
    reach = _bitset_rows(n, h_edges)  # k = 1

    # expansion structure: contributions grouped by endpoint
    if len(h_edges):
        both_u = np.concatenate([h_edges[:, 0], h_edges[:, 1]])
        both_v = np.concatenate([h_edges[:, 1], h_edges[:, 0]])
        order = np.argsort(both_u, kind="stable")
        su, sv = both_u[order], both_v[order]
        groups, starts = np.unique(su, return_index=True)
    else:
        groups = starts = sv = np.array([], dtype=np.int64)

    base = reach
    us, vs = g_edges[:, 0], g_edges[:, 1]
    stretch = np.full(m, t + 1, dtype=np.int64)
    pending = np.ones(m, dtype=bool)
    for k in range(1, t + 1):
        if k > 1:
            nxt = base.copy()
            if len(groups):
                contrib = np.bitwise_or.reduceat(reach[sv], starts, axis=0)
                nxt[groups] |= contrib
            reach = nxt
        hit = pending & _test_bits(reach, us, vs)
        stretch[hit] = k
        pending &= ~hit
        if not pending.any():
            break

    ok = not pending.any()
    failures = tuple(
        (int(u), int(v)) for u, v in g_edges[pending][:10]
    )
    return VerificationReport(
        ok=ok,
        t=t,
        n=n,
        edges_checked=m,
        max_observed_stretch=int(stretch.max()),
        failures=failures,
    )


# ---------------------------------------------------------------------------
# greedy baseline


def _hop_leq(adj: list[set[int]], u: int, v: int, t: int) -> bool:
    if t >= 1 and v in adj[u]:
        return True
    if t >= 2 and adj[u] & adj[v]:
        return True
    if t >= 3:
        for a in adj[u]:
            if adj[a] & adj[v]:
                return True
    if t <= 3:
        return False
    # generic truncated BFS for larger hop bounds
    frontier = {u}
    seen = {u}
    for _ in range(t):
        frontier = {w for x in frontier for w in adj[x] if w not in seen}
        if v in frontier:
            return True
        seen |= frontier
        if not frontier:
            return False
    return False


def greedy_spanner(graph: IntersectionGraph, t: int) -> Spanner:
    """Scan edges in sorted order, keeping those not yet covered in t hops.

    The classical baseline; grows roughly like n^(3/2) edges on dense
    unit-disk inputs for t = 2, which the geometric constructions beat.
    """
    adj: list[set[int]] = [set() for _ in range(graph.n)]
    kept: list[tuple[int, int]] = []
    for u, v in graph.edges:
        if not _hop_leq(adj, u, v, t):
            adj[u].add(v)
            adj[v].add(u)
            kept.append((u, v))
    return make_spanner(graph.n, t, kept, ["greedy"] * len(kept))
