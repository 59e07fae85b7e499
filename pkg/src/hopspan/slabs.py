"""Hierarchical slab decomposition driven by intersection witnesses.

The tree recursively splits a horizontal slab at the (lower) median
y-coordinate of the witness points that lie strictly inside it.  A node
keeps the objects handed down from its parent, classified against the
slab boundaries:

* bottom: reaches the bottom line (bbox y_lo <= slab bottom),
* top:    reaches the top line,
* across: both, and such objects are not handed further down,
* inside: neither, strictly between the lines.

All classification uses the objects' y-extents, which is exact for the
closed convex objects this package deals in.  A node is a leaf when no
witness point is strictly inside its slab.

Witness points are supplied by callers, one per intersecting pair;
their y-coordinates are what the splits care about.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from .geometry import GeometryError


@dataclass(eq=False)
class SlabNode:
    y_lo: float
    y_hi: float
    depth: int
    members: tuple[int, ...]  # object ids handed to this node
    bottom: tuple[int, ...]
    top: tuple[int, ...]
    across: tuple[int, ...]
    inside: tuple[int, ...]
    split: float | None = None  # median witness y, None at leaves
    lower: "SlabNode | None" = None
    upper: "SlabNode | None" = None

    @property
    def is_leaf(self) -> bool:
        return self.split is None

    def __repr__(self) -> str:
        kind = "leaf" if self.is_leaf else f"split@{self.split:g}"
        return (
            f"SlabNode(depth={self.depth}, y=({self.y_lo:g}, {self.y_hi:g}), "
            f"|S|={len(self.members)}, {kind})"
        )


class SlabTree:
    def __init__(
        self,
        root: SlabNode,
        extents: Sequence[tuple[float, float]],
        witness_ys: Sequence[float],
    ):
        self.root = root
        self.extents = tuple(extents)
        self.witness_ys = tuple(witness_ys)

    def nodes(self) -> Iterator[SlabNode]:
        stack = [self.root]
        while stack:
            node = stack.pop()
            yield node
            if node.upper is not None:
                stack.append(node.upper)
            if node.lower is not None:
                stack.append(node.lower)

    def levels(self) -> list[list[SlabNode]]:
        out: list[list[SlabNode]] = []
        for node in self.nodes():
            while len(out) <= node.depth:
                out.append([])
            out[node.depth].append(node)
        return out

    @property
    def depth(self) -> int:
        return max(node.depth for node in self.nodes())


def _classify(
    member_ids: Sequence[int],
    extents: Sequence[tuple[float, float]],
    y_lo: float,
    y_hi: float,
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    bottom, top, across, inside = [], [], [], []
    for u in member_ids:
        lo, hi = extents[u]
        b = lo <= y_lo
        t = hi >= y_hi
        if b:
            bottom.append(u)
        if t:
            top.append(u)
        if b and t:
            across.append(u)
        if not b and not t:
            inside.append(u)
    return tuple(bottom), tuple(top), tuple(across), tuple(inside)


def build_slab_tree(
    extents: Sequence[tuple[float, float]],
    witness_ys: Sequence[float],
) -> SlabTree:
    """Build the decomposition for objects with the given y-extents.

    ``witness_ys`` carries one y-coordinate per intersecting object
    pair (a point of that pair's intersection).  The root slab pads the
    objects' overall extent by 1 so everything starts strictly inside.
    """
    for i, (lo, hi) in enumerate(extents):
        if lo > hi:
            raise GeometryError(f"object {i} has an empty y-extent")
    ys = np.sort(np.asarray(witness_ys, dtype=float))
    if len(extents):
        root_lo = min(lo for lo, _ in extents) - 1.0
        root_hi = max(hi for _, hi in extents) + 1.0
    else:
        root_lo, root_hi = -1.0, 1.0
    if len(ys) and (ys[0] <= root_lo or ys[-1] >= root_hi):
        raise GeometryError("witness point outside the padded object extent")

    def grow(
        y_lo: float, y_hi: float, member_ids: list[int], lo_i: int, hi_i: int,
        depth: int,
    ) -> SlabNode:
        # witnesses strictly inside this slab live at ys[lo_i:hi_i]
        bottom, top, across, inside = _classify(member_ids, extents, y_lo, y_hi)
        node = SlabNode(
            y_lo=y_lo,
            y_hi=y_hi,
            depth=depth,
            members=tuple(member_ids),
            bottom=bottom,
            top=top,
            across=across,
            inside=inside,
        )
        if lo_i >= hi_i:
            return node  # leaf
        mid = ys[lo_i + (hi_i - lo_i - 1) // 2]  # lower median
        node.split = float(mid)
        across_set = set(across)
        passed = [u for u in member_ids if u not in across_set]
        low_members = [
            u for u in passed if extents[u][1] > y_lo and extents[u][0] < mid
        ]
        high_members = [
            u for u in passed if extents[u][1] > mid and extents[u][0] < y_hi
        ]
        # witnesses equal to the median belong to neither child interior
        lo_split = int(np.searchsorted(ys[lo_i:hi_i], mid, side="left")) + lo_i
        hi_split = int(np.searchsorted(ys[lo_i:hi_i], mid, side="right")) + lo_i
        node.lower = grow(y_lo, float(mid), low_members, lo_i, lo_split, depth + 1)
        node.upper = grow(float(mid), y_hi, high_members, hi_split, hi_i, depth + 1)
        return node

    all_ids = list(range(len(extents)))
    root = grow(root_lo, root_hi, all_ids, 0, len(ys), 0)
    return SlabTree(root, extents, tuple(float(y) for y in ys))


def audit_slab_tree(tree: SlabTree) -> list[str]:
    """Recheck every structural invariant; returns violations (empty = good).

    Checks, per node: the four classes recomputed from extents, child
    slabs partitioning the parent at a strictly interior split, the
    hand-down rule (members minus across, restricted to objects meeting
    the child's open slab), and the leaf criterion.  Per level, each
    object may appear in at most one node as inside, at most one as
    bottom-only, at most one as top-only, and at most two as across.
    """
    bad: list[str] = []
    extents = tree.extents
    ys = np.asarray(tree.witness_ys)

    per_level: dict[int, dict[str, dict[int, int]]] = {}
    for node in tree.nodes():
        b, t, a, i = _classify(node.members, extents, node.y_lo, node.y_hi)
        if (b, t, a, i) != (node.bottom, node.top, node.across, node.inside):
            bad.append(f"{node}: stored classification differs from recomputed")
        interior = int(np.sum((ys > node.y_lo) & (ys < node.y_hi)))
        if node.is_leaf:
            if interior:
                bad.append(f"{node}: leaf with {interior} interior witnesses")
            if node.lower or node.upper:
                bad.append(f"{node}: leaf with children")
        else:
            if not interior:
                bad.append(f"{node}: split without interior witnesses")
            if not (node.y_lo < node.split < node.y_hi):
                bad.append(f"{node}: split outside the open slab")
            if node.lower is None or node.upper is None:
                bad.append(f"{node}: internal node missing a child")
                continue
            if (node.lower.y_lo, node.lower.y_hi) != (node.y_lo, node.split) or (
                node.upper.y_lo,
                node.upper.y_hi,
            ) != (node.split, node.y_hi):
                bad.append(f"{node}: children do not partition the slab")
            across_set = set(node.across)
            for child in (node.lower, node.upper):
                want = tuple(
                    u
                    for u in node.members
                    if u not in across_set
                    and extents[u][1] > child.y_lo
                    and extents[u][0] < child.y_hi
                )
                if want != child.members:
                    bad.append(f"{child}: hand-down rule violated")

        counts = per_level.setdefault(
            node.depth, {"inside": {}, "bottom": {}, "top": {}, "across": {}}
        )
        for u in node.inside:
            counts["inside"][u] = counts["inside"].get(u, 0) + 1
        for u in node.across:
            counts["across"][u] = counts["across"].get(u, 0) + 1
        a_set = set(node.across)
        for u in node.bottom:
            if u not in a_set:
                counts["bottom"][u] = counts["bottom"].get(u, 0) + 1
        for u in node.top:
            if u not in a_set:
                counts["top"][u] = counts["top"].get(u, 0) + 1

    caps = {"inside": 1, "bottom": 1, "top": 1, "across": 2}
    for depth, counts in per_level.items():
        for kind, cap in caps.items():
            for u, c in counts[kind].items():
                if c > cap:
                    bad.append(
                        f"level {depth}: object {u} appears {c} times as "
                        f"{kind} (cap {cap})"
                    )
    return bad
