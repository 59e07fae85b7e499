"""Planar geometric primitives shared by every spanner construction.

Conventions used throughout the package:

* all coordinates are 64-bit floats,
* set predicates use closed-set semantics (touching counts as
  intersecting),
* inputs are assumed to be in general position; predicates make no
  attempt to resolve exact ties beyond what floating point gives us.

Constructions downstream never rely on these predicates being exact at
distance ties: every spanner they emit is re-verified against the graph
induced by the same predicates, so graph and spanner cannot drift apart.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

EPS = 1e-9

Vec = tuple[float, float]


class GeometryError(ValueError):
    """Invalid geometric input (degenerate polygon, bad interval, ...)."""


class UnsupportedPredicate(GeometryError):
    """No intersection predicate is defined for this pair of object kinds."""


class GeneralPositionError(GeometryError):
    """Input violates a general-position assumption of a construction."""


# ---------------------------------------------------------------------------
# small vector helpers


def dist2(p: Vec, q: Vec) -> float:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def dist(p: Vec, q: Vec) -> float:
    return math.hypot(p[0] - q[0], p[1] - q[1])


def cross(a: Vec, b: Vec) -> float:
    return a[0] * b[1] - a[1] * b[0]


def orient(a: Vec, b: Vec, c: Vec) -> float:
    """Twice the signed area of triangle abc (positive if ccw)."""
    return (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])


# ---------------------------------------------------------------------------
# object kinds


@dataclass(frozen=True)
class Interval:
    """Closed interval [lo, hi] on the real line."""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (math.isfinite(self.lo) and math.isfinite(self.hi)):
            raise GeometryError(f"non-finite interval ({self.lo}, {self.hi})")
        if self.lo > self.hi:
            raise GeometryError(f"interval with lo > hi ({self.lo}, {self.hi})")

    @property
    def length(self) -> float:
        return self.hi - self.lo

    def overlaps(self, other: "Interval") -> bool:
        return other.lo <= self.hi and self.lo <= other.hi

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


@dataclass(frozen=True)
class UnitDisk:
    """Vertex of a unit-disk graph, stored by its center.

    Two vertices are adjacent iff their centers are within distance 1
    (equivalently: closed disks of diameter 1 around the centers meet).
    """

    x: float
    y: float

    @property
    def center(self) -> Vec:
        return (self.x, self.y)


@dataclass(frozen=True)
class AxisRect:
    """Closed axis-aligned rectangle [x_lo, x_hi] x [y_lo, y_hi]."""

    x_lo: float
    x_hi: float
    y_lo: float
    y_hi: float

    def __post_init__(self) -> None:
        if self.x_lo > self.x_hi or self.y_lo > self.y_hi:
            raise GeometryError(f"empty rectangle {self}")

    @property
    def width(self) -> float:
        return self.x_hi - self.x_lo

    @property
    def height(self) -> float:
        return self.y_hi - self.y_lo

    @property
    def center(self) -> Vec:
        return ((self.x_lo + self.x_hi) / 2.0, (self.y_lo + self.y_hi) / 2.0)

    @property
    def x_range(self) -> Interval:
        return Interval(self.x_lo, self.x_hi)

    @property
    def y_range(self) -> Interval:
        return Interval(self.y_lo, self.y_hi)

    def corners(self) -> tuple[Vec, Vec, Vec, Vec]:
        return (
            (self.x_lo, self.y_lo),
            (self.x_hi, self.y_lo),
            (self.x_hi, self.y_hi),
            (self.x_lo, self.y_hi),
        )

    def contains_point(self, p: Vec) -> bool:
        return self.x_lo <= p[0] <= self.x_hi and self.y_lo <= p[1] <= self.y_hi

    def intersects_rect(self, other: "AxisRect") -> bool:
        return (
            other.x_lo <= self.x_hi
            and self.x_lo <= other.x_hi
            and other.y_lo <= self.y_hi
            and self.y_lo <= other.y_hi
        )

    def to_polygon(self) -> "ConvexPolygon":
        if self.width <= 0 or self.height <= 0:
            raise GeometryError("degenerate rectangle has no polygon form")
        return ConvexPolygon(self.corners())


class ConvexPolygon:
    """Strictly convex polygon with counterclockwise vertices.

    Vertices are validated on construction: at least three, every turn a
    strict left turn (the sine of each turn angle must exceed 1e-9, so
    collinear or repeated vertices are rejected).  Regular k-gons up to a
    few hundred vertices pass comfortably.
    """

    __slots__ = ("vertices", "min_x", "max_x", "min_y", "max_y", "_np_cache")

    def __init__(self, vertices: Sequence[Vec]):
        verts = tuple((float(x), float(y)) for x, y in vertices)
        m = len(verts)
        if m < 3:
            raise GeometryError(f"polygon needs >= 3 vertices, got {m}")
        for i in range(m):
            a, b, c = verts[i], verts[(i + 1) % m], verts[(i + 2) % m]
            ex, ey = b[0] - a[0], b[1] - a[1]
            fx, fy = c[0] - b[0], c[1] - b[1]
            le = math.hypot(ex, ey)
            lf = math.hypot(fx, fy)
            if le == 0.0 or lf == 0.0:
                raise GeometryError("repeated polygon vertex")
            turn = (ex * fy - ey * fx) / (le * lf)
            if turn <= 1e-9:
                raise GeometryError(
                    f"polygon not strictly convex/ccw at vertex {(i + 1) % m}"
                )
        self.vertices = verts
        xs = [v[0] for v in verts]
        ys = [v[1] for v in verts]
        self.min_x = min(xs)
        self.max_x = max(xs)
        self.min_y = min(ys)
        self.max_y = max(ys)
        self._np_cache: np.ndarray | None = None

    def __repr__(self) -> str:
        return f"ConvexPolygon({len(self.vertices)} vertices)"

    def __len__(self) -> int:
        return len(self.vertices)

    def as_array(self) -> np.ndarray:
        if self._np_cache is None:
            self._np_cache = np.asarray(self.vertices, dtype=float)
        return self._np_cache

    @property
    def area(self) -> float:
        s = 0.0
        verts = self.vertices
        for i, v in enumerate(verts):
            w = verts[(i + 1) % len(verts)]
            s += v[0] * w[1] - w[0] * v[1]
        return s / 2.0

    @property
    def centroid(self) -> Vec:
        sx = sy = s = 0.0
        verts = self.vertices
        for i, v in enumerate(verts):
            w = verts[(i + 1) % len(verts)]
            c = v[0] * w[1] - w[0] * v[1]
            s += c
            sx += (v[0] + w[0]) * c
            sy += (v[1] + w[1]) * c
        return (sx / (3.0 * s), sy / (3.0 * s))

    @property
    def bbox(self) -> AxisRect:
        return AxisRect(self.min_x, self.max_x, self.min_y, self.max_y)

    def edges(self) -> Iterator[tuple[Vec, Vec]]:
        verts = self.vertices
        for i, v in enumerate(verts):
            yield v, verts[(i + 1) % len(verts)]

    def contains_point(self, p: Vec, tol: float = 0.0) -> bool:
        # closed test: on-boundary points count as inside
        for a, b in self.edges():
            if orient(a, b, p) < -tol:
                return False
        return True

    def translated(self, dx: float, dy: float) -> "ConvexPolygon":
        return ConvexPolygon([(x + dx, y + dy) for x, y in self.vertices])

    def scaled(self, s: float) -> "ConvexPolygon":
        """Uniform scaling about the origin; s must be positive."""
        if s <= 0:
            raise GeometryError("scale factor must be positive")
        return ConvexPolygon([(x * s, y * s) for x, y in self.vertices])

    def reflected(self) -> "ConvexPolygon":
        """Point reflection through the origin (orientation is preserved)."""
        return ConvexPolygon([(-x, -y) for x, y in self.vertices])

    def mirrored_y(self) -> "ConvexPolygon":
        """Mirror across the x-axis (vertex order reversed to stay ccw)."""
        return ConvexPolygon([(x, -y) for x, y in reversed(self.vertices)])

    def rotated(self, theta: float, about: Vec = (0.0, 0.0)) -> "ConvexPolygon":
        c, s = math.cos(theta), math.sin(theta)
        ax, ay = about
        return ConvexPolygon(
            [
                (ax + c * (x - ax) - s * (y - ay), ay + s * (x - ax) + c * (y - ay))
                for x, y in self.vertices
            ]
        )


@dataclass(frozen=True)
class Translate:
    """A translate body + offset of a shared convex body."""

    body: ConvexPolygon
    dx: float
    dy: float
    body_id: int = 0

    @property
    def offset(self) -> Vec:
        return (self.dx, self.dy)

    def realized(self) -> ConvexPolygon:
        return self.body.translated(self.dx, self.dy)


GeomObject = Interval | UnitDisk | AxisRect | ConvexPolygon | Translate


@dataclass(frozen=True)
class Fatness:
    """Smallest enclosing radius, largest inscribed radius, and their ratio."""

    rho_out: float
    rho_in: float

    def __post_init__(self) -> None:
        if not (self.rho_out > 0 and self.rho_in > 0):
            raise GeometryError("fatness radii must be positive")
        if self.rho_in > self.rho_out * (1 + 1e-9):
            raise GeometryError("inscribed radius exceeds enclosing radius")

    @property
    def alpha(self) -> float:
        return self.rho_out / self.rho_in


# ---------------------------------------------------------------------------
# intersection predicates


def _sat_separated(pa: Sequence[Vec], pb: Sequence[Vec]) -> bool:
    """True iff some edge normal of either polygon strictly separates them."""
    for poly, other in ((pa, pb), (pb, pa)):
        m = len(poly)
        for i in range(m):
            ax, ay = poly[i]
            bx, by = poly[(i + 1) % m]
            nx, ny = by - ay, ax - bx  # outward normal of a ccw edge
            lo = min(vx * nx + vy * ny for vx, vy in other)
            hi = max(vx * nx + vy * ny for vx, vy in poly)
            if lo > hi:
                return True
    return False


def polygons_overlap(pa: Sequence[Vec], pb: Sequence[Vec]) -> bool:
    """Closed intersection test for convex polygons given as ccw vertex lists."""
    return not _sat_separated(pa, pb)


def intersects(a: GeomObject, b: GeomObject) -> bool:
    """Closed intersection predicate for supported object pairs.

    Supported: interval/interval, disk/disk, rect/rect, polygon/polygon,
    translate/translate, and rect/polygon in either order.  Anything else
    raises UnsupportedPredicate.
    """
    if isinstance(a, Interval) and isinstance(b, Interval):
        return a.overlaps(b)
    if isinstance(a, UnitDisk) and isinstance(b, UnitDisk):
        return dist2(a.center, b.center) <= 1.0
    if isinstance(a, AxisRect) and isinstance(b, AxisRect):
        return a.intersects_rect(b)
    if isinstance(a, ConvexPolygon) and isinstance(b, ConvexPolygon):
        if (
            a.max_x < b.min_x
            or b.max_x < a.min_x
            or a.max_y < b.min_y
            or b.max_y < a.min_y
        ):
            return False
        return polygons_overlap(a.vertices, b.vertices)
    if isinstance(a, Translate) and isinstance(b, Translate):
        return intersects(a.realized(), b.realized())
    if isinstance(a, AxisRect) and isinstance(b, ConvexPolygon):
        return intersects(a.to_polygon(), b)
    if isinstance(a, ConvexPolygon) and isinstance(b, AxisRect):
        return intersects(a, b.to_polygon())
    raise UnsupportedPredicate(
        f"unsupported predicate for {type(a).__name__}/{type(b).__name__}"
    )


# ---------------------------------------------------------------------------
# enclosing and inscribed circles


def _circumcircle(a: Vec, b: Vec, c: Vec) -> tuple[Vec, float] | None:
    d = 2.0 * (a[0] * (b[1] - c[1]) + b[0] * (c[1] - a[1]) + c[0] * (a[1] - b[1]))
    if abs(d) < 1e-14 * (abs(a[0]) + abs(b[0]) + abs(c[0]) + 1.0):
        return None
    a2, b2, c2 = dist2(a, (0.0, 0.0)), dist2(b, (0.0, 0.0)), dist2(c, (0.0, 0.0))
    ux = (a2 * (b[1] - c[1]) + b2 * (c[1] - a[1]) + c2 * (a[1] - b[1])) / d
    uy = (a2 * (c[0] - b[0]) + b2 * (a[0] - c[0]) + c2 * (b[0] - a[0])) / d
    center = (ux, uy)
    return center, dist(center, a)


def _diameter_circle(a: Vec, b: Vec) -> tuple[Vec, float]:
    center = ((a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0)
    return center, dist(a, b) / 2.0


def _in_circle(circle: tuple[Vec, float], p: Vec) -> bool:
    center, r = circle
    return dist(center, p) <= r + 1e-9 * (1.0 + r)


def min_enclosing_circle(
    points: Sequence[Vec], seed: int = 20240001
) -> tuple[Vec, float]:
    """Smallest enclosing circle (Welzl, randomized incremental).

    The shuffle is seeded so results are reproducible; expected linear
    time in the number of points.
    """
    pts = [(float(x), float(y)) for x, y in points]
    if not pts:
        raise GeometryError("min_enclosing_circle of empty point set")
    random.Random(seed).shuffle(pts)
    circle = (pts[0], 0.0)
    for i, p in enumerate(pts[1:], start=1):
        if _in_circle(circle, p):
            continue
        circle = (p, 0.0)
        for j in range(i):
            q = pts[j]
            if _in_circle(circle, q):
                continue
            circle = _diameter_circle(p, q)
            for k in range(j):
                s = pts[k]
                if _in_circle(circle, s):
                    continue
                cc = _circumcircle(p, q, s)
                if cc is None:
                    # collinear support set: widest diameter circle wins
                    cc = max(
                        (_diameter_circle(p, q), _diameter_circle(p, s),
                         _diameter_circle(q, s)),
                        key=lambda c: c[1],
                    )
                circle = cc
    return circle


def max_inscribed_circle(poly: ConvexPolygon) -> tuple[Vec, float]:
    """Largest circle inside a convex polygon.

    Solved exactly by enumerating triples of edge constraints of the
    linear program max r s.t. n_i . x - r >= n_i . v_i: some optimal
    point is determined by three tight constraints (two parallel edges
    plus any third still appear among the triples), so the best feasible
    triple solution is optimal.
    """
    verts = poly.as_array()
    m = len(verts)
    edges = np.roll(verts, -1, axis=0) - verts
    lengths = np.hypot(edges[:, 0], edges[:, 1])
    normals = np.stack([-edges[:, 1], edges[:, 0]], axis=1) / lengths[:, None]
    offsets = np.einsum("ij,ij->i", normals, verts)

    combos = np.asarray(list(itertools.combinations(range(m), 3)))
    a = np.concatenate(
        [normals[combos], -np.ones((len(combos), 3, 1))], axis=2
    )  # rows: (n_x, n_y, -1)
    dets = np.linalg.det(a)
    ok = np.abs(dets) > 1e-12
    if not ok.any():
        raise GeometryError("degenerate polygon in max_inscribed_circle")
    sols = np.linalg.solve(a[ok], offsets[combos[ok]][..., None])[..., 0]
    centers, radii = sols[:, :2], sols[:, 2]
    feasible = (
        (normals @ centers.T - radii[None, :] >= offsets[:, None] - 1e-9).all(axis=0)
        & (radii > 0)
    )
    if not feasible.any():
        raise GeometryError("no inscribed circle found (degenerate polygon?)")
    best = int(np.argmax(np.where(feasible, radii, -np.inf)))
    return (float(centers[best, 0]), float(centers[best, 1])), float(radii[best])


def fatness(obj: ConvexPolygon | AxisRect) -> Fatness:
    """Fatness alpha = rho_out / rho_in of a convex polygon or rectangle.

    Invariant under rigid motions and uniform scaling.  Rectangles are
    handled in closed form; polygons via smallest enclosing circle of the
    vertices and the largest inscribed circle.
    """
    if isinstance(obj, AxisRect):
        if obj.width <= 0 or obj.height <= 0:
            raise GeometryError("fatness of a degenerate rectangle")
        rho_out = math.hypot(obj.width, obj.height) / 2.0
        rho_in = min(obj.width, obj.height) / 2.0
        return Fatness(rho_out, rho_in)
    if isinstance(obj, ConvexPolygon):
        _, rho_out = min_enclosing_circle(obj.vertices)
        _, rho_in = max_inscribed_circle(obj)
        return Fatness(rho_out, rho_in)
    raise UnsupportedPredicate(f"fatness undefined for {type(obj).__name__}")


# ---------------------------------------------------------------------------
# clipping


def clip_halfplane(
    verts: Sequence[Vec], nx: float, ny: float, c: float
) -> list[Vec]:
    """Sutherland-Hodgman step: keep the part of a convex chain with n.v <= c.

    Works on raw vertex lists and may return fewer than three vertices
    (a segment or point of touching contact, or nothing at all).
    """
    out: list[Vec] = []
    m = len(verts)
    for i in range(m):
        p = verts[i]
        q = verts[(i + 1) % m]
        dp = nx * p[0] + ny * p[1] - c
        dq = nx * q[0] + ny * q[1] - c
        if dp <= 0.0:
            out.append(p)
        if (dp < 0.0 < dq) or (dq < 0.0 < dp):
            t = dp / (dp - dq)
            out.append((p[0] + t * (q[0] - p[0]), p[1] + t * (q[1] - p[1])))
    return _dedup(out)


def _dedup(verts: list[Vec]) -> list[Vec]:
    if not verts:
        return verts
    scale = max(1.0, max(abs(x) + abs(y) for x, y in verts))
    tol = 1e-12 * scale
    out: list[Vec] = []
    for v in verts:
        if not out or abs(v[0] - out[-1][0]) > tol or abs(v[1] - out[-1][1]) > tol:
            out.append(v)
    while len(out) > 1 and abs(out[0][0] - out[-1][0]) <= tol and abs(
        out[0][1] - out[-1][1]
    ) <= tol:
        out.pop()
    return out


def _chain_area(verts: Sequence[Vec]) -> float:
    s = 0.0
    for i, v in enumerate(verts):
        w = verts[(i + 1) % len(verts)]
        s += v[0] * w[1] - w[0] * v[1]
    return s / 2.0


def _cleaned_polygon(verts: Sequence[Vec]) -> ConvexPolygon | None:
    """Raw clip output to ConvexPolygon; None when the area is negligible."""
    verts = _dedup(list(verts))
    if len(verts) < 3:
        return None
    scale = max(1.0, max(abs(x) + abs(y) for x, y in verts))
    if _chain_area(verts) < 1e-12 * scale * scale:
        return None
    # drop vertices whose turn is numerically flat
    changed = True
    while changed and len(verts) >= 3:
        changed = False
        for i in range(len(verts)):
            a = verts[i - 1]
            b = verts[i]
            c = verts[(i + 1) % len(verts)]
            le = dist(a, b)
            lf = dist(b, c)
            if le == 0 or lf == 0 or orient(a, b, c) / (le * lf) <= 1e-9:
                del verts[i]
                changed = True
                break
    if len(verts) < 3:
        return None
    return ConvexPolygon(verts)


def clip_to_slab(poly: ConvexPolygon, y_lo: float, y_hi: float) -> ConvexPolygon | None:
    """Intersection of a convex polygon with the slab y_lo <= y <= y_hi.

    Returns None when the intersection is empty or degenerate (touching
    along a line only).
    """
    if y_lo > y_hi:
        raise GeometryError("empty slab")
    verts = clip_halfplane(poly.vertices, 0.0, -1.0, -y_lo)  # y >= y_lo
    if len(verts) < 3:
        return None
    verts = clip_halfplane(verts, 0.0, 1.0, y_hi)  # y <= y_hi
    return _cleaned_polygon(verts)


def convex_clip(pa: Sequence[Vec], pb: Sequence[Vec]) -> list[Vec]:
    """Vertices of the intersection of two convex ccw polygons (raw list).

    The result may be empty or degenerate; callers that need a proper
    polygon should run it through clip cleanup themselves.
    """
    out = list(pa)
    m = len(pb)
    for i in range(m):
        if len(out) == 0:
            break
        ax, ay = pb[i]
        bx, by = pb[(i + 1) % m]
        # interior of a ccw polygon is left of each edge
        nx, ny = by - ay, ax - bx
        c = nx * ax + ny * ay
        out = clip_halfplane(out, nx, ny, c)
    return out


def convex_hull(points: Sequence[Vec]) -> list[Vec]:
    """Convex hull in ccw order (Andrew's monotone chain); collinear points dropped."""
    pts = sorted(set((float(x), float(y)) for x, y in points))
    if len(pts) <= 2:
        return pts
    lower: list[Vec] = []
    for p in pts:
        while len(lower) >= 2 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Vec] = []
    for p in reversed(pts):
        while len(upper) >= 2 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def line_cut(poly: ConvexPolygon, y: float) -> tuple[float, float] | None:
    """x-extent of the intersection of a convex polygon with the line y = const.

    Returns (x_lo, x_hi), possibly equal for a touching vertex, or None
    when the polygon misses the line.
    """
    if y < poly.min_y or y > poly.max_y:
        return None
    xs: list[float] = []
    for p, q in poly.edges():
        dp = p[1] - y
        dq = q[1] - y
        if dp == 0.0:
            xs.append(p[0])
        if (dp < 0.0 < dq) or (dq < 0.0 < dp):
            t = dp / (dp - dq)
            xs.append(p[0] + t * (q[0] - p[0]))
    if not xs:
        return None
    return min(xs), max(xs)


# ---------------------------------------------------------------------------
# Minkowski sums


def _bottom_start(verts: Sequence[Vec]) -> list[Vec]:
    i = min(range(len(verts)), key=lambda k: (verts[k][1], verts[k][0]))
    return list(verts[i:]) + list(verts[:i])


def minkowski_sum(pa: ConvexPolygon, pb: ConvexPolygon) -> ConvexPolygon:
    """Minkowski sum of two convex polygons by the rotating edge merge.

    Parallel edge pairs are merged, so the result of C + (-C) for a
    centrally symmetric C has exactly the vertex count of C.
    """
    a = _bottom_start(pa.vertices)
    b = _bottom_start(pb.vertices)
    ea = [(a[(i + 1) % len(a)][0] - a[i][0], a[(i + 1) % len(a)][1] - a[i][1])
          for i in range(len(a))]
    eb = [(b[(i + 1) % len(b)][0] - b[i][0], b[(i + 1) % len(b)][1] - b[i][1])
          for i in range(len(b))]
    cur = (a[0][0] + b[0][0], a[0][1] + b[0][1])
    out = [cur]
    i = j = 0
    while i < len(ea) or j < len(eb):
        if i >= len(ea):
            step = eb[j]
            j += 1
        elif j >= len(eb):
            step = ea[i]
            i += 1
        else:
            u, v = ea[i], eb[j]
            c = cross(u, v)
            if abs(c) <= 1e-12 * math.hypot(*u) * math.hypot(*v):
                if u[0] * v[0] + u[1] * v[1] < 0.0:
                    # two strictly convex chains never present antiparallel
                    # front edges during the merge
                    raise GeometryError("antiparallel edges in Minkowski merge")
                step = (u[0] + v[0], u[1] + v[1])
                i += 1
                j += 1
            elif c > 0:
                step = u
                i += 1
            else:
                step = v
                j += 1
        cur = (cur[0] + step[0], cur[1] + step[1])
        out.append(cur)
    poly = _cleaned_polygon(out[:-1])
    if poly is None:
        raise GeometryError("degenerate Minkowski sum")
    return poly


# ---------------------------------------------------------------------------
# distances


def _point_seg_dist(p: Vec, a: Vec, b: Vec) -> float:
    abx, aby = b[0] - a[0], b[1] - a[1]
    apx, apy = p[0] - a[0], p[1] - a[1]
    denom = abx * abx + aby * aby
    if denom == 0.0:
        return dist(p, a)
    t = max(0.0, min(1.0, (apx * abx + apy * aby) / denom))
    return dist(p, (a[0] + t * abx, a[1] + t * aby))


def _segments_cross(a: Vec, b: Vec, c: Vec, d: Vec) -> bool:
    d1 = orient(c, d, a)
    d2 = orient(c, d, b)
    d3 = orient(a, b, c)
    d4 = orient(a, b, d)
    if ((d1 > 0) != (d2 > 0)) and ((d3 > 0) != (d4 > 0)):
        return True
    return False


def seg_seg_dist(a: Vec, b: Vec, c: Vec, d: Vec) -> float:
    if _segments_cross(a, b, c, d):
        return 0.0
    return min(
        _point_seg_dist(a, c, d),
        _point_seg_dist(b, c, d),
        _point_seg_dist(c, a, b),
        _point_seg_dist(d, a, b),
    )


def poly_distance(pa: ConvexPolygon, pb: ConvexPolygon) -> float:
    """Euclidean distance between two convex polygons (0 when they meet)."""
    if intersects(pa, pb):
        return 0.0
    va, vb = pa.vertices, pb.vertices
    best = math.inf
    for i in range(len(va)):
        a1, a2 = va[i], va[(i + 1) % len(va)]
        for j in range(len(vb)):
            b1, b2 = vb[j], vb[(j + 1) % len(vb)]
            best = min(best, seg_seg_dist(a1, a2, b1, b2))
    return best


# ---------------------------------------------------------------------------
# rigid motions


@dataclass(frozen=True)
class RigidTransform:
    """Orientation-preserving rigid motion p -> R p + t."""

    m00: float
    m01: float
    m10: float
    m11: float
    tx: float
    ty: float

    def apply(self, p: Vec) -> Vec:
        return (
            self.m00 * p[0] + self.m01 * p[1] + self.tx,
            self.m10 * p[0] + self.m11 * p[1] + self.ty,
        )

    def apply_many(self, pts: np.ndarray) -> np.ndarray:
        pts = np.asarray(pts, dtype=float)
        rot = np.array([[self.m00, self.m01], [self.m10, self.m11]])
        return pts @ rot.T + np.array([self.tx, self.ty])

    def inverse(self) -> "RigidTransform":
        # rotation inverse is the transpose; t' = -R^T t
        return RigidTransform(
            self.m00,
            self.m10,
            self.m01,
            self.m11,
            -(self.m00 * self.tx + self.m10 * self.ty),
            -(self.m01 * self.tx + self.m11 * self.ty),
        )

    def rotate_only(self, p: Vec) -> Vec:
        return (self.m00 * p[0] + self.m01 * p[1], self.m10 * p[0] + self.m11 * p[1])


def separating_axis_transform(
    a_pts: Sequence[Vec],
    b_pts: Sequence[Vec],
    sigma: ConvexPolygon,
    tau: ConvexPolygon,
) -> RigidTransform:
    """Rigid motion mapping a line separating sigma from tau to the x-axis.

    a_pts must lie in sigma and b_pts in tau; after the transform every
    point of a_pts is strictly above the x-axis and every point of b_pts
    strictly below.  The axis is chosen among the edge normals of the two
    tiles (enough for convex tiles with disjoint interiors) maximizing
    the gap between the actual point projections, and the line is placed
    through the midpoint of that gap.

    Raises GeneralPositionError when no candidate axis separates the
    points strictly.
    """
    if not a_pts or not b_pts:
        raise GeometryError("separating_axis_transform needs nonempty point sets")

    candidates: list[Vec] = []
    for poly in (sigma, tau):
        for p, q in poly.edges():
            ex, ey = q[0] - p[0], q[1] - p[1]
            ln = math.hypot(ex, ey)
            candidates.append((-ey / ln, ex / ln))

    best_gap = -math.inf
    best_d: Vec | None = None
    best_c = 0.0
    for ux, uy in candidates:
        for dx, dy in ((ux, uy), (-ux, -uy)):
            sig_hi = max(v[0] * dx + v[1] * dy for v in sigma.vertices)
            tau_lo = min(v[0] * dx + v[1] * dy for v in tau.vertices)
            if sig_hi > tau_lo + EPS:
                continue  # tiles not separated along this direction
            a_hi = max(p[0] * dx + p[1] * dy for p in a_pts)
            b_lo = min(p[0] * dx + p[1] * dy for p in b_pts)
            gap = b_lo - a_hi
            if gap > best_gap:
                best_gap = gap
                best_d = (dx, dy)
                best_c = (a_hi + b_lo) / 2.0
    if best_d is None or best_gap <= EPS:
        raise GeneralPositionError(
            "no strict separating line for the given point sets"
        )
    dx, dy = best_d
    # x' = e.p with e = (-dy, dx); y' = c - d.p  (A ends up above the axis)
    return RigidTransform(-dy, dx, -dx, -dy, 0.0, best_c)
