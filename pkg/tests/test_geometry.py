"""Tests for the planar geometry kernel.

Where a second opinion is cheap, predicates are checked against shapely
(test-only dependency) or against brute force.
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from shapely.geometry import Polygon as ShapelyPolygon

from hopspan.geometry import (
    EPS,
    AxisRect,
    ConvexPolygon,
    GeneralPositionError,
    GeometryError,
    Interval,
    RigidTransform,
    Translate,
    UnitDisk,
    UnsupportedPredicate,
    clip_halfplane,
    clip_to_slab,
    convex_clip,
    convex_hull,
    dist,
    fatness,
    intersects,
    line_cut,
    max_inscribed_circle,
    min_enclosing_circle,
    minkowski_sum,
    poly_distance,
    seg_seg_dist,
    separating_axis_transform,
)


def regular_gon(k: int, r: float = 1.0, center=(0.0, 0.0), phase: float = 0.0):
    return ConvexPolygon(
        [
            (
                center[0] + r * math.cos(phase + 2 * math.pi * i / k),
                center[1] + r * math.sin(phase + 2 * math.pi * i / k),
            )
            for i in range(k)
        ]
    )


def random_convex(rng: np.random.Generator, k: int = 8, scale: float = 1.0):
    pts = rng.normal(size=(k + 5, 2)) * scale
    hull = convex_hull([tuple(p) for p in pts])
    if len(hull) < 3:
        return random_convex(rng, k, scale)
    return ConvexPolygon(hull)


# ---------------------------------------------------------------------------
# intervals


class TestInterval:
    def test_rejects_inverted(self):
        with pytest.raises(GeometryError):
            Interval(2.0, 1.0)

    def test_rejects_nan(self):
        with pytest.raises(GeometryError):
            Interval(0.0, float("nan"))

    def test_touching_counts_as_overlap(self):
        assert Interval(0.0, 1.0).overlaps(Interval(1.0, 2.0))
        assert not Interval(0.0, 1.0).overlaps(Interval(1.0 + 1e-15, 2.0))

    def test_point_interval(self):
        p = Interval(3.0, 3.0)
        assert p.overlaps(Interval(2.0, 3.0))
        assert p.contains(3.0)
        assert p.length == 0.0


# ---------------------------------------------------------------------------
# basic predicates


class TestIntersects:
    def test_disks_touching_at_distance_one(self):
        assert intersects(UnitDisk(0.0, 0.0), UnitDisk(1.0, 0.0))
        assert not intersects(UnitDisk(0.0, 0.0), UnitDisk(1.0 + 1e-9, 0.0))

    def test_rects_touching_edge(self):
        a = AxisRect(0, 1, 0, 1)
        b = AxisRect(1, 2, 0.5, 1.5)
        assert intersects(a, b)
        assert not intersects(a, AxisRect(1.1, 2, 0, 1))

    def test_rect_polygon_mixed(self):
        tri = ConvexPolygon([(0.5, 0.5), (3, 0.5), (0.5, 3)])
        assert intersects(AxisRect(0, 1, 0, 1), tri)
        assert intersects(tri, AxisRect(0, 1, 0, 1))
        assert not intersects(AxisRect(4, 5, 4, 5), tri)

    def test_translates(self):
        body = regular_gon(6)
        a = Translate(body, 0.0, 0.0)
        b = Translate(body, 3.0, 0.0)
        c = Translate(body, 1.5, 0.0)
        assert not intersects(a, b)
        assert intersects(a, c)

    def test_unsupported_pair(self):
        with pytest.raises(UnsupportedPredicate):
            intersects(Interval(0, 1), UnitDisk(0, 0))

    def test_polygon_overlap_matches_shapely(self):
        rng = np.random.default_rng(7)
        agree = 0
        for _ in range(200):
            pa = random_convex(rng, scale=1.0)
            pb = random_convex(rng, scale=1.0)
            shift = rng.uniform(-3, 3, size=2)
            pb = pb.translated(shift[0], shift[1])
            ours = intersects(pa, pb)
            theirs = ShapelyPolygon(pa.vertices).intersects(
                ShapelyPolygon(pb.vertices)
            )
            assert ours == theirs
            agree += 1
        assert agree == 200


# ---------------------------------------------------------------------------
# polygon construction


class TestConvexPolygon:
    def test_rejects_cw(self):
        with pytest.raises(GeometryError):
            ConvexPolygon([(0, 0), (0, 1), (1, 0)])

    def test_rejects_collinear(self):
        with pytest.raises(GeometryError):
            ConvexPolygon([(0, 0), (1, 0), (2, 0), (1, 1)])

    def test_rejects_repeated(self):
        with pytest.raises(GeometryError):
            ConvexPolygon([(0, 0), (1, 0), (1, 0), (0, 1)])

    def test_accepts_large_regular_gon(self):
        poly = regular_gon(256)
        assert len(poly) == 256

    def test_area_centroid_square(self):
        sq = AxisRect(0, 2, 0, 2).to_polygon()
        assert sq.area == pytest.approx(4.0)
        assert sq.centroid == pytest.approx((1.0, 1.0))

    def test_contains_point_closed(self):
        sq = AxisRect(0, 1, 0, 1).to_polygon()
        assert sq.contains_point((0.0, 0.5))  # boundary
        assert sq.contains_point((0.5, 0.5))
        assert not sq.contains_point((1.0 + 1e-9, 0.5))

    def test_reflected_preserves_orientation(self):
        tri = ConvexPolygon([(0, 0), (1, 0), (0, 1)])
        ref = tri.reflected()
        assert set(ref.vertices) == {(0, 0), (-1, 0), (0, -1)}
        assert ref.area == pytest.approx(tri.area)

    def test_mirrored_y(self):
        tri = ConvexPolygon([(0, 0), (1, 0), (0, 1)])
        mir = tri.mirrored_y()
        assert set(mir.vertices) == {(0, 0), (1, 0), (0, -1)}
        assert mir.area == pytest.approx(tri.area)

    def test_rotated_about_center(self):
        sq = AxisRect(-1, 1, -1, 1).to_polygon()
        rot = sq.rotated(math.pi / 4)
        assert rot.max_x == pytest.approx(math.sqrt(2))
        assert rot.area == pytest.approx(4.0)


# ---------------------------------------------------------------------------
# circles


class TestCircles:
    def brute_mec(self, pts):
        # smallest circle is determined by two or three points of the set
        import itertools as it

        best = None
        for a, b in it.combinations(pts, 2):
            c = ((a[0] + b[0]) / 2, (a[1] + b[1]) / 2)
            r = dist(a, b) / 2
            if all(dist(c, p) <= r + 1e-9 for p in pts):
                if best is None or r < best[1]:
                    best = (c, r)
        for a, b, c3 in it.combinations(pts, 3):
            d = 2 * (a[0] * (b[1] - c3[1]) + b[0] * (c3[1] - a[1]) + c3[0] * (a[1] - b[1]))
            if abs(d) < 1e-12:
                continue
            a2 = a[0] ** 2 + a[1] ** 2
            b2 = b[0] ** 2 + b[1] ** 2
            c2 = c3[0] ** 2 + c3[1] ** 2
            ux = (a2 * (b[1] - c3[1]) + b2 * (c3[1] - a[1]) + c2 * (a[1] - b[1])) / d
            uy = (a2 * (c3[0] - b[0]) + b2 * (a[0] - c3[0]) + c2 * (b[0] - a[0])) / d
            r = dist((ux, uy), a)
            if all(dist((ux, uy), p) <= r + 1e-9 for p in pts):
                if best is None or r < best[1]:
                    best = ((ux, uy), r)
        return best

    def test_mec_matches_bruteforce(self):
        rng = np.random.default_rng(11)
        for _ in range(40):
            pts = [tuple(p) for p in rng.uniform(-5, 5, size=(8, 2))]
            (_, r_ours) = min_enclosing_circle(pts)
            (_, r_brute) = self.brute_mec(pts)
            assert r_ours == pytest.approx(r_brute, abs=1e-7)

    def test_mec_single_and_pair(self):
        c, r = min_enclosing_circle([(2.0, 3.0)])
        assert c == (2.0, 3.0) and r == 0.0
        c, r = min_enclosing_circle([(0.0, 0.0), (2.0, 0.0)])
        assert c == pytest.approx((1.0, 0.0)) and r == pytest.approx(1.0)

    def test_mec_collinear(self):
        _, r = min_enclosing_circle([(0.0, 0.0), (1.0, 0.0), (4.0, 0.0)])
        assert r == pytest.approx(2.0)

    def test_mec_empty_raises(self):
        with pytest.raises(GeometryError):
            min_enclosing_circle([])

    def test_inscribed_unit_square(self):
        c, r = max_inscribed_circle(AxisRect(0, 1, 0, 1).to_polygon())
        assert r == pytest.approx(0.5)
        assert c == pytest.approx((0.5, 0.5))

    def test_inscribed_regular_gon_is_apothem(self):
        for k in (3, 5, 6, 12):
            _, r = max_inscribed_circle(regular_gon(k))
            assert r == pytest.approx(math.cos(math.pi / k), abs=1e-7)

    def test_inscribed_long_rect(self):
        c, r = max_inscribed_circle(AxisRect(0, 10, 0, 1).to_polygon())
        assert r == pytest.approx(0.5)
        assert c[1] == pytest.approx(0.5)


# ---------------------------------------------------------------------------
# fatness


class TestFatness:
    def test_unit_square(self):
        assert fatness(AxisRect(0, 1, 0, 1)).alpha == pytest.approx(math.sqrt(2))

    def test_two_by_one_rect(self):
        assert fatness(AxisRect(0, 2, 0, 1)).alpha == pytest.approx(math.sqrt(5))

    def test_square_polygon_matches_rect(self):
        rect = AxisRect(0, 1, 0, 1)
        a1 = fatness(rect).alpha
        a2 = fatness(rect.to_polygon()).alpha
        assert a1 == pytest.approx(a2, abs=1e-6)

    def test_regular_hexagon(self):
        assert fatness(regular_gon(6)).alpha == pytest.approx(2 / math.sqrt(3), abs=1e-7)

    def test_regular_gon_formula(self):
        # alpha of a regular k-gon is sec(pi/k)
        for k in (6, 12):
            assert fatness(regular_gon(k)).alpha == pytest.approx(
                1.0 / math.cos(math.pi / k), abs=1e-7
            )

    @settings(max_examples=40, deadline=None)
    @given(
        theta=st.floats(0, 2 * math.pi),
        scale=st.floats(0.1, 10.0),
        k=st.integers(3, 9),
        seed=st.integers(0, 10_000),
    )
    def test_invariant_under_rigid_motion_and_scaling(self, theta, scale, k, seed):
        rng = np.random.default_rng(seed)
        poly = random_convex(rng, k=k)
        moved = ConvexPolygon(
            [(x * scale, y * scale) for x, y in poly.rotated(theta).vertices]
        )
        assert fatness(moved).alpha == pytest.approx(fatness(poly).alpha, rel=1e-6)

    def test_degenerate_rect_raises(self):
        with pytest.raises(GeometryError):
            fatness(AxisRect(0, 0, 0, 1))


# ---------------------------------------------------------------------------
# clipping


class TestClipping:
    def test_triangle_to_slab_frozen(self):
        tri = ConvexPolygon([(0, 0), (2, 0), (1, 2)])
        clipped = clip_to_slab(tri, 0.0, 1.0)
        assert clipped is not None
        assert sorted(clipped.vertices) == pytest.approx(
            sorted([(0.0, 0.0), (2.0, 0.0), (1.5, 1.0), (0.5, 1.0)])
        )

    def test_slab_misses_polygon(self):
        tri = ConvexPolygon([(0, 0), (2, 0), (1, 2)])
        assert clip_to_slab(tri, 5.0, 6.0) is None

    def test_slab_touches_vertex_only(self):
        tri = ConvexPolygon([(0, 0), (2, 0), (1, 2)])
        assert clip_to_slab(tri, 2.0, 3.0) is None

    def test_clip_is_subset(self):
        rng = np.random.default_rng(3)
        for _ in range(50):
            poly = random_convex(rng, scale=2.0)
            lo, hi = sorted(rng.uniform(-2, 2, size=2))
            clipped = clip_to_slab(poly, lo, hi)
            if clipped is None:
                continue
            assert clipped.min_y >= lo - 1e-9
            assert clipped.max_y <= hi + 1e-9
            for v in clipped.vertices:
                assert poly.contains_point(v, tol=1e-9)
            assert clipped.area <= poly.area + 1e-9

    def test_convex_clip_matches_shapely(self):
        rng = np.random.default_rng(5)
        for _ in range(60):
            pa = random_convex(rng, scale=1.5)
            pb = random_convex(rng, scale=1.5).translated(*rng.uniform(-1, 1, size=2))
            raw = convex_clip(pa.vertices, pb.vertices)
            inter = ShapelyPolygon(pa.vertices).intersection(
                ShapelyPolygon(pb.vertices)
            )
            if len(raw) >= 3:
                area = ShapelyPolygon(raw).area
                assert area == pytest.approx(inter.area, abs=1e-9)
            else:
                assert inter.area == pytest.approx(0.0, abs=1e-9)

    def test_clip_halfplane_keeps_boundary(self):
        sq = AxisRect(0, 1, 0, 1).to_polygon()
        out = clip_halfplane(sq.vertices, 1.0, 0.0, 1.0)  # x <= 1 keeps all
        assert len(out) == 4


# ---------------------------------------------------------------------------
# hulls, cuts, Minkowski sums


class TestHullAndCuts:
    def test_hull_square_with_interior(self):
        pts = [(0, 0), (1, 0), (1, 1), (0, 1), (0.5, 0.5), (0.5, 0.0)]
        hull = convex_hull(pts)
        assert sorted(hull) == [(0, 0), (0, 1), (1, 0), (1, 1)]

    def test_hull_collinear(self):
        assert convex_hull([(0, 0), (1, 1), (2, 2)]) == [(0, 0), (2, 2)]

    def test_line_cut_triangle(self):
        tri = ConvexPolygon([(0, 0), (2, 0), (1, 2)])
        assert line_cut(tri, 1.0) == pytest.approx((0.5, 1.5))
        assert line_cut(tri, 0.0) == pytest.approx((0.0, 2.0))
        assert line_cut(tri, 2.0) == pytest.approx((1.0, 1.0))  # apex touch
        assert line_cut(tri, 2.5) is None

    def test_minkowski_two_squares(self):
        sq = AxisRect(0, 1, 0, 1).to_polygon()
        s2 = minkowski_sum(sq, sq)
        assert s2.area == pytest.approx(4.0)
        assert set(s2.vertices) == {(0, 0), (2, 0), (2, 2), (0, 2)}

    def test_minkowski_triangle_with_reflection_frozen(self):
        tri = ConvexPolygon([(0, 0), (1, 0), (0, 1)])
        hexa = minkowski_sum(tri, tri.reflected())
        want = {(1, -1), (1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1)}
        assert set((round(x, 9), round(y, 9)) for x, y in hexa.vertices) == want

    def test_minkowski_symmetric_body_keeps_vertex_count(self):
        # for centrally symmetric C, C + (-C) merges parallel edge pairs
        hexa = regular_gon(6)
        s = minkowski_sum(hexa, hexa.reflected())
        assert len(s) == 6

    def test_minkowski_area_superadditive(self):
        rng = np.random.default_rng(9)
        for _ in range(20):
            pa = random_convex(rng)
            pb = random_convex(rng)
            s = minkowski_sum(pa, pb)
            assert s.area >= pa.area + pb.area - 1e-9

    def test_poly_distance_matches_shapely(self):
        rng = np.random.default_rng(13)
        for _ in range(60):
            pa = random_convex(rng)
            pb = random_convex(rng).translated(*rng.uniform(-4, 4, size=2))
            ours = poly_distance(pa, pb)
            theirs = ShapelyPolygon(pa.vertices).distance(ShapelyPolygon(pb.vertices))
            assert ours == pytest.approx(theirs, abs=1e-9)

    def test_seg_seg_dist_cases(self):
        assert seg_seg_dist((0, 0), (1, 0), (0.5, -1), (0.5, 1)) == 0.0  # crossing
        assert seg_seg_dist((0, 0), (1, 0), (0, 1), (1, 1)) == pytest.approx(1.0)
        assert seg_seg_dist((0, 0), (1, 0), (2, 0), (3, 0)) == pytest.approx(1.0)
        assert seg_seg_dist((0, 0), (1, 0), (1, 0), (2, 5)) == 0.0  # touching


# ---------------------------------------------------------------------------
# separating-axis rigid motion


class TestSeparatingAxisTransform:
    def hexpair(self):
        # two unit hexagons sharing a vertical edge
        a = regular_gon(6, r=1.0, center=(0.0, 0.0), phase=math.pi / 6)
        width = math.sqrt(3)
        b = regular_gon(6, r=1.0, center=(width, 0.0), phase=math.pi / 6)
        return a, b

    def test_maps_sides_over_and_under_axis(self):
        sigma, tau = self.hexpair()
        rng = np.random.default_rng(17)
        a_pts = [
            (sigma.centroid[0] + dx, sigma.centroid[1] + dy)
            for dx, dy in rng.uniform(-0.3, 0.3, size=(10, 2))
        ]
        b_pts = [
            (tau.centroid[0] + dx, tau.centroid[1] + dy)
            for dx, dy in rng.uniform(-0.3, 0.3, size=(10, 2))
        ]
        tr = separating_axis_transform(a_pts, b_pts, sigma, tau)
        for p in a_pts:
            assert tr.apply(p)[1] > 0
        for p in b_pts:
            assert tr.apply(p)[1] < 0

    def test_transform_is_rigid(self):
        sigma, tau = self.hexpair()
        a_pts = [(-0.2, 0.1), (0.1, -0.4)]
        b_pts = [(math.sqrt(3) + 0.2, 0.3)]
        tr = separating_axis_transform(a_pts, b_pts, sigma, tau)
        pts = a_pts + b_pts
        for p in pts:
            for q in pts:
                assert dist(tr.apply(p), tr.apply(q)) == pytest.approx(dist(p, q))

    def test_inverse_roundtrip(self):
        sigma, tau = self.hexpair()
        tr = separating_axis_transform([(0.0, 0.0)], [(math.sqrt(3), 0.0)], sigma, tau)
        inv = tr.inverse()
        for p in [(0.3, -0.7), (2.0, 5.0), (-1.0, 0.0)]:
            assert inv.apply(tr.apply(p)) == pytest.approx(p, abs=1e-12)

    def test_apply_many_matches_apply(self):
        sigma, tau = self.hexpair()
        tr = separating_axis_transform([(0.0, 0.0)], [(math.sqrt(3), 0.0)], sigma, tau)
        pts = np.array([[0.1, 0.2], [-0.5, 0.4], [1.0, -1.0]])
        out = tr.apply_many(pts)
        for row, p in zip(out, pts):
            assert tuple(row) == pytest.approx(tr.apply(tuple(p)))

    def test_degenerate_points_raise(self):
        sigma, tau = self.hexpair()
        # same point on both sides cannot be separated strictly
        p = (math.sqrt(3) / 2, 0.0)
        with pytest.raises(GeneralPositionError):
            separating_axis_transform([p], [p], sigma, tau)

    def test_empty_side_raises(self):
        sigma, tau = self.hexpair()
        with pytest.raises(GeometryError):
            separating_axis_transform([], [(1.0, 0.0)], sigma, tau)


class TestRigidTransform:
    def test_identity(self):
        tr = RigidTransform(1, 0, 0, 1, 0, 0)
        assert tr.apply((3.0, 4.0)) == (3.0, 4.0)

    def test_rotation_inverse(self):
        c, s = math.cos(0.7), math.sin(0.7)
        tr = RigidTransform(c, -s, s, c, 2.0, -1.0)
        inv = tr.inverse()
        assert inv.apply(tr.apply((5.0, -3.0))) == pytest.approx((5.0, -3.0))
