import random
from fractions import Fraction as F

import pytest

from cutstrength import (
    BodyClass,
    QuadBody,
    Rational2,
    SplitBody,
    Type1Body,
    Type2Body,
    Type3Body,
    UnimodularMap,
    area,
    canonicalize,
    classify,
    corner_rays,
    gauge,
    lattice_width,
    lattice_width_enumerated,
    point,
)
from cutstrength.geometry import polygon_area, shoelace_area

from conftest import random_interior_point


def grid_bodies():
    bodies = [Type1Body()]
    for a1, a2 in [(F(1, 2), F(3, 2)), (F(1, 3), F(5, 3)), (F(2, 5), F(5, 2)), (F(1, 5), F(2))]:
        bodies.append(Type2Body(a1, a2))
    for params in [(F(2, 5), F(3, 2), F(3, 5), F(-3, 10)), (F(1, 4), F(3, 2), F(1, 2), F(-1, 4)),
                   (F(1, 3), F(6, 5), F(2, 3), F(-1, 10)), (F(1, 2), F(7, 4), F(1, 2), F(-1, 8))]:
        bodies.append(QuadBody(*params))
    for params in [(F(3), F(3, 10), F(1, 10)), (F(5, 2), F(1, 2), F(1, 5)),
                   (F(4), F(2, 3), F(1, 20)), (F(2), F(3, 4), F(1, 4))]:
        bodies.append(Type3Body(*params))
    return bodies


class TestRational2:
    def test_arithmetic(self):
        p = point(F(1, 2), F(3, 4))
        q = point(1, -2)
        assert p + q == point(F(3, 2), F(-5, 4))
        assert p - q == point(F(-1, 2), F(11, 4))
        assert p * 2 == point(1, F(3, 2))
        assert -q == point(-1, 2)
        assert p.dot(q) == F(1, 2) - F(3, 2)
        assert p.cross(q) == -1 - F(3, 4)

    def test_rejects_floats(self):
        with pytest.raises((TypeError, ValueError)):
            point(0.5, 1)

    def test_integrality(self):
        assert point(3, -2).is_integral()
        assert not point(F(1, 2), 0).is_integral()


class TestConstruction:
    def test_type2_parameter_range(self):
        with pytest.raises(ValueError):
            Type2Body(F(3, 2), F(3, 2))  # a1 must be below 1
        with pytest.raises(ValueError):
            Type2Body(F(1, 2), F(1, 2))  # a2 must exceed 1

    def test_type2_derived_base(self, t2_body):
        left, right, apex = t2_body.vertices()
        assert left == point(-1, 0)
        assert right == point(2, 0)
        assert apex == point(F(1, 2), F(3, 2))

    def test_type3_derived_vertices(self, t3_body):
        assert t3_body.b2 == F(-27, 200)
        assert t3_body.c1 == F(-60, 67)
        assert t3_body.c2 == F(81, 67)

    def test_type3_requires_negative_b_sum(self):
        with pytest.raises(ValueError):
            Type3Body(F(7, 2), F(1, 4), F(1, 8))

    def test_type3_requires_vertical_width_minimal(self):
        # a1 - c1 drops below c2 - b2 here
        with pytest.raises(ValueError):
            Type3Body(F(11, 10), F(3, 10), F(1, 2))

    def test_quad_derived_vertices(self, quad_body):
        assert quad_body.c1 == F(-4, 7)
        assert quad_body.d1 == F(31, 19)
        assert quad_body.c2 == F(2, 7)
        assert quad_body.d2 == F(9, 19)

    def test_quad_sign_invariants(self):
        for body in grid_bodies():
            if isinstance(body, QuadBody):
                assert body.c1 < 0
                assert 0 < body.c2 < 1
                assert body.d1 > 1
                assert 0 < body.d2 < 1
                assert body.c2 <= body.d2

    def test_quad_parameter_violations(self):
        with pytest.raises(ValueError):
            QuadBody(F(3, 5), F(3, 2), F(2, 5), F(-3, 10))  # needs a1 <= b1
        with pytest.raises(ValueError):
            QuadBody(F(3, 10), F(13, 10), F(7, 10), F(-3, 5))  # -b2 > a2 - 1
        with pytest.raises(ValueError):
            QuadBody(F(1, 4), F(7, 4), F(1, 2), F(-1, 2))  # width not vertical

    def test_split_normal_must_be_primitive(self):
        with pytest.raises(ValueError):
            SplitBody((2, 4), 0)


class TestClassify:
    def test_split_band(self):
        assert classify(SplitBody((0, 1), 0)) is BodyClass.SPLIT

    def test_type1(self):
        verts = [point(0, 0), point(2, 0), point(0, 2)]
        assert classify(verts) is BodyClass.TYPE1_TRIANGLE

    def test_quadrilateral_diamond(self):
        verts = [point(F(-1, 2), F(1, 2)), point(F(1, 2), F(-1, 2)),
                 point(F(3, 2), F(1, 2)), point(F(1, 2), F(3, 2))]
        assert classify(verts) is BodyClass.QUADRILATERAL

    def test_canonical_families(self, t2_body, quad_body, t3_body):
        assert classify(t2_body.polygon()) is BodyClass.TYPE2_TRIANGLE
        assert classify(quad_body.polygon()) is BodyClass.QUADRILATERAL
        assert classify(t3_body.polygon()) is BodyClass.TYPE3_TRIANGLE

    def test_not_maximal_small_triangle(self):
        verts = [point(0, 0), point(1, 0), point(0, 1)]
        assert classify(verts) is BodyClass.NOT_MAXIMAL_LATTICE_FREE

    def test_not_maximal_interior_point(self):
        verts = [point(-1, -1), point(3, -1), point(-1, 3)]
        assert classify(verts) is BodyClass.NOT_MAXIMAL_LATTICE_FREE

    def test_degenerate_rejected(self):
        with pytest.raises(ValueError):
            classify([point(0, 0), point(1, 1), point(2, 2)])

    def test_nonconvex_rejected(self):
        verts = [point(0, 0), point(2, 0), point(1, F(1, 4)), point(0, 2)]
        with pytest.raises(ValueError):
            classify(verts)


class TestLatticeWidth:
    def test_split_width(self):
        assert lattice_width(SplitBody((3, 5), 7)) == 1

    def test_type1_width(self, t1_body):
        assert lattice_width(t1_body) == 2

    def test_type2_example(self, t2_body):
        assert lattice_width(t2_body) == F(3, 2)

    def test_closed_form_equals_enumeration(self):
        for body in grid_bodies():
            assert lattice_width(body) == lattice_width_enumerated(body)

    def test_type2_width_range(self):
        for a2_num in range(101, 300, 13):
            body = Type2Body(F(1, 2), F(a2_num, 100))
            assert 1 < lattice_width(body) <= 2


class TestArea:
    def test_examples(self, t1_body, t2_body, quad_body):
        assert area(t1_body) == 2
        assert area(t2_body) == F(9, 4)
        w = quad_body.a2 - quad_body.b2
        assert area(quad_body) == (w + quad_body.d1 - quad_body.c1) / 2

    def test_closed_forms_equal_shoelace(self):
        for body in grid_bodies():
            assert area(body) == polygon_area(body.polygon())
            if isinstance(body, Type2Body):
                w = lattice_width(body)
                if body.a2 <= 2:
                    assert area(body) == w**2 / (2 * (w - 1))
            if isinstance(body, Type3Body):
                assert area(body) == (body.a1 + body.a2 - body.b2 - body.c1) / 2

    def test_split_has_no_area(self):
        with pytest.raises(ValueError):
            area(SplitBody((0, 1), 0))


class TestGauge:
    def test_boundary_ray_is_one(self, t2_body):
        f = point(F(1, 4), F(1, 2))
        for v in t2_body.vertices():
            assert gauge(t2_body, f, v - f) == 1

    def test_homogeneity(self, quad_body):
        rng = random.Random(11)
        f = point(F(1, 2), F(1, 4))
        for _ in range(20):
            r = point(F(rng.randint(-8, 8), 3), F(rng.randint(-8, 8), 5))
            if r.is_zero():
                continue
            g = gauge(quad_body, f, r)
            for lam in (F(1, 2), F(2), F(7, 3)):
                assert gauge(quad_body, f, r * lam) == lam * g

    def test_gauge_one_iff_boundary(self, t3_body):
        rng = random.Random(12)
        f = point(F(1, 2), F(1, 2))
        for _ in range(20):
            r = point(F(rng.randint(-8, 8), 7), F(rng.randint(-8, 8), 7))
            if r.is_zero():
                continue
            g = gauge(t3_body, f, r)
            boundary = f + r * (1 / g)
            assert gauge(t3_body, f, boundary - f) == 1

    def test_split_recession_direction(self):
        band = SplitBody((0, 1), 0)
        assert gauge(band, point(F(1, 2), F(1, 2)), point(5, 0)) == 0
        assert gauge(band, point(F(1, 2), F(1, 2)), point(0, 1)) == 2

    def test_errors(self, t2_body):
        with pytest.raises(ValueError):
            gauge(t2_body, point(10, 10), point(1, 0))
        with pytest.raises(ValueError):
            gauge(t2_body, point(F(1, 4), F(1, 2)), point(0, 0))


class TestCornerRays:
    def test_type1_example(self, t1_body):
        f = point(F(1, 2), F(1, 2))
        rays = corner_rays(t1_body, f)
        assert rays == (point(F(-1, 2), F(-1, 2)), point(F(3, 2), F(-1, 2)), point(F(-1, 2), F(3, 2)))

    def test_type2_example(self, t2_body):
        f = point(F(1, 2), F(1, 2))
        rays = corner_rays(t2_body, f)
        assert rays == (point(F(-3, 2), F(-1, 2)), point(F(3, 2), F(-1, 2)), point(0, 1))

    def test_quad_four_unit_gauge_rays(self, quad_body):
        f = point(F(1, 2), F(1, 4))
        rays = corner_rays(quad_body, f)
        assert len(rays) == 4
        for r in rays:
            assert gauge(quad_body, f, r) == 1

    def test_split_has_no_corners(self):
        with pytest.raises(ValueError):
            corner_rays(SplitBody((0, 1), 0), point(F(1, 2), F(1, 2)))


class TestCanonicalize:
    def test_identity_on_canonical(self, t2_body):
        body, umap = canonicalize(t2_body.polygon())
        assert isinstance(body, Type2Body)
        assert (body.a1, body.a2) == (t2_body.a1, t2_body.a2)
        assert umap == UnimodularMap.identity()

    def test_translation_only(self, t2_body):
        moved = [v + point(3, -2) for v in t2_body.polygon()]
        body, umap = canonicalize(moved)
        assert (body.a1, body.a2) == (t2_body.a1, t2_body.a2)
        assert (umap.t1, umap.t2) == (-3, 2)

    def test_shear_round_trip(self, t1_body):
        shear = UnimodularMap(1, 1, 0, 1, 0, 0)
        moved = [shear.apply(v) for v in t1_body.polygon()]
        body, umap = canonicalize(moved)
        assert isinstance(body, Type1Body)
        assert {umap.apply(v).as_tuple() for v in moved} == {
            v.as_tuple() for v in body.polygon()
        }

    def test_split_normalized(self):
        body, umap = canonicalize(SplitBody((3, 5), 7))
        assert body == SplitBody((0, 1), 0)

    def test_class_invariance(self):
        rng = random.Random(21)
        for source in grid_bodies():
            m = rng.choice([UnimodularMap(1, 0, 0, 1, 1, -1), UnimodularMap(0, -1, 1, 0, 0, 2),
                            UnimodularMap(1, 2, 1, 3, -1, 0)])
            moved = [m.apply(v) for v in source.polygon()]
            body, umap = canonicalize(moved)
            assert classify(body.polygon()) is classify(source.polygon())
            assert {umap.apply(v).as_tuple() for v in moved} == {
                v.as_tuple() for v in body.polygon()
            }

    def test_map_invariants(self):
        with pytest.raises(ValueError):
            UnimodularMap(2, 0, 0, 2, 0, 0)
        m = UnimodularMap(1, 2, 1, 3, -1, 4)
        inv = m.inverse()
        p = point(F(3, 7), F(-2, 5))
        assert inv.apply(m.apply(p)) == p


class TestRandomInteriorSampling:
    def test_sampled_points_are_interior(self):
        rng = random.Random(5)
        for body in grid_bodies():
            for _ in range(5):
                f = random_interior_point(body, rng)
                assert body.contains_interior(f)
