"""Shared fixtures and independent oracles for the test suite."""

from fractions import Fraction as F

import pytest

from cutstrength import QuadBody, Type1Body, Type2Body, Type3Body, point
from cutstrength.geometry import clip_halfplane, polygon_area


@pytest.fixture
def t1_body():
    return Type1Body()


@pytest.fixture
def t2_body():
    return Type2Body(F(1, 2), F(3, 2))


@pytest.fixture
def quad_body():
    return QuadBody(F(2, 5), F(3, 2), F(3, 5), F(-3, 10))


@pytest.fixture
def t3_body():
    return Type3Body(F(3), F(3, 10), F(1, 10))


def clip_area(poly, normal, offset):
    """Exact area of a polygon (or a 'pair' of polygons) cut by a half-plane."""
    if isinstance(poly, tuple) and poly and poly[0] == "pair":
        return sum(clip_area(p, normal, offset) for p in poly[1:])
    if len(poly) < 3:
        return F(0)
    clipped = clip_halfplane(poly, normal, offset)
    return polygon_area(clipped) if len(clipped) >= 3 else F(0)


def indicator_area(poly, spec, z):
    """Exact area of {f in poly : strength formula <= z}.

    ``spec`` = (kind, normal, const) describes the per-region strength as a
    ratio of linear functions of f: kind 'low' means (n.f - const)/(n.f),
    kind 'high' means (const - n.f)/(1 - n.f); both denominators are positive
    on the region, so the sublevel set is a half-plane cut.
    """
    kind, normal, const = spec
    if kind == "low":
        return clip_area(poly, -normal, const / (z - 1))
    return clip_area(poly, normal, (z - const) / (z - 1))


def strength_specs(body):
    """Per-region (kind, normal, const) strength descriptions."""
    if isinstance(body, Type2Body):
        a1, a2 = body.a1, body.a2
        low = ("low", point(1, 0), -a1 / (a2 - 1))
        high = ("high", point(1, 0), (a2 - a1) / (a2 - 1))
        vert = ("high", point(0, 1), a2)
        inner = [vert, vert] if a2 <= 2 else [low, high]
        return inner + [vert, vert, low, high]
    if isinstance(body, QuadBody):
        return [
            ("low", point(0, 1), body.b2),
            ("high", point(0, 1), body.a2),
            ("low", point(1, 0), body.c1),
            ("high", point(1, 0), body.d1),
        ]
    if isinstance(body, Type3Body):
        return [
            ("low", point(0, 1), body.b2),
            ("high", point(0, 1), body.c2),
            ("low", point(1, 0), body.c1),
            ("high", point(1, 0), body.a1),
            ("low", point(1, 1), body.b1 + body.b2),
            ("high", point(1, 1), body.a1 + body.a2),
        ]
    raise ValueError(f"no strength spec for {body!r}")


def random_interior_point(body, rng, denominator=512):
    """Exact-rational point strictly inside the body."""
    poly = body.polygon()
    lo1 = min(v.x1 for v in poly)
    hi1 = max(v.x1 for v in poly)
    lo2 = min(v.x2 for v in poly)
    hi2 = max(v.x2 for v in poly)
    while True:
        x1 = lo1 + (hi1 - lo1) * F(rng.randint(1, denominator - 1), denominator)
        x2 = lo2 + (hi2 - lo2) * F(rng.randint(1, denominator - 1), denominator)
        f = point(x1, x2)
        if body.contains_interior(f):
            return f
