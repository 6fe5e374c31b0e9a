"""Exact-rational planar geometry of maximal lattice-free bodies.

Everything in this module runs on ``fractions.Fraction``; there is no
floating point anywhere.  Bodies are kept in canonical parameterizations:

* ``SplitBody``      -- the band ``offset <= normal . x <= offset + 1``
* ``Type1Body``      -- conv{(0,0), (2,0), (0,2)}
* ``Type2Body``      -- apex ``(a1, a2)`` with ``0 < a1 < 1 < a2``, base on the
  x1-axis through ``(0,0)`` and ``(1,0)``
* ``Type3Body``      -- vertices ``a, b, c`` with exactly the three lattice
  points ``(0,0), (1,0), (0,1)`` on the boundary
* ``QuadBody``       -- vertices ``a, b, c, d`` with one lattice point in the
  relative interior of each edge

Vertex order conventions (used by :func:`corner_rays`):
Type1 = ((0,0), (2,0), (0,2)); Type2 = (left base, right base, apex);
Type3 = (a, b, c); Quad = (a, b, c, d) with a top, b bottom, c left, d right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import ceil, floor, gcd
from typing import Iterable, Sequence, Union

Rat = Union[int, Fraction, str]


def _frac(value: Rat) -> Fraction:
    """Coerce ints / "p/q" strings to Fraction without touching floats."""
    if isinstance(value, float):
        raise TypeError("floating point input is not allowed in exact geometry")
    return Fraction(value)


@dataclass(frozen=True)
class Rational2:
    """Exact rational 2-vector; the coordinate type for all geometry."""

    x1: Fraction
    x2: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x1", _frac(self.x1))
        object.__setattr__(self, "x2", _frac(self.x2))

    def __add__(self, other: "Rational2") -> "Rational2":
        return Rational2(self.x1 + other.x1, self.x2 + other.x2)

    def __sub__(self, other: "Rational2") -> "Rational2":
        return Rational2(self.x1 - other.x1, self.x2 - other.x2)

    def __mul__(self, scalar: Rat) -> "Rational2":
        s = _frac(scalar)
        return Rational2(self.x1 * s, self.x2 * s)

    __rmul__ = __mul__

    def __neg__(self) -> "Rational2":
        return Rational2(-self.x1, -self.x2)

    def dot(self, other: "Rational2") -> Fraction:
        return self.x1 * other.x1 + self.x2 * other.x2

    def cross(self, other: "Rational2") -> Fraction:
        return self.x1 * other.x2 - self.x2 * other.x1

    def is_zero(self) -> bool:
        return self.x1 == 0 and self.x2 == 0

    def is_integral(self) -> bool:
        return self.x1.denominator == 1 and self.x2.denominator == 1

    def as_tuple(self) -> tuple[Fraction, Fraction]:
        return (self.x1, self.x2)

    def __repr__(self):
        return f"({self.x1}, {self.x2})"


def point(x1: Rat, x2: Rat) -> Rational2:
    return Rational2(_frac(x1), _frac(x2))


class BodyClass(Enum):
    SPLIT = "Split"
    TYPE1_TRIANGLE = "Type1Triangle"
    TYPE2_TRIANGLE = "Type2Triangle"
    TYPE3_TRIANGLE = "Type3Triangle"
    QUADRILATERAL = "Quadrilateral"
    NOT_MAXIMAL_LATTICE_FREE = "NotMaximalLatticeFree"


# ---------------------------------------------------------------------------
# polygon primitives


def shoelace_area(pts: Sequence[Rational2]) -> Fraction:
    """Signed area; positive iff the cycle runs counter-clockwise."""
    total = Fraction(0)
    n = len(pts)
    for i in range(n):
        total += pts[i].cross(pts[(i + 1) % n])
    return total / 2


def _ccw(pts: Sequence[Rational2]) -> list[Rational2]:
    pts = list(pts)
    if shoelace_area(pts) < 0:
        pts.reverse()
    return pts


def is_strictly_convex(pts: Sequence[Rational2]) -> bool:
    """True iff the cyclic vertex list bounds a non-degenerate convex polygon."""
    n = len(pts)
    if n < 3:
        return False
    sign = 0
    for i in range(n):
        a, b, c = pts[i], pts[(i + 1) % n], pts[(i + 2) % n]
        cr = (b - a).cross(c - b)
        if cr == 0:
            return False
        s = 1 if cr > 0 else -1
        if sign == 0:
            sign = s
        elif s != sign:
            return False
    return True


def contains(pts: Sequence[Rational2], p: Rational2, strict: bool = False) -> bool:
    """Exact point-in-convex-polygon test; ``pts`` must run counter-clockwise."""
    n = len(pts)
    for i in range(n):
        a, b = pts[i], pts[(i + 1) % n]
        cr = (b - a).cross(p - a)
        if cr < 0 or (strict and cr == 0):
            return False
    return True


def clip_halfplane(pts: Sequence[Rational2], normal: Rational2, offset: Fraction) -> list[Rational2]:
    """Clip a convex CCW polygon against ``{x : normal . x <= offset}``.

    Returns the clipped vertex cycle (possibly empty / degenerate).
    """
    out: list[Rational2] = []
    n = len(pts)
    for i in range(n):
        cur, nxt = pts[i], pts[(i + 1) % n]
        dc = offset - normal.dot(cur)
        dn = offset - normal.dot(nxt)
        if dc >= 0:
            out.append(cur)
        if (dc > 0 > dn) or (dc < 0 < dn):
            t = dc / (dc - dn)
            out.append(cur + t * (nxt - cur))
    # drop exact duplicates produced by vertices lying on the cut line
    dedup: list[Rational2] = []
    for p in out:
        if not dedup or p != dedup[-1]:
            dedup.append(p)
    if len(dedup) > 1 and dedup[0] == dedup[-1]:
        dedup.pop()
    return dedup


def polygon_area(pts: Sequence[Rational2]) -> Fraction:
    if len(pts) < 3:
        return Fraction(0)
    return abs(shoelace_area(pts))


def _bbox(pts: Sequence[Rational2]) -> tuple[int, int, int, int]:
    xs = [p.x1 for p in pts]
    ys = [p.x2 for p in pts]
    return (floor(min(xs)), ceil(max(xs)), floor(min(ys)), ceil(max(ys)))


def lattice_points_inside(pts: Sequence[Rational2]) -> list[Rational2]:
    """Integer points strictly interior to a convex CCW polygon (bbox scan)."""
    x0, x1, y0, y1 = _bbox(pts)
    found = []
    for ix in range(x0, x1 + 1):
        for iy in range(y0, y1 + 1):
            q = point(ix, iy)
            if contains(pts, q, strict=True):
                found.append(q)
    return found


def lattice_points_on_boundary(pts: Sequence[Rational2]) -> list[Rational2]:
    x0, x1, y0, y1 = _bbox(pts)
    found = []
    for ix in range(x0, x1 + 1):
        for iy in range(y0, y1 + 1):
            q = point(ix, iy)
            if contains(pts, q) and not contains(pts, q, strict=True):
                found.append(q)
    return found


def lattice_points_on_open_segment(a: Rational2, b: Rational2) -> list[Rational2]:
    """Integer points strictly between the endpoints of segment ab."""
    x0 = floor(min(a.x1, b.x1))
    x1 = ceil(max(a.x1, b.x1))
    y0 = floor(min(a.x2, b.x2))
    y1 = ceil(max(a.x2, b.x2))
    d = b - a
    found = []
    for ix in range(x0, x1 + 1):
        for iy in range(y0, y1 + 1):
            q = point(ix, iy)
            if d.cross(q - a) != 0:
                continue
            t = (q - a).dot(d) / d.dot(d)
            if 0 < t < 1:
                found.append(q)
    return found


# ---------------------------------------------------------------------------
# unimodular maps


@dataclass(frozen=True)
class UnimodularMap:
    """Affine lattice-preserving map ``x -> M x + t`` with ``|det M| = 1``."""

    m11: int
    m12: int
    m21: int
    m22: int
    t1: int = 0
    t2: int = 0

    def __post_init__(self):
        if abs(self.det) != 1:
            raise ValueError(f"matrix determinant must be +-1, got {self.det}")

    @property
    def det(self) -> int:
        return self.m11 * self.m22 - self.m12 * self.m21

    def apply(self, p: Rational2) -> Rational2:
        return Rational2(
            self.m11 * p.x1 + self.m12 * p.x2 + self.t1,
            self.m21 * p.x1 + self.m22 * p.x2 + self.t2,
        )

    def apply_linear(self, p: Rational2) -> Rational2:
        return Rational2(self.m11 * p.x1 + self.m12 * p.x2, self.m21 * p.x1 + self.m22 * p.x2)

    def inverse(self) -> "UnimodularMap":
        d = self.det
        i11, i12 = self.m22 * d, -self.m12 * d
        i21, i22 = -self.m21 * d, self.m11 * d
        return UnimodularMap(i11, i12, i21, i22, -(i11 * self.t1 + i12 * self.t2), -(i21 * self.t1 + i22 * self.t2))

    @staticmethod
    def identity() -> "UnimodularMap":
        return UnimodularMap(1, 0, 0, 1, 0, 0)


# ---------------------------------------------------------------------------
# bodies


class LatticeFreeBody:
    """Base for all canonical-form bodies."""

    tag: str

    def vertices(self) -> tuple[Rational2, ...]:
        """Vertices in the documented corner-ray order."""
        raise NotImplementedError

    def polygon(self) -> list[Rational2]:
        """Vertices as a counter-clockwise boundary cycle."""
        return _ccw(self.vertices())

    def facets(self) -> list[tuple[Rational2, Fraction]]:
        """Outward facet representation ``normal . x <= offset``."""
        pts = self.polygon()
        out = []
        n = len(pts)
        for i in range(n):
            a, b = pts[i], pts[(i + 1) % n]
            d = b - a
            normal = Rational2(d.x2, -d.x1)  # outward for a CCW cycle
            out.append((normal, normal.dot(a)))
        return out

    def contains_interior(self, f: Rational2) -> bool:
        return all(n.dot(f) < beta for n, beta in self.facets())


class SplitBody(LatticeFreeBody):
    """The band ``offset <= normal . x <= offset + 1`` with primitive normal."""

    tag = "split"

    def __init__(self, normal: tuple[int, int] = (0, 1), offset: int = 0):
        n1, n2 = int(normal[0]), int(normal[1])
        if (n1, n2) == (0, 0) or gcd(abs(n1), abs(n2)) != 1:
            raise ValueError(f"split normal must be a primitive integer pair, got {normal}")
        self.normal = (n1, n2)
        self.offset = int(offset)

    def vertices(self):
        raise ValueError("a split is unbounded and has no vertices")

    def polygon(self):
        raise ValueError("a split is unbounded and has no vertex cycle")

    def facets(self):
        n = point(self.normal[0], self.normal[1])
        return [(n, Fraction(self.offset + 1)), (-n, Fraction(-self.offset))]

    def contains_interior(self, f: Rational2) -> bool:
        v = f.x1 * self.normal[0] + f.x2 * self.normal[1]
        return self.offset < v < self.offset + 1

    def __repr__(self):
        return f"SplitBody(normal={self.normal}, offset={self.offset})"

    def __eq__(self, other):
        return isinstance(other, SplitBody) and (self.normal, self.offset) == (other.normal, other.offset)


class Type1Body(LatticeFreeBody):
    """conv{(0,0), (2,0), (0,2)}: integer vertices, one lattice point per edge."""

    tag = "type1"

    def vertices(self):
        return (point(0, 0), point(2, 0), point(0, 2))

    def __repr__(self):
        return "Type1Body()"

    def __eq__(self, other):
        return isinstance(other, Type1Body)


class Type2Body(LatticeFreeBody):
    """Apex ``(a1, a2)``, base on the x1-axis; ``0 < a1 < 1 < a2``."""

    tag = "type2"

    def __init__(self, a1: Rat, a2: Rat):
        a1, a2 = _frac(a1), _frac(a2)
        if not (0 < a1 < 1):
            raise ValueError(f"need 0 < a1 < 1, got a1={a1}")
        if not (a2 > 1):
            raise ValueError(f"need a2 > 1, got a2={a2}")
        self.a1, self.a2 = a1, a2
        self.left = Rational2(-a1 / (a2 - 1), Fraction(0))
        self.right = Rational2((a2 - a1) / (a2 - 1), Fraction(0))
        self.apex = Rational2(a1, a2)

    def vertices(self):
        return (self.left, self.right, self.apex)

    def __repr__(self):
        return f"Type2Body(a1={self.a1}, a2={self.a2})"

    def __eq__(self, other):
        return isinstance(other, Type2Body) and (self.a1, self.a2) == (other.a1, other.a2)


class Type3Body(LatticeFreeBody):
    """Triangle with boundary lattice points exactly {(0,0), (1,0), (0,1)}.

    Parameters (a1, a2, b1) fix vertex ``a = (a1, a2)`` and the first
    coordinate of ``b``; ``b2`` and ``c`` follow.  The minimum-width direction
    is required to be (0,1), i.e. ``c2 - b2`` attains the lattice width.  The
    secondary ordering ``a1 - c1 <= a1 + a2 - (b1 + b2)`` is recorded in
    ``secondary_order_ok`` but deliberately not enforced.
    """

    tag = "type3"

    def __init__(self, a1: Rat, a2: Rat, b1: Rat):
        a1, a2, b1 = _frac(a1), _frac(a2), _frac(b1)
        if not a1 > 1:
            raise ValueError(f"need a1 > 1, got a1={a1}")
        if not (0 < a2 < 1):
            raise ValueError(f"need 0 < a2 < 1, got a2={a2}")
        if not (0 < b1 < 1):
            raise ValueError(f"need 0 < b1 < 1, got b1={b1}")
        b2 = -a2 * (1 - b1) / (a1 - 1)
        if not b1 + b2 < 0:
            raise ValueError(f"need b1 + b2 < 0, got {b1 + b2}")
        den = (a1 - 1) * (1 - a2) * b1 - a1 * a2 * (1 - b1)
        c1 = a1 * (a1 - 1) * b1 / den
        c2 = -a1 * a2 * (1 - b1) / den
        if not (b2 < 0 and c1 < 0 and c2 > 1 and 0 < c1 + c2 < 1):
            raise ValueError("derived vertices violate the canonical sign/range checks")
        width_candidates = (c2 - b2, a1 - c1, a1 + a2 - (b1 + b2))
        if min(width_candidates) != c2 - b2:
            raise ValueError(
                "lattice width must be attained by the vertical direction "
                f"(candidates {width_candidates})"
            )
        self.a1, self.a2, self.b1 = a1, a2, b1
        self.b2, self.c1, self.c2 = b2, c1, c2
        self.secondary_order_ok = a1 - c1 <= a1 + a2 - (b1 + b2)

    def vertices(self):
        return (
            Rational2(self.a1, self.a2),
            Rational2(self.b1, self.b2),
            Rational2(self.c1, self.c2),
        )

    def __repr__(self):
        return f"Type3Body(a1={self.a1}, a2={self.a2}, b1={self.b1})"

    def __eq__(self, other):
        return isinstance(other, Type3Body) and (self.a1, self.a2, self.b1) == (other.a1, other.a2, other.b1)


class QuadBody(LatticeFreeBody):
    """Quadrilateral with one lattice point on each edge.

    ``(0,0)`` lies on edge bc, ``(1,0)`` on bd, ``(0,1)`` on ac, ``(1,1)`` on
    ad.  Parameters (a1, a2, b1, b2) fix vertices ``a`` (top) and ``b``
    (bottom); ``c`` (left) and ``d`` (right) follow.  The lattice width must
    be attained by the vertical direction: ``a2 - b2 <= d1 - c1``.
    """

    tag = "quad"

    def __init__(self, a1: Rat, a2: Rat, b1: Rat, b2: Rat):
        a1, a2, b1, b2 = _frac(a1), _frac(a2), _frac(b1), _frac(b2)
        if not (0 < a1 <= b1 < 1):
            raise ValueError(f"need 0 < a1 <= b1 < 1, got a1={a1}, b1={b1}")
        if not a2 > 1:
            raise ValueError(f"need a2 > 1, got a2={a2}")
        if not b2 < 0:
            raise ValueError(f"need b2 < 0, got b2={b2}")
        if not -b2 <= a2 - 1:
            raise ValueError(f"need -b2 <= a2 - 1, got b2={b2}, a2={a2}")
        c1 = -a1 * b1 / ((a2 - 1) * b1 - a1 * b2)
        c2 = c1 * b2 / b1
        d1 = ((a2 - a1) * (1 - b1) - (1 - a1) * b2) / ((a2 - 1) * (1 - b1) - (1 - a1) * b2)
        d2 = (d1 - 1) * b2 / (b1 - 1)
        if not (c1 < 0 and 0 < c2 < 1 and d1 > 1 and 0 < d2 < 1 and c2 <= d2):
            raise ValueError("derived vertices violate the canonical sign/range checks")
        if not a2 - b2 <= d1 - c1:
            raise ValueError(
                f"lattice width must be attained by the vertical direction "
                f"(a2-b2={a2 - b2} > d1-c1={d1 - c1})"
            )
        self.a1, self.a2, self.b1, self.b2 = a1, a2, b1, b2
        self.c1, self.c2, self.d1, self.d2 = c1, c2, d1, d2
        self.theta = (a1 * b1 * (a2 - 1) * (1 - b1) - b1 * a1 * (1 - a1) * b2) / (
            b1 * (a2 - 1) * (1 - b1) - a1 * (1 - a1) * b2
        )

    def vertices(self):
        return (
            Rational2(self.a1, self.a2),
            Rational2(self.b1, self.b2),
            Rational2(self.c1, self.c2),
            Rational2(self.d1, self.d2),
        )

    def polygon(self):
        a, b, c, d = self.vertices()
        return [c, b, d, a]

    def __repr__(self):
        return f"QuadBody(a1={self.a1}, a2={self.a2}, b1={self.b1}, b2={self.b2})"

    def __eq__(self, other):
        return isinstance(other, QuadBody) and (self.a1, self.a2, self.b1, self.b2) == (
            other.a1,
            other.a2,
            other.b1,
            other.b2,
        )


Body = Union[SplitBody, Type1Body, Type2Body, Type3Body, QuadBody]


# ---------------------------------------------------------------------------
# operations


def area(body: LatticeFreeBody) -> Fraction:
    """Shoelace area of a bounded body; errors on splits."""
    if isinstance(body, SplitBody):
        raise ValueError("a split is unbounded; its area is not defined")
    return polygon_area(body.polygon())


def lattice_width(body: LatticeFreeBody) -> Fraction:
    """Closed-form lattice width of a canonical body."""
    if isinstance(body, SplitBody):
        return Fraction(1)
    if isinstance(body, Type1Body):
        return Fraction(2)
    if isinstance(body, Type2Body):
        return min(body.a2, body.a2 / (body.a2 - 1))
    if isinstance(body, Type3Body):
        return body.c2 - body.b2
    if isinstance(body, QuadBody):
        return min(body.a2 - body.b2, body.d1 - body.c1)
    raise TypeError(f"unsupported body {body!r}")


def directional_width(pts: Sequence[Rational2], u: Rational2) -> Fraction:
    vals = [u.dot(p) for p in pts]
    return max(vals) - min(vals)


def lattice_width_enumerated(body: LatticeFreeBody, radius: int = 10) -> Fraction:
    """Brute-force width: minimum over primitive directions with max-norm <= radius."""
    if isinstance(body, SplitBody):
        # the only directions of finite width are multiples of the normal
        return Fraction(1)
    pts = body.polygon()
    best = None
    for u1 in range(0, radius + 1):
        for u2 in range(-radius, radius + 1):
            if u1 == 0 and u2 <= 0:
                continue  # dedupe +-u and skip zero
            if gcd(u1, abs(u2)) != 1:
                continue
            wd = directional_width(pts, point(u1, u2))
            if best is None or wd < best:
                best = wd
    return best


def gauge(body: LatticeFreeBody, f: Rational2, r: Rational2) -> Fraction:
    """Minkowski functional of ``body - f`` at ``r``.

    Returns the smallest positive scale at which ``r`` fits in the scaled
    body, or 0 when ``r`` is a recession direction (split bands only).
    """
    if r.is_zero():
        raise ValueError("the gauge is undefined for the zero ray")
    if not body.contains_interior(f):
        raise ValueError(f"root vertex {f} is not strictly interior to {body!r}")
    best = Fraction(0)
    for normal, beta in body.facets():
        slack = beta - normal.dot(f)  # > 0 since f is interior
        val = normal.dot(r) / slack
        if val > best:
            best = val
    return best


def corner_rays(body: LatticeFreeBody, f: Rational2) -> tuple[Rational2, ...]:
    """Rays from ``f`` to each vertex, in the documented vertex order."""
    if isinstance(body, SplitBody):
        raise ValueError("a split has no vertices, hence no corner rays")
    if not body.contains_interior(f):
        raise ValueError(f"root vertex {f} is not strictly interior to {body!r}")
    return tuple(v - f for v in body.vertices())


# ---------------------------------------------------------------------------
# classification


def _classify_triangle(pts: list[Rational2]) -> BodyClass:
    edge_counts = []
    for i in range(3):
        edge_counts.append(len(lattice_points_on_open_segment(pts[i], pts[(i + 1) % 3])))
    if any(c == 0 for c in edge_counts):
        return BodyClass.NOT_MAXIMAL_LATTICE_FREE
    integral = [p.is_integral() for p in pts]
    if all(integral):
        if all(c == 1 for c in edge_counts):
            return BodyClass.TYPE1_TRIANGLE
        return BodyClass.NOT_MAXIMAL_LATTICE_FREE
    if not any(integral) and all(c == 1 for c in edge_counts):
        return BodyClass.TYPE3_TRIANGLE
    # type 2: some fractional vertex whose two incident edges carry exactly one
    # lattice point each while the opposite edge carries at least two
    for i in range(3):
        if integral[i]:
            continue
        incident = (edge_counts[i], edge_counts[(i + 2) % 3])  # edges i->i+1 and i-1->i
        opposite = edge_counts[(i + 1) % 3]
        if incident == (1, 1) and opposite >= 2:
            return BodyClass.TYPE2_TRIANGLE
    return BodyClass.NOT_MAXIMAL_LATTICE_FREE


def classify(obj: Union[SplitBody, Sequence[Rational2]]) -> BodyClass:
    """Classify a band or a convex polygon given by its vertex cycle."""
    if isinstance(obj, SplitBody):
        return BodyClass.SPLIT
    pts = list(obj)
    if len(pts) < 3 or shoelace_area(pts) == 0:
        raise ValueError("degenerate input: need a polygon with positive area")
    if not is_strictly_convex(pts):
        raise ValueError("input vertex cycle is not strictly convex")
    pts = _ccw(pts)
    if lattice_points_inside(pts):
        return BodyClass.NOT_MAXIMAL_LATTICE_FREE
    if len(pts) == 3:
        return _classify_triangle(pts)
    if len(pts) == 4:
        for i in range(4):
            if len(lattice_points_on_open_segment(pts[i], pts[(i + 1) % 4])) != 1:
                return BodyClass.NOT_MAXIMAL_LATTICE_FREE
        return BodyClass.QUADRILATERAL
    return BodyClass.NOT_MAXIMAL_LATTICE_FREE


# ---------------------------------------------------------------------------
# canonicalization


@lru_cache(maxsize=None)
def _unimodular_matrices(radius: int) -> tuple[tuple[int, int, int, int], ...]:
    """All integer 2x2 matrices with |det| = 1 and entries in [-radius, radius],
    sorted so that small-entry matrices (identity first) come first."""
    found = []
    rng = range(-radius, radius + 1)
    for m11, m12, m21, m22 in itertools.product(rng, repeat=4):
        if abs(m11 * m22 - m12 * m21) == 1:
            found.append((m11, m12, m21, m22))
    found.sort(key=lambda m: (max(abs(e) for e in m), sum(abs(e) for e in m), m != (1, 0, 0, 1)))
    found.remove((1, 0, 0, 1))
    return ((1, 0, 0, 1),) + tuple(found)


def _match_canonical(vertex_set: frozenset[Rational2]):
    """Return the canonical body with exactly this vertex set, if any."""
    pts = list(vertex_set)
    if len(pts) == 3:
        if vertex_set == frozenset({point(0, 0), point(2, 0), point(0, 2)}):
            return Type1Body()
        # type 2: apex strictly inside the unit x-range, base on the x1-axis
        for apex in pts:
            if 0 < apex.x1 < 1 and apex.x2 > 1:
                rest = [p for p in pts if p is not apex]
                if all(p.x2 == 0 for p in rest):
                    try:
                        body = Type2Body(apex.x1, apex.x2)
                    except ValueError:
                        return None
                    if frozenset(body.vertices()) == vertex_set:
                        return body
        # type 3: a right of x1=1, b below the x1-axis, c left of x2-axis
        a = next((p for p in pts if p.x1 > 1 and 0 < p.x2 < 1), None)
        b = next((p for p in pts if 0 < p.x1 < 1 and p.x2 < 0), None)
        c = next((p for p in pts if p.x1 < 0 and p.x2 > 1), None)
        if a and b and c:
            try:
                body = Type3Body(a.x1, a.x2, b.x1)
            except ValueError:
                return None
            if frozenset(body.vertices()) == vertex_set:
                return body
        return None
    if len(pts) == 4:
        a = next((p for p in pts if p.x2 > 1), None)
        b = next((p for p in pts if p.x2 < 0), None)
        c = next((p for p in pts if p.x1 < 0), None)
        d = next((p for p in pts if p.x1 > 1), None)
        if a and b and c and d and len({id(a), id(b), id(c), id(d)}) == 4:
            try:
                body = QuadBody(a.x1, a.x2, b.x1, b.x2)
            except ValueError:
                return None
            if frozenset(body.vertices()) == vertex_set:
                return body
    return None


def canonicalize(
    obj: Union[SplitBody, Sequence[Rational2]], radius: int = 10
) -> tuple[LatticeFreeBody, UnimodularMap]:
    """Find a lattice-preserving map carrying the input onto a canonical body.

    The search runs over integer matrices with entries in [-radius, radius]
    and translations that send some boundary lattice point to a small target.
    Applying the returned map to the input reproduces the canonical body's
    vertices exactly.
    """
    if isinstance(obj, SplitBody):
        n1, n2 = obj.normal
        # second row = normal, so the band maps onto {offset <= x2' <= offset+1};
        # extended euclid supplies a first row completing a unimodular matrix
        if n2 == 0:
            row1 = (0, 1)
        else:
            g, u, v = _ext_gcd(n2, -n1)
            row1 = (u, v)
        m = UnimodularMap(row1[0], row1[1], n1, n2, 0, -obj.offset)
        return SplitBody((0, 1), 0), m

    cls = classify(obj)
    if cls is BodyClass.NOT_MAXIMAL_LATTICE_FREE:
        raise ValueError("input polygon is not maximal lattice-free")
    pts = _ccw(list(obj))
    boundary = lattice_points_on_boundary(pts)
    targets = [point(0, 0), point(1, 0), point(0, 1), point(1, 1)]
    for entries in _unimodular_matrices(radius):
        lin = UnimodularMap(*entries)
        moved = [lin.apply_linear(p) for p in pts]
        moved_boundary = [lin.apply_linear(q) for q in boundary]
        seen = set()
        for q in moved_boundary:
            for target in targets:
                t = (int(target.x1 - q.x1), int(target.x2 - q.x2))
                if t in seen:
                    continue
                seen.add(t)
                shifted = frozenset(p + point(*t) for p in moved)
                body = _match_canonical(shifted)
                if body is not None:
                    return body, UnimodularMap(*entries, t[0], t[1])
    raise ValueError(f"canonicalization search exhausted at matrix radius {radius}")


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    if b == 0:
        s = 1 if a >= 0 else -1
        return abs(a), s, 0
    g, x, y = _ext_gcd(b, a % b)
    return g, y, x - (a // b) * y
