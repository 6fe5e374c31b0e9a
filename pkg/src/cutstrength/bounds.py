"""Closed-form piecewise lower bounds on the probability that the strength of
a body's cut over a single split stays below a threshold ``z``.

All evaluators are exact: rational in, rational out.  Every family bound is
represented as a :class:`PiecewiseBound` (ordered breakpoints plus one
closed-form evaluator per interval, selected right-continuously), so that
breakpoint continuity can be tested piece against piece.

For the type 1 triangle the value is an exact probability, not merely a
bound; it has a genuine jump at ``z = 2`` because the strength equals 2 on a
region of positive area.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence, Union

from .geometry import QuadBody, Rational2, Type2Body, Type3Body, _frac, area

Rat = Union[int, str, Fraction]


@dataclass(frozen=True)
class Piece:
    label: str
    evaluate: Callable[[Fraction], Fraction]


@dataclass(frozen=True)
class PiecewiseBound:
    """Piecewise closed form in ``z`` on (1, oo).

    ``pieces[i]`` applies on ``[breakpoints[i-1], breakpoints[i])`` (first and
    last interval open-ended); selection is right-continuous, which is the
    natural convention for a distribution-style bound.
    """

    breakpoints: tuple[Fraction, ...]
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        assert len(self.pieces) == len(self.breakpoints) + 1
        assert all(b1 < b2 for b1, b2 in zip(self.breakpoints, self.breakpoints[1:]))

    def piece_index(self, z: Fraction) -> int:
        return bisect_right(list(self.breakpoints), z)

    def __call__(self, z: Rat) -> Fraction:
        z = _frac(z)
        if z <= 1:
            raise ValueError(f"threshold must satisfy z > 1, got {z}")
        return self.pieces[self.piece_index(z)].evaluate(z)


def _const(value: Rat) -> Callable[[Fraction], Fraction]:
    v = _frac(value)
    return lambda z: v


# ---------------------------------------------------------------------------
# type 1


def t1_bound() -> PiecewiseBound:
    """Exact probability that the type 1 strength is at most z."""

    def middle(z: Fraction) -> Fraction:
        return Fraction(3, 4) * ((2 * z - 3) / (z - 1)) ** 2

    return PiecewiseBound(
        breakpoints=(Fraction(3, 2), Fraction(2)),
        pieces=(Piece("zero", _const(0)), Piece("ramp", middle), Piece("one", _const(1))),
    )


def p_t1(z: Rat) -> Fraction:
    return t1_bound()(z)


# ---------------------------------------------------------------------------
# type 2


def _check_width(w: Fraction):
    if not 1 < w <= 2:
        raise ValueError(f"lattice width must satisfy 1 < w <= 2, got {w}")


def t2_bound(w: Rat) -> PiecewiseBound:
    """Lower bound on the probability that the type 2 single-split strength is
    at most z, as a function of the lattice width alone."""
    w = _frac(w)
    _check_width(w)

    def g1(z: Fraction) -> Fraction:
        return (z - w) * (2 * w * z - w - z) / (w**2 * (z - 1) ** 2)

    def g2(z: Fraction) -> Fraction:
        return ((w - 1) ** 2 * (z - 1) ** 2 - 1) / (w**2 * (z - 1) ** 2)

    if w == 2:
        # the two breakpoints coincide; the middle interval is empty
        return PiecewiseBound(
            breakpoints=(w,),
            pieces=(Piece("zero", _const(0)), Piece("g1+g2", lambda z: g1(z) + g2(z))),
        )
    return PiecewiseBound(
        breakpoints=(w, w / (w - 1)),
        pieces=(
            Piece("zero", _const(0)),
            Piece("g1", g1),
            Piece("g1+g2", lambda z: g1(z) + g2(z)),
        ),
    )


def p_t2_lower(z: Rat, w: Rat) -> Fraction:
    return t2_bound(w)(z)


def t2_region_integrals(a, z: Rat) -> tuple[Fraction, Fraction, Fraction]:
    """Aggregated region integrals (R1+R2, R3+R4, R5+R6) for a type 2 body.

    Their sum divided by the body area equals :func:`p_t2_lower` at the body's
    lattice width, exactly.
    """
    if isinstance(a, Type2Body):
        body = a
    elif isinstance(a, Rational2):
        body = Type2Body(a.x1, a.x2)
    else:
        body = Type2Body(*a)
    z = _frac(z)
    if z <= 1:
        raise ValueError(f"threshold must satisfy z > 1, got {z}")
    a2 = body.a2
    steep = a2 / (a2 - 1)

    if a2 <= 2:
        r12 = Fraction(0) if z <= a2 else (z - a2) / (z - 1)
    else:
        r12 = Fraction(0) if z <= steep else 1 - 1 / ((a2 - 1) * (z - 1))
    r34 = Fraction(0) if z <= a2 else (z - a2) * (z + a2 - 2) / (2 * (a2 - 1) * (z - 1) ** 2)
    r56 = (
        Fraction(0)
        if z <= steep
        else (a2 - 1) / 2 * (1 - 1 / ((a2 - 1) ** 2 * (z - 1) ** 2))
    )
    return r12, r34, r56


def special_values(w: Rat) -> tuple[Fraction, Fraction]:
    """(upper bound on 1 - P(2), lower bound on P(3/2)) for a type 2 body."""
    w = _frac(w)
    _check_width(w)
    upper_z2 = 4 * (w - 1) ** 2 / w**2
    lower_z32 = (3 - 2 * w) * (4 * w - 3) / w**2 if w < Fraction(3, 2) else Fraction(0)
    return upper_z2, lower_z32


# ---------------------------------------------------------------------------
# per-region piecewise plumbing


@dataclass(frozen=True)
class _RegionPieces:
    """One region's contribution: ``fns[i]`` on ``[breaks[i-1], breaks[i])``."""

    name: str
    labels: tuple[str, ...]
    breaks: tuple[Fraction, ...]
    fns: tuple[Callable[[Fraction], Fraction], ...]

    def index_at(self, z: Fraction) -> int:
        return bisect_right(list(self.breaks), z)


def _combine(regions: Sequence[_RegionPieces], total_area: Fraction) -> PiecewiseBound:
    cuts = sorted({b for r in regions for b in r.breaks})
    pieces = []
    probes = [Fraction(1)] + cuts  # any z in [cut, next) selects that interval
    for probe in probes:
        idx = [r.index_at(probe) for r in regions]
        label = ",".join(f"{r.name}:{r.labels[i]}" for r, i in zip(regions, idx))

        def evaluate(z: Fraction, idx=tuple(idx)) -> Fraction:
            return sum(r.fns[i](z) for r, i in zip(regions, idx)) / total_area

        pieces.append(Piece(label, evaluate))
    return PiecewiseBound(breakpoints=tuple(cuts), pieces=tuple(pieces))


_ZERO = _const(0)


# ---------------------------------------------------------------------------
# quadrilateral


def quad_bound(body: QuadBody) -> PiecewiseBound:
    """Lower bound on the probability that the quadrilateral single-split
    strength is at most z, in the vertex parameterization."""
    a1, a2, b1, b2 = body.a1, body.a2, body.b1, body.b2
    c1, c2, d1, d2 = body.c1, body.c2, body.d1, body.d2
    w = a2 - b2
    half = Fraction(1, 2)

    def r1_mid(z):
        return half * (-b2 / (w - 1) - -b2 / (z - 1)) * (
            (w - (b1 - a1)) / (w - 1) + (z - b1) / (z - 1) + a1 * (z - 1 + b2) / ((a2 - 1) * (z - 1))
        )

    def r1_tail(z):
        edge = (a1 * (b2 - 1) - (a2 - 1) * b1) / (a1 * b2 - (a2 - 1) * b1)
        return half * (-b2 / (w - 1) - c2) * ((w - (b1 - a1)) / (w - 1) + edge) + half * (
            c2 - -b2 / (z - 1)
        ) * (z / (z - 1) + edge)

    def r2_mid(z):
        return half * ((z - a2) / (z - 1) - -b2 / (w - 1)) * (
            (w - (b1 - a1)) / (w - 1) + (z - 1 + a1) / (z - 1) + (z - a2) * (b1 - 1) / (b2 * (z - 1))
        )

    def r2_tail(z):
        edge = (a2 * (1 - b1) - (1 - a1) * b2) / ((a2 - 1) * (1 - b1) - (1 - a1) * b2)
        return half * ((z - a2) / (z - 1) - d2) * (z / (z - 1) + edge) + half * (
            d2 - -b2 / (w - 1)
        ) * ((w - (b1 - a1)) / (w - 1) + edge)

    def r3_mid(z):
        return half * (-c1 / (d1 - c1 - 1) - -c1 / (z - 1)) * (
            (a2 - 1) * (d1 - 1) / ((1 - a1) * (d1 - c1 - 1))
            + (a2 - 1) * (z - 1 + c1) / ((1 - a1) * (z - 1))
            + c2 / (d1 - c1 - 1)
            + c2 / (z - 1)
        )

    def r3_tail(z):
        return half * (-c1 / (d1 - c1 - 1) - a1) * (
            (a2 - 1) * (2 - a1) / (1 - a1)
            - a1 * b2 / b1
            + (c1 * (a2 - 1) + c2 * (1 - a1)) / ((1 - a1) * (d1 - c1 - 1))
        ) + half * (a1 - -c1 / (z - 1)) * (
            a2 - 1 - a1 * b2 / b1 + (a1 * c2 - c1 * (a2 - 1)) / (a1 * (z - 1))
        )

    def r4_mid(z):
        return (
            half
            * (d1 - 1)
            * (z - d1 + c1)
            / ((z - 1) * (d1 - c1 - 1))
            * (
                (c2 * (1 - a1) + (a2 - 1) * (d1 - 1)) / ((1 - a1) * (d1 - c1 - 1))
                + (a2 - 1) * (d1 - 1) / ((1 - a1) * (z - 1))
                - b2 * (z - d1) / (b1 * (z - 1))
            )
        )

    def r4_tail(z):
        return half * (b1 - -c1 / (d1 - c1 - 1)) * (
            (c2 * (1 - a1) + c1 * (a2 - 1)) / ((1 - a1) * (d1 - c1 - 1))
            + ((a2 - 1) * (2 - b1) - b2 * (1 - a1)) / (1 - a1)
        ) + half * ((z - d1) / (z - 1) - b1) * (
            (a2 - 1) * (z - d1) / ((a1 - 1) * (z - 1))
            - b2 * (d1 - 1) / ((1 - b1) * (z - 1))
            + ((a2 - 1) * (2 - b1) - b2 * (1 - a1)) / (1 - a1)
        )

    regions = [
        _RegionPieces("R1", ("zero", "mid", "tail"), (w, (c2 - b2) / c2), (_ZERO, r1_mid, r1_tail)),
        _RegionPieces("R2", ("zero", "mid", "tail"), (w, (a2 - d2) / (1 - d2)), (_ZERO, r2_mid, r2_tail)),
        _RegionPieces("R3", ("zero", "mid", "tail"), (d1 - c1, (a1 - c1) / a1), (_ZERO, r3_mid, r3_tail)),
        _RegionPieces("R4", ("zero", "mid", "tail"), (d1 - c1, (d1 - b1) / (1 - b1)), (_ZERO, r4_mid, r4_tail)),
    ]
    return _combine(regions, area(body))


def quad_lower(body: QuadBody, z: Rat) -> Fraction:
    return quad_bound(body)(z)


# ---------------------------------------------------------------------------
# type 3


def t3_bound(body: Type3Body) -> PiecewiseBound:
    """Lower bound on the probability that the type 3 single-split strength is
    at most z, in the vertex parameterization."""
    a1, a2, b1 = body.a1, body.a2, body.b1
    b2, c1, c2 = body.b2, body.c1, body.c2
    w = c2 - b2
    half = Fraction(1, 2)

    def r12_mid(z):
        # trapezoid between the two horizontal cut lines plus the upper piece
        t1 = half * (-b2 / (w - 1) - -b2 / (z - 1)) * (
            b1 / (w - 1)
            + b1 / (z - 1)
            + a1 / (1 - a2) * ((c2 - 1) / (w - 1) + (z - 1 + b2) / (z - 1))
        )
        return t1 + _r2_piece(z)

    def r12_tail(z):
        t2 = half * (-b2 / (w - 1) - a2) * (
            ((1 - a2) * b1 + a1 * (c2 - 1)) / ((1 - a2) * (w - 1)) - (a2 * b1 - a1 * b2) / b2
        ) + half * (a2 - -b2 / (z - 1)) * (
            (a2 * b1 - (a1 - 1) * b2) / (a2 * (z - 1)) - (a2 * b1 - (a1 + 1) * b2) / b2
        )
        return t2 + _r2_piece(z)

    def _r2_piece(z):
        return half * ((z - c2) / (z - 1) - -b2 / (w - 1)) * (
            b1 / (w - 1)
            - b1 * (z - c2) / (b2 * (z - 1))
            + a1 / (1 - a2) * ((c2 - 1) / (w - 1) + (c2 - 1) / (z - 1))
        )

    def r34_lo(z):
        t4 = half * (-c1 / (a1 - c1 - 1) - -c1 / (z - 1)) * (
            a2 / (a1 - c1 - 1) + a2 * (z - 1 + c1) / ((a1 - 1) * (z - 1))
        )
        t6 = half * ((z - a1) / (z - 1) - -c1 / (a1 - c1 - 1)) * (a2 / (a1 - c1 - 1) + a2 / (z - 1))
        return t4 + t6

    def r34_hi(z):
        overlap = half * a2 / (b1 * (a1 - 1)) * ((b1 * (z - 1) + c1) / (z - 1)) ** 2
        return r34_lo(z) - overlap

    # The diagonal-split region above the line x2 = 1 is the triangle with
    # vertices c, (0,1), and (c1/c2, 1); its lowest diagonal coordinate
    # x1 + x2 is s_low, attained at (c1/c2, 1), so its contribution starts at
    # z_corner, not at the diagonal lattice width.  The low-diagonal region
    # R5 is always empty under the enforced width ordering: it would require
    # a1 + a2 <= 1 + b1, which forces c2 <= 1.
    s_low = (c1 + c2) / c2

    def r6_mid(z):
        sigma = (z - (a1 + a2)) / (z - 1)
        return half * (sigma - s_low) ** 2 / s_low

    def r6_tail(z):
        t13 = half * (c2 - 1) ** 2
        t14 = half * (b1 / b2 - c1) * (c2 - 1)
        t16 = half * (1 - (c1 + c2) - (a1 + a2 - 1) / (z - 1)) * (c2 - (z - a2) / (z - 1))
        t17 = (1 - a2) / (z - 1) * (1 - (c1 + c2) - (a1 + a2 - 1) / (z - 1))
        return t13 - t14 + t16 + t17

    regions = [
        _RegionPieces("R1R2", ("zero", "mid", "tail"), (w, (a2 - b2) / a2), (_ZERO, r12_mid, r12_tail)),
        _RegionPieces(
            "R3R4",
            ("zero", "mid", "tail"),
            (a1 - c1, (b1 - c1) / b1),
            (_ZERO, r34_lo, r34_hi),
        ),
        _RegionPieces(
            "R6",
            ("zero", "mid", "tail"),
            (
                (a1 + a2 - s_low) / (1 - s_low),
                (a1 + a2 - (c1 + c2)) / (1 - (c1 + c2)),
            ),
            (_ZERO, r6_mid, r6_tail),
        ),
    ]
    return _combine(regions, area(body))


def t3_lower(body: Type3Body, z: Rat) -> Fraction:
    return t3_bound(body)(z)


def bound_for(body, z: Rat) -> Fraction:
    """Family dispatch: the closed-form bound for any non-split body."""
    from .geometry import Type1Body

    if isinstance(body, Type1Body):
        return p_t1(z)
    if isinstance(body, Type2Body):
        return p_t2_lower(z, min(body.a2, body.a2 / (body.a2 - 1)))
    if isinstance(body, QuadBody):
        return quad_lower(body, z)
    if isinstance(body, Type3Body):
        return t3_lower(body, z)
    raise ValueError(f"no probability bound for {body!r}")


def piecewise_bound_for(body) -> PiecewiseBound:
    from .geometry import Type1Body

    if isinstance(body, Type1Body):
        return t1_bound()
    if isinstance(body, Type2Body):
        return t2_bound(min(body.a2, body.a2 / (body.a2 - 1)))
    if isinstance(body, QuadBody):
        return quad_bound(body)
    if isinstance(body, Type3Body):
        return t3_bound(body)
    raise ValueError(f"no probability bound for {body!r}")
