"""Split cuts, region assignment, and single-split / finite-closure strength.

The strength of adding a body's cut on top of split cuts is always the
reciprocal of a small covering LP over the corner rays (scaled to gauge 1):

* one split row  -> the single-split value ``t_bar``,
* all primitive normals up to a max-norm radius -> the finite split-closure
  approximation ``t_N`` (an upper bound on the true closure strength, and
  nonincreasing in N).

For every non-split body the region table gives ``t_bar`` in closed form;
``strength_single_split`` evaluates both routes and insists they agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, inf
from typing import Optional, Sequence

from .geometry import (
    LatticeFreeBody,
    QuadBody,
    Rational2,
    SplitBody,
    Type1Body,
    Type2Body,
    Type3Body,
    contains,
    corner_rays,
    point,
)


@dataclass(frozen=True)
class SplitCut:
    """One split inequality: primitive normal, offset floor(normal . f), and a
    nonnegative coefficient per ray."""

    normal: tuple[int, int]
    offset: int
    coefficients: tuple[Fraction, ...]


@dataclass(frozen=True)
class RegionId:
    """Region index within a body's decomposition, e.g. RegionId('type2', 3)."""

    family: str
    index: int

    def __str__(self):
        return f"R{self.index}"


@dataclass(frozen=True)
class StrengthReport:
    region: RegionId
    chosen_split_normal: Optional[tuple[int, int]]
    t_bar: Fraction
    t_n: Optional[Fraction] = None
    n: Optional[int] = None


def _primitive(normal: Sequence[int]) -> tuple[int, int]:
    n1, n2 = int(normal[0]), int(normal[1])
    if (n1, n2) == (0, 0) or gcd(abs(n1), abs(n2)) != 1:
        raise ValueError(f"normal must be a primitive integer pair, got {normal}")
    return n1, n2


def split_coefficients(normal: Sequence[int], f: Rational2, rays: Sequence[Rational2]) -> SplitCut:
    """Coefficients of the split ``{floor(n.f) <= n.x <= ceil(n.f)}`` at each ray."""
    n1, n2 = _primitive(normal)
    nf = n1 * f.x1 + n2 * f.x2
    if nf.denominator == 1:
        raise ValueError(f"normal . f = {nf} is integral: f is not interior to the split")
    lo, hi = Fraction(floor(nf)), Fraction(ceil(nf))
    coeffs = []
    for r in rays:
        if r.is_zero():
            raise ValueError("rays must be nonzero")
        nr = n1 * r.x1 + n2 * r.x2
        if nr > 0:
            coeffs.append(nr / (hi - nf))
        elif nr == 0:
            coeffs.append(Fraction(0))
        else:
            coeffs.append(nr / (lo - nf))
    return SplitCut((n1, n2), floor(nf), tuple(coeffs))


# ---------------------------------------------------------------------------
# covering LP


def _solve_square(a: list[list[Fraction]], b: list[Fraction]) -> Optional[list[Fraction]]:
    """Gaussian elimination over Fractions; None when singular."""
    m = len(a)
    mat = [row[:] + [b[i]] for i, row in enumerate(a)]
    for col in range(m):
        piv = next((r for r in range(col, m) if mat[r][col] != 0), None)
        if piv is None:
            return None
        mat[col], mat[piv] = mat[piv], mat[col]
        pv = mat[col][col]
        mat[col] = [v / pv for v in mat[col]]
        for r in range(m):
            if r != col and mat[r][col] != 0:
                factor = mat[r][col]
                mat[r] = [v - factor * w for v, w in zip(mat[r], mat[col])]
    return [mat[i][m] for i in range(m)]


def covering_lp_min(rows: Sequence[Sequence[Fraction]], k: int):
    """Minimize ``sum(s)`` subject to ``row . s >= 1`` for every row, ``s >= 0``.

    Solved exactly by enumerating basic feasible solutions over row/variable
    subsets of size <= k.  Returns ``(value, argmin)``; ``(inf, None)`` when
    some row is identically zero (uncoverable).
    """
    if k > 4:
        raise ValueError("only up to 4 variables are supported")
    if not rows:
        raise ValueError("need at least one row")
    mat = [tuple(Fraction(c) for c in row) for row in rows]
    for row in mat:
        if len(row) != k:
            raise ValueError(f"row length {len(row)} != k = {k}")
        if any(c < 0 for c in row):
            raise ValueError("covering data must be nonnegative")
    if any(all(c == 0 for c in row) for row in mat):
        return inf, None

    # dominance pruning: a row with componentwise-larger coefficients is
    # implied by the smaller row (s >= 0), so only minimal rows matter
    mat = sorted(set(mat))
    kept: list[tuple[Fraction, ...]] = []
    for row in mat:
        if any(all(o[j] <= row[j] for j in range(k)) for o in kept):
            continue
        kept = [o for o in kept if not all(row[j] <= o[j] for j in range(k))]
        kept.append(row)

    fast = _lp_screened(kept, k)
    if fast is not None:
        return fast
    return _lp_enumerate(kept, k)


def _basis_solution(kept, rsub, vsub, k):
    """Exact basic solution for a row/variable basis, or None."""
    m = len(rsub)
    a = [[kept[i][j] for j in vsub] for i in rsub]
    sol = _solve_square(a, [Fraction(1)] * m)
    if sol is None or any(v < 0 for v in sol):
        return None
    s = [Fraction(0)] * k
    for j, v in zip(vsub, sol):
        s[j] = v
    if any(sum(c * x for c, x in zip(row, s)) < 1 for row in kept):
        return None
    return sum(s), tuple(s)


def _certify_optimal(kept, rsub, vsub) -> bool:
    """Exact duality certificate: the dual basic solution for the same basis
    must be feasible (y >= 0, column sums <= 1)."""
    m = len(rsub)
    at = [[kept[i][j] for i in rsub] for j in vsub]
    y = _solve_square(at, [Fraction(1)] * m)
    if y is None or any(v < 0 for v in y):
        return False
    for j in range(len(kept[0])):
        if sum(yv * kept[i][j] for yv, i in zip(y, rsub)) > 1:
            return False
    return True


def _lp_screened(kept, k):
    """Float enumeration of candidate bases, then exact solve + exact
    optimality certificate.  Returns None when certification fails."""
    import numpy as np

    nrows = len(kept)
    mat = np.array([[float(c) for c in row] for row in kept])
    candidates = []
    best_f = None
    for m in range(1, min(k, nrows) + 1):
        for vsub in itertools.combinations(range(k), m):
            rsubs = list(itertools.combinations(range(nrows), m))
            a = mat[np.array(rsubs)[:, :, None], np.array(vsub)[None, None, :]]
            with np.errstate(all="ignore"):
                ok = np.abs(np.linalg.det(a)) > 1e-12
                sols = np.full((len(rsubs), m), np.nan)
                if ok.any():
                    rhs = np.ones((int(ok.sum()), m, 1))
                    sols[ok] = np.linalg.solve(a[ok], rhs)[:, :, 0]
            full = np.zeros((len(rsubs), k))
            full[:, list(vsub)] = sols
            feas = (
                ok
                & (sols >= -1e-9).all(axis=1)
                & ((mat @ full.T).T >= 1 - 1e-9).all(axis=1)
            )
            for idx in np.nonzero(feas)[0]:
                total = float(sols[idx].sum())
                candidates.append((total, rsubs[idx], vsub))
                if best_f is None or total < best_f:
                    best_f = total
    if best_f is None:
        return None
    best = None
    best_basis = None
    for total, rsub, vsub in candidates:
        if total > best_f + 1e-6 * (1 + abs(best_f)):
            continue
        exact = _basis_solution(kept, rsub, vsub, k)
        if exact is not None and (best is None or exact[0] < best[0]):
            best, best_basis = exact, (rsub, vsub)
    if best is not None and _certify_optimal(kept, *best_basis):
        return best
    return None


def _lp_enumerate(kept, k):
    best: Optional[Fraction] = None
    best_s: Optional[tuple[Fraction, ...]] = None
    nrows = len(kept)
    for m in range(1, min(k, nrows) + 1):
        for rsub in itertools.combinations(range(nrows), m):
            for vsub in itertools.combinations(range(k), m):
                exact = _basis_solution(kept, rsub, vsub, k)
                if exact is not None and (best is None or exact[0] < best):
                    best, best_s = exact
    assert best is not None  # every kept row has a positive entry
    return best, best_s


# ---------------------------------------------------------------------------
# regions


def _region(body, index: int) -> RegionId:
    return RegionId(body.tag, index)


_T1_REGIONS = [
    [point(1, 0), point(1, 1), point(0, 1)],
    [point(0, 0), point(1, 0), point(0, 1)],
    [point(0, 1), point(1, 1), point(0, 2)],
    [point(1, 0), point(2, 0), point(1, 1)],
]


def region_polygons(body: LatticeFreeBody) -> list[list[Rational2]]:
    """Closed region decomposition as CCW polygons, indexed from region 1."""
    if isinstance(body, Type1Body):
        return [poly[:] for poly in _T1_REGIONS]
    if isinstance(body, Type2Body):
        a1, a2 = body.a1, body.a2
        left, right = body.left, body.right
        return [
            [point(0, 0), point(a1, 0), point(a1, 1), point(0, 1)],
            [point(a1, 0), point(1, 0), point(1, 1), point(a1, 1)],
            [left, point(0, 0), point(0, 1)],
            [point(1, 0), right, point(1, 1)],
            [point(0, 1), point(a1, 1), Rational2(a1, a2)],
            [point(a1, 1), point(1, 1), Rational2(a1, a2)],
        ]
    if isinstance(body, QuadBody):
        a, b, c, d = body.vertices()
        w = body.a2 - body.b2
        h = -body.b2 / (w - 1)
        th = body.theta
        top = [point(0, 1), point(1, 1), a]
        bottom = [point(0, 0), b, point(1, 0)]
        return [
            _clip_band(body.polygon(), point(0, 1), Fraction(0), h),
            _clip_band(body.polygon(), point(0, 1), h, Fraction(1)),
            _join(_clip_band(bottom, point(1, 0), Fraction(0), th), _clip_band(top, point(1, 0), Fraction(0), th)),
            _join(_clip_band(bottom, point(1, 0), th, Fraction(1)), _clip_band(top, point(1, 0), th, Fraction(1))),
        ]
    if isinstance(body, Type3Body):
        poly = body.polygon()
        w = body.c2 - body.b2
        h2 = -body.b2 / (w - 1)
        h1 = -body.c1 / (body.a1 - body.c1 - 1)
        hd = -(body.b1 + body.b2) / (body.a1 + body.a2 - 1 - (body.b1 + body.b2))
        below = _clip_band(poly, point(0, 1), None, Fraction(0))  # near b
        above = _clip_band(poly, point(0, 1), Fraction(1), None)  # near c
        return [
            _clip_band(poly, point(0, 1), Fraction(0), h2),
            _clip_band(poly, point(0, 1), h2, Fraction(1)),
            _clip_band(below, point(1, 0), Fraction(0), h1),
            _clip_band(below, point(1, 0), h1, Fraction(1)),
            _clip_band(above, point(1, 1), Fraction(0), hd),
            _clip_band(above, point(1, 1), hd, Fraction(1)),
        ]
    raise ValueError(f"no region decomposition for {body!r}")


def _clip_band(poly, normal, lo, hi):
    from .geometry import clip_halfplane

    out = list(poly)
    if hi is not None:
        out = clip_halfplane(out, normal, hi)
    if lo is not None and out:
        out = clip_halfplane(out, -normal, -lo)
    return out


def _join(p1, p2):
    # regions 3/4 of a quadrilateral are a disjoint pair of pieces; membership
    # and area tests treat the pair as one region
    return ("pair", p1, p2)


def _region_contains(poly, f: Rational2) -> bool:
    if isinstance(poly, tuple) and poly and poly[0] == "pair":
        return any(len(p) >= 3 and contains(p, f) for p in poly[1:])
    return len(poly) >= 3 and contains(poly, f)


def region_area(poly) -> Fraction:
    from .geometry import polygon_area

    if isinstance(poly, tuple) and poly and poly[0] == "pair":
        return sum((polygon_area(p) for p in poly[1:]), Fraction(0))
    return polygon_area(poly)


def region_of(body: LatticeFreeBody, f: Rational2) -> RegionId:
    """The region of the body's decomposition containing ``f``; boundary points
    go to the smallest-index adjacent region."""
    if isinstance(body, SplitBody):
        raise ValueError("splits have no region decomposition")
    if not body.contains_interior(f):
        raise ValueError(f"root vertex {f} is not strictly interior to {body!r}")
    for i, poly in enumerate(region_polygons(body), start=1):
        if _region_contains(poly, f):
            return _region(body, i)
    raise AssertionError(f"no region contains interior point {f}")  # pragma: no cover


def chosen_split(body: LatticeFreeBody, region: RegionId) -> tuple[int, int]:
    """Normal of the single split used in the given region."""
    i = region.index
    if isinstance(body, Type2Body):
        if i in (3, 4):
            return (0, 1)
        if i in (5, 6):
            return (1, 0)
        if i in (1, 2):
            return (0, 1) if body.a2 <= 2 else (1, 0)
    elif isinstance(body, QuadBody):
        if i in (1, 2):
            return (0, 1)
        if i in (3, 4):
            return (1, 0)
    elif isinstance(body, Type3Body):
        if i in (1, 2):
            return (0, 1)
        if i in (3, 4):
            return (1, 0)
        if i in (5, 6):
            return (1, 1)
    raise ValueError(f"no split choice for {body!r}, region {region}")


# ---------------------------------------------------------------------------
# strength


def _t1_exact_strength(f: Rational2, region: RegionId) -> Fraction:
    f1, f2 = f.x1, f.x2
    if region.index == 1:
        return Fraction(2)
    if region.index == 2:
        return (3 - f1 - f2) / (2 - f1 - f2)
    if region.index == 3:
        return (f2 + 1) / f2
    return (f1 + 1) / f1


def _table_t_bar(body, f: Rational2, region: RegionId) -> Fraction:
    f1, f2 = f.x1, f.x2
    i = region.index
    if isinstance(body, Type2Body):
        a1, a2 = body.a1, body.a2
        vertical = (a2 - f2) / (1 - f2)
        left = (f1 + a1 / (a2 - 1)) / f1
        right = ((a2 - a1) / (a2 - 1) - f1) / (1 - f1)
        if i in (3, 4):
            return vertical
        if i == 5:
            return left
        if i == 6:
            return right
        if a2 <= 2:
            return vertical
        return left if i == 1 else right
    if isinstance(body, QuadBody):
        if i == 1:
            return (f2 - body.b2) / f2
        if i == 2:
            return (body.a2 - f2) / (1 - f2)
        if i == 3:
            return (f1 - body.c1) / f1
        return (body.d1 - f1) / (1 - f1)
    if isinstance(body, Type3Body):
        s = f1 + f2
        if i == 1:
            return (f2 - body.b2) / f2
        if i == 2:
            return (body.c2 - f2) / (1 - f2)
        if i == 3:
            return (f1 - body.c1) / f1
        if i == 4:
            return (body.a1 - f1) / (1 - f1)
        if i == 5:
            return (s - (body.b1 + body.b2)) / s
        return (body.a1 + body.a2 - s) / (1 - s)
    raise ValueError(f"no strength table for {body!r}")


def strength_single_split(body: LatticeFreeBody, f: Rational2) -> StrengthReport:
    """Single-split strength ``t_bar`` at ``f``: region-table closed form,
    cross-checked exactly against the one-row covering-LP reciprocal.

    For the type 1 triangle the full split closure is generated by the three
    facet normals, so the exact closure strength is reported instead and no
    single split is singled out.
    """
    region = region_of(body, f)
    rays = corner_rays(body, f)
    if isinstance(body, Type1Body):
        t_table = _t1_exact_strength(f, region)
        t_lp = strength_split_closure_approx(body, f, 1)
        normal = None
    else:
        normal = chosen_split(body, region)
        cut = split_coefficients(normal, f, rays)
        value, _ = covering_lp_min([cut.coefficients], len(rays))
        t_lp = 1 / value
        t_table = _table_t_bar(body, f, region)
    if t_table != t_lp:
        raise AssertionError(
            f"strength table value {t_table} disagrees with the covering-LP value {t_lp} "
            f"for {body!r}, f={f}, region {region}"
        )
    return StrengthReport(region=region, chosen_split_normal=normal, t_bar=t_table)


def admissible_normals(f: Rational2, n: int) -> list[tuple[int, int]]:
    """Primitive normals with max-norm <= n whose split contains ``f`` strictly,
    deduplicated over +-."""
    out = []
    for n1 in range(0, n + 1):
        for n2 in range(-n, n + 1):
            if n1 == 0 and n2 <= 0:
                continue
            if gcd(n1, abs(n2)) != 1:
                continue
            nf = n1 * f.x1 + n2 * f.x2
            if nf.denominator == 1:
                continue
            out.append((n1, n2))
    return out


def strength_split_closure_approx(body: LatticeFreeBody, f: Rational2, n: int) -> Fraction:
    """Finite split-closure strength ``t_N``: all splits with max-norm <= n."""
    if n < 1:
        raise ValueError("need n >= 1")
    rays = corner_rays(body, f)
    normals = admissible_normals(f, n)
    if not normals:
        raise ValueError(f"no admissible split with max-norm <= {n} for f = {f}")
    rows = [split_coefficients(nrm, f, rays).coefficients for nrm in normals]
    value, _ = covering_lp_min(rows, len(rays))
    return 1 / value


def strength_report(body: LatticeFreeBody, f: Rational2, n: int = 5) -> StrengthReport:
    """Full report: region, chosen split, single-split t_bar, and t_N."""
    base = strength_single_split(body, f)
    t_n = strength_split_closure_approx(body, f, n)
    return StrengthReport(
        region=base.region,
        chosen_split_normal=base.chosen_split_normal,
        t_bar=base.t_bar,
        t_n=t_n,
        n=n,
    )
