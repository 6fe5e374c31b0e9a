"""Monte Carlo verification of the closed-form probability bounds.

Samples root vertices uniformly in a body (fan triangulation plus the
standard barycentric fold, no rejection) and tallies the indicator that the
region-table strength is at most a threshold.  Sample ``i`` is a pure
function of ``(seed, i)``: each sample consumes exactly one Philox counter
block (four doubles, three used), so results are bit-identical no matter how
the index range is chunked across threads.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt

import numpy as np

from .geometry import (
    LatticeFreeBody,
    QuadBody,
    SplitBody,
    Type1Body,
    Type2Body,
    Type3Body,
    _frac,
)

_CHUNK = 1 << 16  # fixed so chunk boundaries never depend on thread count


@dataclass(frozen=True)
class McEstimate:
    estimate: float
    std_error: float
    samples: int
    seed: int


def thread_count() -> int:
    env = os.environ.get("CUTSTRENGTH_THREADS")
    if env is not None:
        n = int(env)
        if n < 1:
            raise ValueError(f"CUTSTRENGTH_THREADS must be >= 1, got {env}")
        return n
    return min(os.cpu_count() or 1, 4)


def _fan_triangles(body: LatticeFreeBody):
    """Fan triangulation from vertex 0 with float vertex arrays and exact
    cumulative area weights."""
    poly = body.polygon()
    v0 = poly[0]
    tris = []
    areas = []
    for p, q in zip(poly[1:], poly[2:]):
        tris.append((v0, p, q))
        areas.append((p.x1 - v0.x1) * (q.x2 - v0.x2) - (p.x2 - v0.x2) * (q.x1 - v0.x1))
    total = sum(areas)
    cum = np.cumsum([float(a / total) for a in areas])
    cum[-1] = 1.0  # guard against float round-off at the top
    origin = np.array([float(v0.x1), float(v0.x2)])
    edge1 = np.array([[float(p.x1 - v0.x1), float(p.x2 - v0.x2)] for _, p, _ in tris])
    edge2 = np.array([[float(q.x1 - v0.x1), float(q.x2 - v0.x2)] for _, _, q in tris])
    return cum, origin, edge1, edge2


def _sample_points(body_tri, seed: int, start: int, count: int) -> np.ndarray:
    cum, origin, edge1, edge2 = body_tri
    bg = np.random.Philox(key=seed, counter=[start, 0, 0, 0])
    u = np.random.Generator(bg).random(count * 4).reshape(count, 4)
    tri = np.searchsorted(cum, u[:, 0], side="right")
    tri = np.minimum(tri, len(cum) - 1)
    r1, r2 = u[:, 1].copy(), u[:, 2].copy()
    flip = r1 + r2 > 1.0
    r1[flip] = 1.0 - r1[flip]
    r2[flip] = 1.0 - r2[flip]
    return origin + r1[:, None] * edge1[tri] + r2[:, None] * edge2[tri]


def _t_bar_type1(pts: np.ndarray, body: Type1Body) -> np.ndarray:
    f1, f2 = pts[:, 0], pts[:, 1]
    s = f1 + f2
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(s >= 1.0, 2.0, (3.0 - s) / (2.0 - s))
        out = np.where(f2 >= 1.0, (f2 + 1.0) / f2, out)
        out = np.where(f1 >= 1.0, (f1 + 1.0) / f1, out)
    return out


def _t_bar_type2(pts: np.ndarray, body: Type2Body) -> np.ndarray:
    a1, a2 = float(body.a1), float(body.a2)
    base_l = a1 / (a2 - 1.0)
    base_r = (a2 - a1) / (a2 - 1.0)
    f1, f2 = pts[:, 0], pts[:, 1]
    with np.errstate(divide="ignore", invalid="ignore"):
        vert = (a2 - f2) / (1.0 - f2)
        left = (f1 + base_l) / f1
        right = (base_r - f1) / (1.0 - f1)
    lr = np.where(f1 <= a1, left, right)
    inner = lr if float(body.a2) > 2 else vert
    inner = np.where((f1 < 0.0) | (f1 > 1.0), vert, inner)
    return np.where(f2 >= 1.0, lr, inner)


def _t_bar_quad(pts: np.ndarray, body: QuadBody) -> np.ndarray:
    b2, a2 = float(body.b2), float(body.a2)
    c1, d1 = float(body.c1), float(body.d1)
    h = float(-body.b2 / (body.a2 - body.b2 - 1))
    th = float(body.theta)
    f1, f2 = pts[:, 0], pts[:, 1]
    with np.errstate(divide="ignore", invalid="ignore"):
        low = (f2 - b2) / f2
        high = (a2 - f2) / (1.0 - f2)
        left = (f1 - c1) / f1
        right = (d1 - f1) / (1.0 - f1)
    out = np.where(f2 <= h, low, high)
    outer = np.where(f1 <= th, left, right)
    return np.where((f2 < 0.0) | (f2 > 1.0), outer, out)


def _t_bar_type3(pts: np.ndarray, body: Type3Body) -> np.ndarray:
    a1, a2 = float(body.a1), float(body.a2)
    b1, b2 = float(body.b1), float(body.b2)
    c1, c2 = float(body.c1), float(body.c2)
    h2 = float(-body.b2 / (body.c2 - body.b2 - 1))
    h1 = float(-body.c1 / (body.a1 - body.c1 - 1))
    hd = float(
        -(body.b1 + body.b2) / (body.a1 + body.a2 - 1 - (body.b1 + body.b2))
    )
    f1, f2 = pts[:, 0], pts[:, 1]
    s = f1 + f2
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.where(f2 <= h2, (f2 - b2) / f2, (c2 - f2) / (1.0 - f2))
        below = np.where(f1 <= h1, (f1 - c1) / f1, (a1 - f1) / (1.0 - f1))
        above = np.where(s <= hd, (s - (b1 + b2)) / s, (a1 + a2 - s) / (1.0 - s))
    out = np.where(f2 < 0.0, below, out)
    return np.where(f2 > 1.0, above, out)


_EVALUATORS = {
    Type1Body: _t_bar_type1,
    Type2Body: _t_bar_type2,
    QuadBody: _t_bar_quad,
    Type3Body: _t_bar_type3,
}


def monte_carlo_lower(
    body: LatticeFreeBody, z, samples: int, seed: int = 0
) -> McEstimate:
    """Estimate P(strength at the sampled root vertex <= z) by uniform
    sampling; deterministic for fixed (seed, samples)."""
    if isinstance(body, SplitBody):
        raise ValueError("splits have no bounded area to sample")
    if samples < 1:
        raise ValueError(f"need samples >= 1, got {samples}")
    z = float(_frac(z))
    evaluate = _EVALUATORS[type(body)]
    tri = _fan_triangles(body)

    def run(start: int) -> int:
        count = min(_CHUNK, samples - start)
        pts = _sample_points(tri, seed, start, count)
        return int(np.count_nonzero(evaluate(pts, body) <= z))

    starts = range(0, samples, _CHUNK)
    threads = thread_count()
    if threads == 1 or len(starts) == 1:
        hits = sum(run(s) for s in starts)
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            hits = sum(pool.map(run, starts))
    p = hits / samples
    return McEstimate(p, sqrt(p * (1.0 - p) / samples), samples, seed)
