"""Seeded instance generators.

All generators emit exact integer points with strictly increasing
x-coordinates, already sorted, wrapped in a validated oracle.  Identical
parameters always reproduce bit-identical instances.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .geom import Point, cross
from .oracle import SortedPointSet, load

_SCALE = 1 << 20

KINDS = ("lowerbound", "circle", "parabola", "disk", "polygon", "random_sorted")


class Infeasible(ValueError):
    """The requested instance shape has no integer realization."""


@dataclass(frozen=True)
class GenSpec:
    kind: str
    n: int
    h: Optional[int] = None
    k: Optional[int] = None
    seed: int = 0


def gen_lowerbound(n: int, h: int, seed: int = 0) -> SortedPointSet:
    """The adversarial family: h+1 partition points on y = -x^2, one
    hidden hull point per gap, and everything else strictly below the
    chords.

    Each gap's hidden point sits strictly above the chord of its
    flanking partition points and strictly below the parabola, so the
    upper hull has exactly 2h+1 vertices while the hidden points carry
    no block-level hint of where they are.
    """
    if h < 1 or n < 2 * h + 1:
        raise Infeasible(f"lowerbound family needs n >= 2h+1, got n={n}, h={h}")
    # Gap width in x: at least 3 so an interior slot with chord-to-arc
    # clearance >= 2 exists, and wide enough to hold the decoys.
    width = max(3, 1 + -(-(n - h - 1) // h))
    rng = random.Random(seed)
    bounds = [t * width for t in range(h + 1)]
    pts = [Point(b, -b * b) for b in bounds]
    decoys = n - (2 * h + 1)
    base, extra = divmod(decoys, h)
    for t in range(h):
        a, b = bounds[t], bounds[t + 1]
        interior = list(range(a + 1, b))
        hx = interior[rng.randrange(len(interior))]
        clearance = (hx - a) * (b - hx)  # chord-to-arc gap at x = hx
        delta = rng.randint(1, clearance - 1)
        chord_at = lambda x: -(a + b) * x + a * b
        pts.append(Point(hx, chord_at(hx) + delta))
        want = base + (1 if t < extra else 0)
        free = [x for x in interior if x != hx]
        for x in rng.sample(free, want):
            pts.append(Point(x, chord_at(x) - rng.randint(1, 2 * width + 3)))
    pts.sort(key=lambda p: (p.x, p.y))
    return load(pts, require_distinct_x=True)


def gen_circle(n: int) -> SortedPointSet:
    """n points on an integer-rounded upper semicircle, all extreme.

    The radius starts at 8*n^2 and doubles until the rounded points are
    verified (exactly) to have distinct x and strict convexity.
    """
    if n < 3:
        raise Infeasible("circle family needs n >= 3")
    r = 8 * n * n
    while True:
        pts = []
        for i in range(n):
            theta = math.pi * (n - i - 0.5) / n
            pts.append(Point(round(r * math.cos(theta)), round(r * math.sin(theta))))
        ok = all(pts[i].x < pts[i + 1].x for i in range(n - 1)) and all(
            cross(pts[i - 1], pts[i], pts[i + 1]) < 0 for i in range(1, n - 1)
        )
        if ok:
            return load(pts, require_distinct_x=True)
        r *= 2


def gen_parabola(n: int) -> SortedPointSet:
    """n points on y = -x^2; like the circle, every point is extreme."""
    if n < 1:
        raise Infeasible("parabola family needs n >= 1")
    return load([Point(i, -i * i) for i in range(n)], require_distinct_x=True)


def gen_disk(n: int, seed: int = 0) -> SortedPointSet:
    """Uniform integer-lattice points in a disk, de-duplicated by x."""
    if n < 1:
        raise Infeasible("disk family needs n >= 1")
    if n > _SCALE:
        raise Infeasible("disk family cannot place that many distinct x values")
    rng = random.Random(seed)
    r = _SCALE
    seen = set()
    pts = []
    while len(pts) < n:
        x = rng.randint(-r, r)
        y = rng.randint(-r, r)
        if x * x + y * y > r * r or x in seen:
            continue
        seen.add(x)
        pts.append(Point(x, y))
    pts.sort(key=lambda p: (p.x, p.y))
    return load(pts, require_distinct_x=True)


def gen_polygon(n: int, k: int = 3, seed: int = 0) -> SortedPointSet:
    """Uniform integer-lattice points in a convex k-gon, de-duplicated by x."""
    if n < 1 or k < 3:
        raise Infeasible(f"polygon family needs n >= 1 and k >= 3, got n={n}, k={k}")
    rng = random.Random(seed)
    r = _SCALE
    verts = [
        Point(
            round(r * math.cos(2 * math.pi * t / k + 0.3)),
            round(r * math.sin(2 * math.pi * t / k + 0.3)),
        )
        for t in range(k)
    ]

    def inside(p: Point) -> bool:
        return all(
            cross(verts[i], verts[(i + 1) % k], p) >= 0 for i in range(k)
        )

    xs = [v.x for v in verts]
    ys = [v.y for v in verts]
    seen = set()
    pts = []
    while len(pts) < n:
        p = Point(rng.randint(min(xs), max(xs)), rng.randint(min(ys), max(ys)))
        if p.x in seen or not inside(p):
            continue
        seen.add(p.x)
        pts.append(p)
    pts.sort(key=lambda p: (p.x, p.y))
    return load(pts, require_distinct_x=True)


def gen_random_sorted(n: int, seed: int = 0) -> SortedPointSet:
    """Uniform random points in a square with distinct x; no structure."""
    if n < 1:
        raise Infeasible("random_sorted family needs n >= 1")
    if n > _SCALE:
        raise Infeasible("random_sorted family cannot place that many distinct x values")
    rng = random.Random(seed)
    r = _SCALE
    seen = set()
    pts = []
    while len(pts) < n:
        x = rng.randint(0, r)
        if x in seen:
            continue
        seen.add(x)
        pts.append(Point(x, rng.randint(-r, r)))
    pts.sort(key=lambda p: (p.x, p.y))
    return load(pts, require_distinct_x=True)


def generate(spec: GenSpec) -> SortedPointSet:
    """Dispatch a GenSpec to its generator."""
    if spec.kind == "lowerbound":
        if spec.h is None:
            raise Infeasible("lowerbound family needs h")
        return gen_lowerbound(spec.n, spec.h, spec.seed)
    if spec.kind == "circle":
        return gen_circle(spec.n)
    if spec.kind == "parabola":
        return gen_parabola(spec.n)
    if spec.kind == "disk":
        return gen_disk(spec.n, spec.seed)
    if spec.kind == "polygon":
        return gen_polygon(spec.n, spec.k if spec.k is not None else 3, spec.seed)
    if spec.kind == "random_sorted":
        return gen_random_sorted(spec.n, spec.seed)
    raise Infeasible(f"unknown instance kind {spec.kind!r}")
