"""Convex-hull algorithms over the query-counted oracle.

The headline algorithm is ``quantum_upper_hull``: guess the output
size, find all bridge edges of the block partition with a stack scan
(combine), then gift-wrap the stretch of hull inside each block
(conquer), doubling the guess whenever the vertex budget overflows.
``quantum_jarvis_full`` is the whole-set gift-wrapping baseline, and
``classical_upper_hull`` / ``monotone_chain_upper`` are the classical
references.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Sequence

from .geom import Point, angle_compare, cross
from .oracle import DistinctXRequired, SortedPointSet, qprep
from .qsim import (
    ANALYTIC,
    BudgetExceeded,
    CostLedger,
    EmptySide,
    SimMode,
    qlp,
    qmax,
    solve_bridge_lp,
)


@dataclass(frozen=True)
class Bridge:
    """An upper-hull edge whose endpoints lie in two different blocks."""

    left: Point
    right: Point
    left_block: int
    right_block: int


@dataclass(frozen=True)
class HullChain:
    """Upper-hull vertices in strictly increasing x, strictly convex."""

    points: tuple[Point, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]


def monotone_chain_upper(points: Sequence[Point]) -> HullChain:
    """Stack-scan upper hull of an x-sorted sequence; the reference
    implementation everything else is compared against."""
    ch: list[Point] = []
    for p in points:
        while len(ch) >= 2 and cross(ch[-2], ch[-1], p) >= 0:
            ch.pop()
        ch.append(p)
    return HullChain(tuple(ch))


def monotone_full_hull(points: Sequence[Point]) -> list[Point]:
    """Reference closed clockwise polygon: the upper chain followed by
    the reflected lower chain, shared endpoints dropped.

    Pre: points sorted with distinct x, at least one point.
    """
    pts = list(points)
    upper = monotone_chain_upper(pts)
    neg = [Point(p.x, -p.y) for p in pts]
    lower = [Point(p.x, -p.y) for p in monotone_chain_upper(neg).points]
    middle = list(reversed(lower))[1:-1]
    return list(upper.points) + middle


def _upper_rec(pts: list[Point]) -> list[Point]:
    if len(pts) <= 2:
        return list(pts)
    mid = len(pts) // 2
    left = _upper_rec(pts[:mid])
    right = _upper_rec(pts[mid:])
    axis = Fraction(pts[mid - 1].x + pts[mid].x, 2)
    p_s, p_f = solve_bridge_lp(left, right, axis)
    return (
        [p for p in left if p.x < p_s.x]
        + [p_s, p_f]
        + [p for p in right if p.x > p_f.x]
    )


def classical_upper_hull(o: SortedPointSet) -> HullChain:
    """Divide-and-conquer upper hull with an LP-found tangent per merge."""
    if not o.distinct_x:
        raise DistinctXRequired("classical_upper_hull needs require_distinct_x=True")
    pts = [o.query(i) for i in range(o.n)]
    if not pts:
        return HullChain(())
    return HullChain(tuple(_upper_rec(pts)))


def _block_size(n: int, h: int) -> int:
    return -(-n // h)


def _effective_blocks(n: int, h: int) -> int:
    # Number of non-empty blocks under ceiling division.
    return -(-n // _block_size(n, h))


def bridge(o: SortedPointSet, i: int, j: int, h: int, ledger: CostLedger) -> Bridge:
    """Upper-hull edge of blocks i and j crossing the line between them.

    The separating vertical line sits midway between block i's last and
    block j's first point (any position strictly between them would do,
    since x-coordinates are distinct); finding those two boundary points
    costs the stated two classical queries.
    """
    left_view = qprep(o, i, h, ledger)
    right_view = qprep(o, j, h, ledger)
    if left_view.m == 0 or right_view.m == 0:
        raise EmptySide(f"bridge asked to span empty block ({i}, {j})")
    last_left = o.query(left_view.hi - 1)
    first_right = o.query(right_view.lo)
    xL = Fraction(last_left.x + first_right.x, 2)
    p_s, p_f = qlp(xL, left_view, right_view, o, ledger)
    return Bridge(p_s, p_f, i, j)


def _bridge_turn(b1: Bridge, b2: Bridge) -> int:
    """Sign of the turn from edge b1 to edge b2 (+1 left, -1 right)."""
    d1x, d1y = b1.right.x - b1.left.x, b1.right.y - b1.left.y
    d2x, d2y = b2.right.x - b2.left.x, b2.right.y - b2.left.y
    s = d1x * d2y - d1y * d2x
    return (s > 0) - (s < 0)


def find_bridge_edges(o: SortedPointSet, h: int, ledger: CostLedger) -> list[Bridge]:
    """All bridge edges of the h-way partition, left to right.

    Graham-style scan at block level: a new bridge that fails to make a
    strict right turn against the stack top pops it and is recomputed
    against the exposed block (collinear joints are popped too, keeping
    the chain strictly convex).  Each block can be popped at most once,
    so at most 2(h-1) bridge computations happen per call.
    """
    if h < 2:
        raise ValueError("find_bridge_edges needs h >= 2")
    h_eff = _effective_blocks(o.n, h)
    if h_eff < 2:
        return []
    stack = [bridge(o, 0, 1, h, ledger)]
    for i in range(2, h_eff):
        b = bridge(o, i - 1, i, h, ledger)
        while stack and _bridge_turn(stack[-1], b) >= 0:
            popped = stack.pop()
            t = stack[-1].right_block if stack else popped.left_block
            b = bridge(o, t, i, h, ledger)
        stack.append(b)
    return stack


def block_jarvis(
    o: SortedPointSet,
    j: int,
    h: int,
    B: Sequence[Bridge],
    budget: int,
    ledger: CostLedger,
) -> list[Point]:
    """Hull vertices interior to block j, marched left to right.

    The march enters at the right endpoint of the bridge arriving from
    the left (the global first point for block 0) and exits at the left
    endpoint of the departing bridge (the global last point for the last
    block).  Blocks that host no bridge endpoint are spanned by some
    bridge and return empty at no cost, as does a block whose entry and
    exit coincide.
    """
    n = o.n
    last = _effective_blocks(n, h) - 1
    entering = next((b for b in B if b.right_block == j), None)
    leaving = next((b for b in B if b.left_block == j), None)
    if j == 0:
        entry = o.query(0)
    elif entering is not None:
        entry = entering.right
    else:
        return []
    if j == last:
        exit_pt = o.query(n - 1)
    elif leaving is not None:
        exit_pt = leaving.left
    else:
        return []
    if entry == exit_pt:
        return []

    view = qprep(o, j, h, ledger)
    found: list[Point] = []
    prev = entering.left if entering is not None else Point(entry.x, entry.y - 1)
    cur = entry
    while True:
        lo_x = cur.x
        f = lambda p, lo=lo_x: lo < p.x <= exit_pt.x
        key = cmp_to_key(lambda u, v, a=prev, c=cur: angle_compare(a, c, u, v))
        q = qmax(view, f, key, ledger)
        if q is None:
            raise RuntimeError(f"block {j} march lost its exit anchor")
        if q == exit_pt:
            return found
        if len(found) + 1 > budget:
            raise BudgetExceeded(f"block {j}: march exceeded budget {budget}")
        found.append(q)
        prev, cur = cur, q


def _hull_pass(o: SortedPointSet, g: int, ledger: CostLedger) -> HullChain:
    n = o.n
    bridges = find_bridge_edges(o, g, ledger)
    endpoints: list[Point] = []
    seen = set()
    for b in bridges:
        for p in (b.left, b.right):
            if p not in seen:
                seen.add(p)
                endpoints.append(p)
    if len(endpoints) > g:
        raise BudgetExceeded(f"{len(endpoints)} bridge endpoints exceed guess {g}")
    remaining = g - len(endpoints)
    marches: dict[int, list[Point]] = {}
    for j in range(_effective_blocks(n, g)):
        out = block_jarvis(o, j, g, bridges, remaining, ledger)
        marches[j] = out
        remaining -= len(out)
    # Stitch: global first point, then per block its march followed by
    # the departing bridge, ending at the global last point.
    seq = [o.query(0)]
    seq += marches.get(0, [])
    for b in bridges:
        seq += [b.left, b.right]
        seq += marches.get(b.right_block, [])
    seq.append(o.query(n - 1))
    chain = [seq[0]]
    for p in seq[1:]:
        if p != chain[-1]:
            chain.append(p)
    return HullChain(tuple(chain))


def quantum_upper_hull(
    o: SortedPointSet, mode: SimMode = ANALYTIC
) -> tuple[HullChain, CostLedger]:
    """Output-size-doubling combine-and-conquer upper hull.

    Each guess pass finds the bridge edges of the partition and marches
    the blocks under a shared vertex budget equal to the guess; the
    budget counts distinct bridge endpoints plus marched vertices.  On
    overflow the guess doubles (clamped to n) and the pass restarts
    from scratch, accumulating cost in the same ledger.
    """
    if not o.distinct_x:
        raise DistinctXRequired("quantum_upper_hull needs require_distinct_x=True")
    ledger = CostLedger(mode=mode)
    n = o.n
    if n == 0:
        return HullChain(()), ledger
    if n <= 4:
        pts = [o.query(i) for i in range(n)]
        return monotone_chain_upper(pts), ledger
    g = 4
    while True:
        mark = (ledger.qmax_calls, ledger.qlp_calls)
        try:
            chain = _hull_pass(o, g, ledger)
        except BudgetExceeded:
            ledger.passes.append(
                {
                    "guess": g,
                    "qmax_calls": ledger.qmax_calls - mark[0],
                    "qlp_calls": ledger.qlp_calls - mark[1],
                    "exceeded": True,
                }
            )
            g = min(2 * g, n)
            continue
        ledger.passes.append(
            {
                "guess": g,
                "qmax_calls": ledger.qmax_calls - mark[0],
                "qlp_calls": ledger.qlp_calls - mark[1],
                "exceeded": False,
            }
        )
        return chain, ledger


def quantum_full_hull(o: SortedPointSet, mode: SimMode = ANALYTIC) -> list[Point]:
    """Closed clockwise hull polygon: upper chain, then the lower chain
    obtained by re-running the upper-hull algorithm on the y-negated
    point set.  The negated oracle's classical queries are folded back
    into the original oracle's counter."""
    from .oracle import load

    upper, _ = quantum_upper_hull(o, mode)
    pts = [o.query(i) for i in range(o.n)]
    neg = load([Point(p.x, -p.y) for p in pts], require_distinct_x=True)
    lower_neg, _ = quantum_upper_hull(neg, mode)
    o.classical_query_count += neg.classical_query_count
    lower = [Point(p.x, -p.y) for p in lower_neg]
    rev = list(reversed(lower))
    return list(upper.points) + rev[1:-1]


def _wrap_cmp(cur: Point, dx: int, dy: int):
    """Clockwise ranking of candidate directions around cur.

    Candidates are classed by their rotation from the incoming direction
    (straight ahead, right side, directly behind, left side) and ordered
    within a side by pairwise orientation; parallel candidates rank
    farther-first.  Smaller clockwise rotation ranks higher, so the
    maximum is the next clockwise hull vertex.
    """

    def klass(wx: int, wy: int) -> int:
        side = dx * wy - dy * wx
        if side == 0:
            return 0 if dx * wx + dy * wy > 0 else 2
        return 1 if side < 0 else 3

    def cmp(u: Point, v: Point) -> int:
        if u == v:
            return 0
        ux, uy = u.x - cur.x, u.y - cur.y
        vx, vy = v.x - cur.x, v.y - cur.y
        ku, kv = klass(ux, uy), klass(vx, vy)
        if ku != kv:
            return 1 if ku < kv else -1
        s = ux * vy - uy * vx
        if s != 0:
            return 1 if s < 0 else -1
        du = ux * ux + uy * uy
        dv = vx * vx + vy * vy
        return (du > dv) - (du < dv)

    return cmp


def quantum_jarvis_full(
    o: SortedPointSet, mode: SimMode = ANALYTIC
) -> tuple[list[Point], CostLedger]:
    """Gift-wrapping over the whole set with one simulated Grover search
    per hull vertex; the comparative baseline for the scaling runs."""
    if o.n < 3:
        raise ValueError("quantum_jarvis_full needs n >= 3")
    ledger = CostLedger(mode=mode)
    view = qprep(o, 0, 1, ledger)
    start = o.query(0)
    poly = [start]
    cur = start
    dx, dy = 0, 1  # synthetic upward incoming edge at the start vertex
    while True:
        key = cmp_to_key(_wrap_cmp(cur, dx, dy))
        q = qmax(view, lambda p, c=cur: p != c, key, ledger)
        if q == start:
            return poly, ledger
        poly.append(q)
        dx, dy = q.x - cur.x, q.y - cur.y
        cur = q
