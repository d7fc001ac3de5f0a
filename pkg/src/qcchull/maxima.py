"""Maxima-set (skyline) algorithms.

``classical_maxima`` is the divide-and-conquer baseline;
``quantum_maxima`` is the combine-and-conquer algorithm that guesses
the output size, finds each block's tallest point, prunes with the
staircase of tallest points, and completes each block with repeated
simulated Grover searches, doubling the guess whenever the budget
overflows.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from typing import Optional, Sequence

from .geom import Point, dominates, lex_less
from .oracle import DistinctXRequired, SortedPointSet, qprep
from .qsim import ANALYTIC, BudgetExceeded, CostLedger, SimMode, qmax


@dataclass(frozen=True)
class MaximaList:
    """Maxima staircase: increasing x, non-increasing y, no dominations."""

    points: tuple[Point, ...]

    def __iter__(self):
        return iter(self.points)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i):
        return self.points[i]


def _lex_key(p: Point):
    return (p.x, p.y)


def _tall_key(p: Point):
    return (p.y, p.x)


def _prune_left(left: list[Point], right: list[Point]) -> list[Point]:
    """Drop members of `left` dominated by some member of `right`.

    Both inputs are maxima staircases in lexicographic order.  Among the
    right members with x strictly greater than p.x, the best candidate
    dominator is the last member of the first strictly-greater x-group
    (y can only fall across later groups).
    """
    if not right:
        return left
    xs = [q.x for q in right]
    kept = []
    for p in left:
        i = bisect.bisect_right(xs, p.x)
        if i < len(right):
            j = bisect.bisect_right(xs, right[i].x) - 1
            if right[j].y > p.y:
                continue
        kept.append(p)
    return kept


def _maxima_of_sorted(pts: Sequence[Point]) -> list[Point]:
    n = len(pts)
    if n <= 1:
        return list(pts)
    mid = n // 2
    left = _maxima_of_sorted(pts[:mid])
    right = _maxima_of_sorted(pts[mid:])
    return _prune_left(left, right) + right


def classical_maxima(o: SortedPointSet) -> MaximaList:
    """Divide-and-conquer maxima over the (counted) whole input."""
    pts = [o.query(i) for i in range(o.n)]
    return MaximaList(tuple(_maxima_of_sorted(pts)))


def scan_maxima(points: Sequence[Point]) -> MaximaList:
    """Linear right-to-left reference scan, independent of the
    divide-and-conquer path.  Used as a cross-check oracle.

    Pre: points sorted with distinct x (with x-ties a taller same-x
    point would wrongly shadow its colleagues here; use
    ``classical_maxima`` for those).

    Domination is strict in both coordinates, so a y-tie to the right
    does not eliminate a point.
    """
    best_y: Optional[int] = None
    out: list[Point] = []
    for p in reversed(points):
        if best_y is None or p.y >= best_y:
            out.append(p)
            best_y = p.y
    return MaximaList(tuple(reversed(out)))


def complete_maxima_block(
    o: SortedPointSet,
    j: int,
    h: int,
    Tj: Point,
    Rj: Optional[Point],
    budget: int,
    ledger: CostLedger,
) -> list[Point]:
    """Emit block j's maxima in discovery order (lexicographically down).

    Each round marks the block points that are lexicographically below
    the current witness and dominated by neither the block's tallest
    point nor the witness, then takes the lexicographic maximum of the
    marked set.  Raises BudgetExceeded as soon as one more emission
    would overflow the remaining budget.
    """
    view = qprep(o, j, h, ledger)
    found: list[Point] = []
    witness = Rj
    while True:
        w = witness
        if w is None:
            f = lambda p: not dominates(Tj, p)
        else:
            f = lambda p: lex_less(p, w) and not dominates(Tj, p) and not dominates(w, p)
        q = qmax(view, f, _lex_key, ledger)
        if q is None:
            return found
        if len(found) + 1 > budget:
            raise BudgetExceeded(f"block {j}: found more than {budget} points")
        found.append(q)
        witness = q


def _maxima_pass(o: SortedPointSet, g: int, ledger: CostLedger) -> list[Point]:
    n = o.n
    size = -(-n // g)
    # Combine: tallest point of every non-empty block, then the
    # staircase of those tallest points.
    tall: list[tuple[int, Point]] = []
    for j in range(g):
        if j * size >= n:
            break
        view = qprep(o, j, g, ledger)
        t = qmax(view, lambda p: True, _tall_key, ledger)
        tall.append((j, t))
    mt = _maxima_of_sorted([t for _, t in tall])
    block_of = {t: j for j, t in tall}
    mt_blocks = [block_of[t] for t in mt]
    # Conquer each block against its right witness under a shared budget.
    remaining = g
    found: list[Point] = []
    for j, t in tall:
        k = bisect.bisect_right(mt_blocks, j)
        rj = mt[k] if k < len(mt_blocks) else None
        out = complete_maxima_block(o, j, g, t, rj, remaining, ledger)
        found.extend(out)
        remaining -= len(out)
    return found


def quantum_maxima(o: SortedPointSet, mode: SimMode = ANALYTIC) -> tuple[MaximaList, CostLedger]:
    """Combine-and-conquer maxima with output-size doubling.

    The guess starts at min(4, n) and doubles (clamped to n) whenever a
    pass finds more points than the guess allows; the ledger accumulates
    across passes and records one summary per pass.

    Requires an oracle with verified distinct x-coordinates: with tied
    x across a block boundary the tallest-point pruning can emit a
    dominated point, so unverified oracles are rejected up front.
    """
    if not o.distinct_x:
        raise DistinctXRequired(
            "load the oracle with require_distinct_x=True before quantum_maxima"
        )
    ledger = CostLedger(mode=mode)
    if o.n == 0:
        return MaximaList(()), ledger
    g = min(4, o.n)
    while True:
        mark = (ledger.qmax_calls, ledger.qlp_calls)
        try:
            found = _maxima_pass(o, g, ledger)
        except BudgetExceeded:
            ledger.passes.append(
                {
                    "guess": g,
                    "qmax_calls": ledger.qmax_calls - mark[0],
                    "qlp_calls": ledger.qlp_calls - mark[1],
                    "exceeded": True,
                }
            )
            g = min(2 * g, o.n)
            continue
        ledger.passes.append(
            {
                "guess": g,
                "qmax_calls": ledger.qmax_calls - mark[0],
                "qlp_calls": ledger.qlp_calls - mark[1],
                "exceeded": False,
            }
        )
        found.sort(key=_lex_key)
        return MaximaList(tuple(found)), ledger
