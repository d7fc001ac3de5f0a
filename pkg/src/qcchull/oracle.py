"""The input model: a sorted point array behind a query-counting oracle.

Algorithms may only look at the input through ``query``, which counts
every read.  Block addressing follows a ceiling-division scheme so that
arbitrary (n, h) combinations are legal; the trailing block may be
short, and for very uneven splits some trailing blocks may be empty.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .geom import Point, lex_less


class OracleError(ValueError):
    """Base class for input-validation failures."""


class NotSorted(OracleError):
    def __init__(self, index: int):
        super().__init__(f"points not in lexicographic order at index {index}")
        self.index = index


class DuplicatePoint(OracleError):
    def __init__(self, index: int):
        super().__init__(f"duplicate point at index {index}")
        self.index = index


class DuplicateX(OracleError):
    def __init__(self, index: int):
        super().__init__(f"duplicate x-coordinate at index {index}")
        self.index = index


class IndexOutOfRange(IndexError):
    pass


class BadBlockIndex(OracleError):
    pass


class DistinctXRequired(OracleError):
    """An algorithm that assumes distinct x-coordinates got an oracle
    that was not loaded with require_distinct_x=True."""


@dataclass
class SortedPointSet:
    """A lexicographically sorted point array with a query counter.

    ``distinct_x`` records whether the x-coordinates were verified to be
    strictly increasing at load time (the hull algorithms require it).
    The counter is deliberately not synchronized: one run owns one
    oracle.
    """

    _points: tuple[Point, ...]
    distinct_x: bool
    classical_query_count: int = 0

    @property
    def n(self) -> int:
        return len(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def query(self, i: int) -> Point:
        """Counted access; the only way algorithms may read the input."""
        if not 0 <= i < len(self._points):
            raise IndexOutOfRange(f"index {i} out of range for n={len(self._points)}")
        self.classical_query_count += 1
        return self._points[i]

    def contents(self) -> tuple[Point, ...]:
        """Uncounted access for validation and oracle comparisons only.

        Never used by the instrumented algorithms; tests shadow the
        underlying storage to prove that.
        """
        return self._points


def load(points: Iterable[Point], require_distinct_x: bool = False) -> SortedPointSet:
    """Validate and wrap a point sequence.

    Raises NotSorted (with the first offending index), DuplicatePoint,
    or DuplicateX (only when require_distinct_x is set).
    """
    pts = tuple(points)
    for i in range(1, len(pts)):
        prev, cur = pts[i - 1], pts[i]
        if cur == prev:
            raise DuplicatePoint(i)
        if lex_less(cur, prev):
            raise NotSorted(i)
        if require_distinct_x and cur.x == prev.x:
            raise DuplicateX(i)
    return SortedPointSet(pts, distinct_x=require_distinct_x)


@dataclass(frozen=True)
class BlockView:
    """Half-open index range [lo, hi) of block j in an h-way partition."""

    source: SortedPointSet
    j: int
    h: int
    lo: int
    hi: int

    @property
    def m(self) -> int:
        return self.hi - self.lo


def qprep(o: SortedPointSet, j: int, h: int, ledger=None) -> BlockView:
    """Address block j of an h-way partition of the oracle.

    Blocks are the half-open ranges [j*ceil(n/h), (j+1)*ceil(n/h))
    clamped to [0, n).  Charges one unit of state-preparation cost to
    the ledger when one is supplied.
    """
    n = o.n
    if not (1 <= h <= n) or not (0 <= j < h):
        raise BadBlockIndex(f"bad block address j={j}, h={h} for n={n}")
    size = -(-n // h)  # ceil(n / h)
    lo = min(j * size, n)
    hi = min((j + 1) * size, n)
    if ledger is not None:
        ledger.qprep_calls += 1
    return BlockView(o, j, h, lo, hi)


# ---------------------------------------------------------------------------
# Point file format: '#' comment lines, then a count line, then one
# "x y" pair per line.  Round-trips bit-exactly.
# ---------------------------------------------------------------------------


def write_points(path, points: Sequence[Point], comments: Sequence[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        for line in comments:
            fh.write(f"# {line}\n")
        fh.write(f"{len(points)}\n")
        for p in points:
            fh.write(f"{p.x} {p.y}\n")


def read_points(path) -> list[Point]:
    with open(path, "r", encoding="utf-8") as fh:
        lines = [ln.strip() for ln in fh]
    body = [ln for ln in lines if ln and not ln.startswith("#")]
    if not body:
        raise OracleError("empty point file")
    try:
        n = int(body[0])
    except ValueError as exc:
        raise OracleError(f"bad count line: {body[0]!r}") from exc
    if len(body) - 1 != n:
        raise OracleError(f"expected {n} points, file has {len(body) - 1}")
    pts = []
    for ln in body[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise OracleError(f"bad point line: {ln!r}")
        try:
            pts.append(Point(int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise OracleError(f"bad point line: {ln!r}") from exc
    return pts
