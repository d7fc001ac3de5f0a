"""Hull algorithms: bridges, the block-level scan, marches, doubling."""

import math
import random

import pytest

from qcchull.geom import Point, Turn, cross, orientation
from qcchull.hull import (
    Bridge,
    HullChain,
    block_jarvis,
    bridge,
    classical_upper_hull,
    find_bridge_edges,
    monotone_chain_upper,
    monotone_full_hull,
    quantum_full_hull,
    quantum_jarvis_full,
    quantum_upper_hull,
)
from qcchull.instances import GenSpec, generate
from qcchull.oracle import DistinctXRequired, load
from qcchull.qsim import BudgetExceeded, CostLedger, EmptySide


def P(x, y):
    return Point(x, y)


def lex(p):
    return (p.x, p.y)


TRIANGLE = [P(0, 0), P(1, 5), P(2, 0)]

# 36 points in 6 blocks of 6.  The upper hull has 6 vertices; at h=6
# the block-level scan pushes bridges over blocks (0,1), (1,2), (2,3),
# then discovers that the (3,4)-side bridge turns left, pops, and
# re-spans blocks 2-4, leaving block 3 entirely under the hull.
FIG36 = [
    P(0, 0), P(1, -5), P(2, 2), P(3, 6), P(4, -3), P(5, 10),
    P(6, 15), P(7, 20), P(8, 24), P(9, 30), P(10, 25), P(11, 30),
    P(12, 28), P(13, 30), P(14, 33), P(15, 38), P(16, 31), P(17, 26),
    P(18, 32), P(19, 34), P(20, 35), P(21, 34), P(22, 30), P(23, 28),
    P(24, 30), P(25, 33), P(26, 35), P(27, 29), P(28, 26), P(29, 20),
    P(30, 18), P(31, 20), P(32, 13), P(33, 8), P(34, 2), P(35, 0),
]
FIG36_HULL = [P(0, 0), P(9, 30), P(15, 38), P(26, 35), P(31, 20), P(35, 0)]

# 9 points in 3 blocks of 3; the middle block's hull stretch is the
# single interior vertex (5,3).
NINE = [P(0, 9), P(1, 1), P(2, 1), P(4, 0), P(5, 3), P(6, 0),
        P(7, 1), P(8, 1), P(9, 9)]


def check_upper_chain(chain: HullChain, pts):
    out = list(chain)
    assert out[0] == min(pts, key=lex)
    assert out[-1] == max(pts, key=lex)
    for a, b in zip(out, out[1:]):
        assert a.x < b.x
    for a, b, c in zip(out, out[1:], out[2:]):
        assert orientation(a, b, c) is Turn.RIGHT  # strictly convex


def random_distinct_x(rng, n, shape=None):
    shape = shape or rng.choice(["uniform", "arc", "parabola", "flat", "steps"])
    xs = sorted(rng.sample(range(-2 * n - 50, 2 * n + 50), n))
    if shape == "uniform":
        return [P(x, rng.randint(-100, 100)) for x in xs]
    if shape == "arc":
        return [P(x, -(x * x) // 8 + rng.randint(0, 40)) for x in xs]
    if shape == "parabola":
        return [P(x, -x * x) for x in xs]
    if shape == "flat":
        return [P(x, rng.randint(0, 2)) for x in xs]
    return [P(x, (x // 7) * 5 + rng.randint(0, 3)) for x in xs]


# ----------------------------------------------------- classical baselines


def test_monotone_examples():
    assert list(monotone_chain_upper(TRIANGLE)) == TRIANGLE
    coll = [P(i, 2 * i) for i in range(4)]
    assert list(monotone_chain_upper(coll)) == [P(0, 0), P(3, 6)]
    par = [P(i, -i * i) for i in range(8)]
    assert list(monotone_chain_upper(par)) == par


def test_classical_upper_hull_examples():
    assert list(classical_upper_hull(load(TRIANGLE, require_distinct_x=True))) == TRIANGLE
    coll = load([P(i, 2 * i) for i in range(4)], require_distinct_x=True)
    assert list(classical_upper_hull(coll)) == [P(0, 0), P(3, 6)]
    par = load([P(i, -i * i) for i in range(8)], require_distinct_x=True)
    assert list(classical_upper_hull(par)) == [P(i, -i * i) for i in range(8)]


def test_classical_upper_hull_requires_distinct_x():
    with pytest.raises(DistinctXRequired):
        classical_upper_hull(load(TRIANGLE))


def test_classical_equals_monotone():
    rng = random.Random(2201)
    for _ in range(200):
        n = rng.randint(1, 120)
        pts = random_distinct_x(rng, n)
        got = classical_upper_hull(load(pts, require_distinct_x=True))
        assert list(got) == list(monotone_chain_upper(pts))
        check_upper_chain(got, pts)


def test_monotone_full_hull_is_closed_clockwise():
    pts = sorted([P(0, 0), P(1, 2), P(3, 1), P(2, -1)], key=lex)
    assert monotone_full_hull(pts) == [P(0, 0), P(1, 2), P(3, 1), P(2, -1)]


# --------------------------------------------------------------------- bridge


def test_bridge_singletons():
    o = load([P(0, 0), P(1, 0)], require_distinct_x=True)
    b = bridge(o, 0, 1, 2, CostLedger())
    assert (b.left, b.right, b.left_block, b.right_block) == (P(0, 0), P(1, 0), 0, 1)


def test_bridge_parabola():
    o = load([P(0, 0), P(1, -1), P(2, -4), P(3, -9)], require_distinct_x=True)
    b = bridge(o, 0, 1, 2, CostLedger())
    assert (b.left, b.right) == (P(1, -1), P(2, -4))


def test_bridge_flat_top():
    o = load([P(0, 0), P(1, 5), P(2, 5), P(3, 0)], require_distinct_x=True)
    b = bridge(o, 0, 1, 2, CostLedger())
    assert (b.left, b.right) == (P(1, 5), P(2, 5))


def test_bridge_charges_two_boundary_queries():
    pts = [P(0, 0), P(1, 5), P(2, 5), P(3, 0)]
    o = load(pts, require_distinct_x=True)
    bridge(o, 0, 1, 2, CostLedger())
    # m block reads inside the LP plus exactly 2 boundary lookups.
    assert o.classical_query_count == len(pts) + 2


def test_bridge_empty_block():
    o = load([P(0, 0), P(1, 1), P(2, 2), P(3, 3), P(4, 4)], require_distinct_x=True)
    with pytest.raises(EmptySide):
        bridge(o, 2, 3, 4, CostLedger())  # block 3 of ceil-division 5/4 is empty


# ----------------------------------------------------------- find_bridge_edges


def test_find_bridge_edges_h2_is_single_bridge():
    rng = random.Random(2202)
    for _ in range(50):
        pts = random_distinct_x(rng, rng.randint(2, 60))
        o = load(pts, require_distinct_x=True)
        bs = find_bridge_edges(o, 2, CostLedger())
        assert len(bs) == 1
        assert (bs[0].left_block, bs[0].right_block) == (0, 1)


def test_find_bridge_edges_rejects_h1():
    o = load(TRIANGLE, require_distinct_x=True)
    with pytest.raises(ValueError):
        find_bridge_edges(o, 1, CostLedger())


def test_find_bridge_edges_block_figure():
    o = load(FIG36, require_distinct_x=True)
    ledger = CostLedger()
    bs = find_bridge_edges(o, 6, ledger)
    assert [(b.left_block, b.right_block) for b in bs] == [(0, 1), (1, 2), (2, 4), (4, 5)]
    # block 3 lies entirely below the hull: no bridge touches it
    assert all(3 not in (b.left_block, b.right_block) for b in bs)
    # 5 adjacent bridges plus exactly one pop-triggered recomputation
    assert ledger.qlp_calls == 6
    hull_edges = set(zip(FIG36_HULL, FIG36_HULL[1:]))
    for b in bs:
        assert (b.left, b.right) in hull_edges


def test_find_bridge_edges_subset_of_hull_edges():
    rng = random.Random(2203)
    for _ in range(150):
        n = rng.randint(2, 150)
        pts = random_distinct_x(rng, n)
        o = load(pts, require_distinct_x=True)
        h = rng.randint(2, n)
        ledger = CostLedger()
        bs = find_bridge_edges(o, h, ledger)
        chain = list(monotone_chain_upper(pts))
        edges = set(zip(chain, chain[1:]))
        for b in bs:
            assert (b.left, b.right) in edges
            assert b.left.x < b.right.x
            assert b.left_block < b.right_block
            for p in pts:
                assert orientation(b.left, b.right, p) is not Turn.LEFT
        # bridges come back x-ordered with each block popped at most once
        for b1, b2 in zip(bs, bs[1:]):
            assert b1.right_block <= b2.left_block
        h_eff = len([j for j in range(h) if j * (-(-n // h)) < n])
        assert ledger.qlp_calls <= 2 * (h_eff - 1)


# ----------------------------------------------------------------block_jarvis


def test_block_jarvis_marches_middle_block():
    o = load(NINE, require_distinct_x=True)
    B = [Bridge(P(0, 9), P(4, 0), 0, 1), Bridge(P(6, 0), P(9, 9), 1, 2)]
    ledger = CostLedger()
    out = block_jarvis(o, 1, 3, B, budget=3, ledger=ledger)
    assert out == [P(5, 3)]
    assert ledger.qmax_calls == 2  # one hit, one exit-detecting search


def test_block_jarvis_budget():
    o = load(NINE, require_distinct_x=True)
    B = [Bridge(P(0, 9), P(4, 0), 0, 1), Bridge(P(6, 0), P(9, 9), 1, 2)]
    with pytest.raises(BudgetExceeded):
        block_jarvis(o, 1, 3, B, budget=0, ledger=CostLedger())


def test_block_jarvis_meeting_point_is_free():
    # Two bridges meet at the single hull point of block 2: the march
    # returns empty without a single search.
    o = load([P(0, 0), P(1, 3), P(2, 4), P(3, 3), P(4, 0)], require_distinct_x=True)
    B = [Bridge(P(0, 0), P(2, 4), 0, 2), Bridge(P(2, 4), P(4, 0), 2, 4)]
    ledger = CostLedger()
    assert block_jarvis(o, 2, 5, B, budget=5, ledger=ledger) == []
    assert ledger.qmax_calls == 0
    assert ledger.qprep_calls == 0


def test_block_jarvis_spanned_block_is_free():
    # The chord over block 1 clears its points: no endpoint hosted, no
    # work done.
    o = load(NINE, require_distinct_x=True)
    B = [Bridge(P(0, 9), P(9, 9), 0, 2)]
    ledger = CostLedger()
    assert block_jarvis(o, 1, 3, B, budget=5, ledger=ledger) == []
    assert ledger.qmax_calls == 0


# ---------------------------------------------------------- quantum_upper_hull


def test_quantum_upper_hull_block_figure():
    o = load(FIG36, require_distinct_x=True)
    chain, ledger = quantum_upper_hull(o)
    assert list(chain) == FIG36_HULL
    assert [(p["guess"], p["exceeded"]) for p in ledger.passes] == [(4, True), (8, False)]


def test_quantum_upper_hull_concave_arc_runs_all_guesses():
    o = generate(GenSpec(kind="circle", n=64, seed=3))
    pts = o.contents()
    chain, ledger = quantum_upper_hull(o)
    assert list(chain) == list(pts)  # everything sits on the upper hull
    assert [p["guess"] for p in ledger.passes] == [4, 8, 16, 32, 64]
    assert ledger.passes[-1]["exceeded"] is False


def test_quantum_upper_hull_collinear_staircase_first_guess():
    pts = [P(i, 100 - 5 * i) for i in range(20)]
    o = load(pts, require_distinct_x=True)
    chain, ledger = quantum_upper_hull(o)
    assert list(chain) == [P(0, 100), P(19, 5)]
    assert [p["guess"] for p in ledger.passes] == [4]


def test_quantum_upper_hull_convex_descent_first_guess():
    pts = [P(i, (i - 20) * (i - 20)) for i in range(20)]
    o = load(pts, require_distinct_x=True)
    chain, ledger = quantum_upper_hull(o)
    assert list(chain) == [P(0, 400), P(19, 1)]
    assert [p["guess"] for p in ledger.passes] == [4]


def test_quantum_upper_hull_tiny_inputs():
    assert list(quantum_upper_hull(load([], require_distinct_x=True))[0]) == []
    one = load([P(5, 5)], require_distinct_x=True)
    assert list(quantum_upper_hull(one)[0]) == [P(5, 5)]
    # n <= 4 goes straight to the reference scan and records no passes:
    four = load([P(0, 0), P(1, 7), P(2, 7), P(3, 0)], require_distinct_x=True)
    chain, ledger = quantum_upper_hull(four)
    assert list(chain) == [P(0, 0), P(1, 7), P(2, 7), P(3, 0)]
    assert ledger.passes == []


def test_quantum_upper_hull_requires_distinct_x():
    with pytest.raises(DistinctXRequired):
        quantum_upper_hull(load(TRIANGLE))


def test_quantum_upper_hull_equals_monotone():
    rng = random.Random(2204)
    for _ in range(250):
        n = rng.randint(1, 300)
        pts = random_distinct_x(rng, n)
        o = load(pts, require_distinct_x=True)
        chain, ledger = quantum_upper_hull(o)
        assert list(chain) == list(monotone_chain_upper(pts))
        check_upper_chain(chain, pts)
        h_true = len(chain)
        if n <= 4:
            assert ledger.passes == []  # direct scan, no doubling
            continue
        assert ledger.passes[-1]["guess"] < 2 * max(4, h_true)
        for p in ledger.passes:
            assert p["qlp_calls"] <= 2 * (p["guess"] - 1)
        bound = max(1, math.ceil(math.log2(max(h_true, 4))) - 1)
        assert len(ledger.passes) <= bound


def test_quantum_upper_hull_final_pass_call_budget():
    # On the successful pass, marches spend one search per found vertex
    # plus one exit detection per marching block; bridges spend at most
    # 2(h-1) LP calls.  Checked against a replay of the bridge scan.
    rng = random.Random(2205)
    for _ in range(60):
        n = rng.randint(5, 200)
        pts = random_distinct_x(rng, n)
        o = load(pts, require_distinct_x=True)
        chain, ledger = quantum_upper_hull(o)
        final = ledger.passes[-1]
        g = final["guess"]
        replay = find_bridge_edges(load(pts, require_distinct_x=True), g, CostLedger())
        hosting = {b.left_block for b in replay} | {b.right_block for b in replay}
        size = -(-n // g)
        hosting |= {0, -(-n // size) - 1}
        assert final["qmax_calls"] <= len(chain) + len(hosting)


# ----------------------------------------------------------- quantum_full_hull


def test_quantum_full_hull_triangle():
    o = load(TRIANGLE, require_distinct_x=True)
    assert quantum_full_hull(o) == [P(0, 0), P(1, 5), P(2, 0)]


def test_quantum_full_hull_square():
    # A tilted square; corners listed clockwise from the leftmost.
    pts = sorted([P(0, 0), P(1, 2), P(3, 1), P(2, -1)], key=lex)
    o = load(pts, require_distinct_x=True)
    assert quantum_full_hull(o) == [P(0, 0), P(1, 2), P(3, 1), P(2, -1)]


def test_quantum_full_hull_disk():
    o = generate(GenSpec(kind="disk", n=256, seed=11))
    got = quantum_full_hull(o)
    assert got == monotone_full_hull(o.contents())


def test_quantum_full_hull_random():
    rng = random.Random(2206)
    for _ in range(100):
        n = rng.randint(1, 150)
        pts = random_distinct_x(rng, n)
        o = load(pts, require_distinct_x=True)
        assert quantum_full_hull(o) == monotone_full_hull(pts)


# --------------------------------------------------------- quantum_jarvis_full


def test_jarvis_triangle():
    o = load(TRIANGLE, require_distinct_x=True)
    poly, ledger = quantum_jarvis_full(o)
    assert poly == [P(0, 0), P(1, 5), P(2, 0)]
    assert ledger.qmax_calls == 3  # one wrap step per hull vertex


def test_jarvis_circle_charge():
    o = generate(GenSpec(kind="circle", n=64, seed=3))
    poly, ledger = quantum_jarvis_full(o)
    assert len(poly) == 64
    assert ledger.qmax_calls == 64
    assert ledger.sqrt_units == 64 * 8  # 64 searches at ceil(sqrt(64)) each


def test_jarvis_collinear_degenerates_to_segment():
    o = load([P(i, 3 * i) for i in range(5)], require_distinct_x=True)
    poly, _ = quantum_jarvis_full(o)
    assert poly == [P(0, 0), P(4, 12)]


def test_jarvis_needs_three_points():
    with pytest.raises(ValueError):
        quantum_jarvis_full(load([P(0, 0), P(1, 1)], require_distinct_x=True))


def test_jarvis_equals_reference():
    rng = random.Random(2207)
    for _ in range(150):
        n = rng.randint(3, 200)
        pts = random_distinct_x(rng, n)
        o = load(pts, require_distinct_x=True)
        poly, ledger = quantum_jarvis_full(o)
        assert poly == monotone_full_hull(pts)
        assert ledger.qmax_calls == len(poly)
