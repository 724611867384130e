import pytest

from longholes.generators import c4free_random
from longholes.graph import CyclePos, Graph
from longholes.holes import shortest_long_hole
from longholes.structure import (
    BallIndex,
    Tag,
    arc_coords,
    check_D_clique,
    far_ends_force_long_path,
    classify,
    is_almost_dominating,
    path_components,
    restricted_ball,
)


def cycle_plus(n, extra):
    """Cycle 0..n-1 plus vertex n joined to ``extra``."""
    return Graph(n + 1, [(i, (i + 1) % n) for i in range(n)] + [(n, u) for u in extra])


@pytest.mark.parametrize(
    "nbrs, tag",
    [((0, 3, 6), Tag.DOMINATING), ((0, 1, 4, 5, 6), Tag.DOMINATING), ((0, 1), Tag.CONSECUTIVE), ((8, 0), Tag.CONSECUTIVE),
     ((0,), Tag.CONSECUTIVE), ((0, 1, 2), Tag.CONSECUTIVE), ((), Tag.NO_C_NEIGHBOR), ((0, 4), None),
     ((0, 1, 2, 3), None), ((0, 1, 3, 4, 6, 7), None), ((0, 1, 2, 3, 4, 5, 6, 7, 8), Tag.DOMINATING)],
)
def test_classification_on_nine_cycle(nbrs, tag):
    g = cycle_plus(9, nbrs)
    c = CyclePos(range(9))
    res = classify(g, c)
    if tag is None:
        assert res.violations == (9,)
    else:
        assert res.tags[9] is tag
        assert (9 in res.D) == (tag is Tag.DOMINATING)


def test_consecutive_runs_follow_orientation():
    res = classify(cycle_plus(9, (0, 8, 7)), CyclePos(range(9)))
    assert res.consecutive[9] == (7, 8, 0)


def test_gap_rule_counts_wraparound():
    c = CyclePos(range(10))
    assert is_almost_dominating(c, [0, 1, 4, 7])  # gaps 1, 3, 3, 3
    assert not is_almost_dominating(c, [0, 3, 6])  # wrap gap is 4


def test_clique_check_reports_missing_pair():
    g = Graph(4, [(0, 1), (1, 2), (0, 2)])
    assert check_D_clique(g, [0, 1, 2]) == (True, None)
    assert check_D_clique(g, [0, 1, 3]) == (False, (0, 3))


def test_restricted_ball_avoids_other_cycle_vertices_and_D():
    # cycle 0..7, pendant path 2-8-9-10-11, and 12 hanging off 2 but placed in D
    edges = [(i, (i + 1) % 8) for i in range(8)] + [(2, 8), (8, 9), (9, 10), (10, 11), (2, 12)]
    g = Graph(13, edges)
    c = CyclePos(range(8))
    balls = BallIndex(g, c, D={12}, r=3)
    assert balls.of(2) == {2, 8, 9, 10}
    assert balls.of(0) == {0}
    assert restricted_ball(g, c, {12}, [0, 2], 3).members == {0, 2, 8, 9, 10}
    with pytest.raises(ValueError):
        balls.of(8)


def test_arc_blocks():
    q = arc_coords(CyclePos(range(20)), [18, 19, 0, 1, 2, 3, 4, 5])
    assert q.bd_L(2) == (18, 19) and q.bd_R(2) == (4, 5)
    assert q.bd(1) == {18, 5}
    assert q.interior(3) == (1, 2)
    assert q.layer_L(1, 3) == (19, 0) and q.layer_R(1, 3) == (3, 4)
    with pytest.raises(ValueError):
        q.bd_L(0)
    with pytest.raises(ValueError):
        arc_coords(CyclePos(range(20)), [3, 2])


def test_path_components():
    c = CyclePos(range(10))
    comps = path_components(c, {2, 3, 7})
    assert [q.verts for q in comps] == [(4, 5, 6), (8, 9, 0, 1)]
    assert [q.verts for q in path_components(c, {0})] == [tuple(range(1, 10))]
    with pytest.raises(ValueError):
        path_components(c, set())


def test_far_ends_force_long_path():
    g = Graph(30, [(i, (i + 1) % 30) for i in range(30)])
    c = CyclePos(range(30))
    assert far_ends_force_long_path(g, c, set(), list(range(0, 9)), 2)
    with pytest.raises(ValueError):
        far_ends_force_long_path(g, c, {3}, list(range(0, 9)), 2)


def _last_peeled(g):
    """The final shortest long hole of the peeling and the graph it lives in."""
    alive = set(range(g.n))
    last = None
    while True:
        sub = g.induced(alive)
        hole = shortest_long_hole(sub.graph)
        if hole is None:
            return last
        last = (sub.graph, hole.verts)
        alive -= set(sub.lift(hole.verts))


def test_classification_has_no_violations_under_the_hypotheses():
    # C4-free, C a shortest long hole, nothing long outside C: every vertex
    # is almost dominating, consecutive or C-free, and D is a clique
    seen = 0
    for seed in range(40):
        g = c4free_random(40, 4.0 / 39, seed)
        got = _last_peeled(g)
        if got is None:
            continue
        h, verts = got
        res = classify(h, CyclePos(verts))
        assert res.violations == ()
        assert check_D_clique(h, res.D)[0]
        seen += 1
    assert seen >= 20
