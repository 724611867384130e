import random

from longholes.graph import CyclePos, Graph
from longholes.greedy import (
    check_no_hole_in_ball,
    first_greedy_packing,
    hit_d_avoiding,
    second_greedy_packing,
)
from longholes.profile import PAPER, toy_profile
from longholes.structure import BallIndex, classify
from oracles import random_graph, shortest_long_hole_len

TOY = toy_profile(10)


def ring(n, extra_vertices=0, extra_edges=()):
    return Graph(n + extra_vertices, [(i, (i + 1) % n) for i in range(n)] + list(extra_edges))


def hexagon_on_edge(n, anchors):
    """Cycle of length n with a hexagon glued onto each edge (a, a+1)."""
    edges = [(i, (i + 1) % n) for i in range(n)]
    nxt = n
    for a in anchors:
        x = list(range(nxt, nxt + 4))
        nxt += 4
        edges += [(a + 1, x[0]), (x[0], x[1]), (x[1], x[2]), (x[2], x[3]), (x[3], a)]
    return Graph(nxt, edges)


def test_bare_cycle_packs_nothing():
    g = ring(200)
    c = CyclePos(range(200))
    res = first_greedy_packing(g, c, set(), PAPER)
    assert res.rounds == 1 and res.holes == []
    assert res.X5 == c.ball([0], 60)
    assert len(res.X5) == 121


def test_first_packing_finds_glued_hexagons():
    g = hexagon_on_edge(200, [10, 100])
    c = CyclePos(range(200))
    res = first_greedy_packing(g, c, set(), PAPER)
    assert res.rounds == 3
    assert [len(h) for h in res.holes] == [6, 6]
    assert all(h.check(g) for h in res.holes)
    assert not set(res.holes[0].verts) & set(res.holes[1].verts)
    assert len(res.X5) <= 212 * res.rounds


def test_first_packing_stops_at_k():
    g = hexagon_on_edge(200, [10, 60, 100, 150])
    res = first_greedy_packing(g, CyclePos(range(200)), set(), PAPER, k=2)
    assert len(res.holes) == 2


def test_first_packing_toy_bound():
    g = hexagon_on_edge(60, [5, 20, 35, 50])
    res = first_greedy_packing(g, CyclePos(range(60)), set(), TOY)
    assert len(res.holes) == 4
    assert len(res.X5) <= TOY.first_bound_factor * res.rounds


def test_ball_check_trivial_cases():
    g = hexagon_on_edge(40, [10])
    c = CyclePos(range(40))
    Q = [9, 10, 11, 12]
    region = BallIndex(g, c, set()).union(Q)
    assert check_no_hole_in_ball(g, c, set(), region, Q, False)
    assert not check_no_hole_in_ball(g, c, set(), set(), Q, False)


def test_ball_check_agrees_with_oracle():
    rng = random.Random(4)
    done = 0
    while done < 40:
        base = random_graph(rng, 11, 0.25)
        # fix the cycle 0..5 as C by forcing its edges and removing its chords
        edges = {e for e in base.edges() if not (e[0] < 6 and e[1] < 6)}
        edges |= {(i, i + 1) for i in range(5)} | {(0, 5)}
        g = Graph(11, edges)
        c = CyclePos(range(6))
        D = classify(g, c).D
        Q = [0, 1, 2]
        X = {v for v in range(6, 11) if rng.random() < 0.2}
        region = (BallIndex(g, c, D).union(Q) | set(D)) - X
        sub = g.induced(region).graph
        assert check_no_hole_in_ball(g, c, D, X, Q, True) == (shortest_long_hole_len(sub) is None)
        done += 1


def test_hitter_takes_short_components_whole():
    g = ring(101)
    c = CyclePos(range(101))
    X, trace = hit_d_avoiding(g, c, set(), {0}, PAPER)
    assert X == set(range(1, 101))
    assert trace[0].action == "small"


def test_hitter_takes_only_boundaries_without_tunnels():
    g = ring(401)
    c = CyclePos(range(401))
    X, trace = hit_d_avoiding(g, c, set(), {0}, PAPER)
    assert len(X) == 320
    assert X == set(range(1, 161)) | set(range(241, 401))
    assert trace[0].action == "no-tunnel"


def test_hitter_strip_when_tunnels_differ():
    # component 1..40 of C - {0}; one tunnel near each end
    n = 41
    extra = [(3, 41), (41, 42), (42, 43), (43, 7), (38, 44), (44, 45), (45, 46), (46, 34)]
    g = ring(n, 6, extra)
    c = CyclePos(range(n))
    X, trace = hit_d_avoiding(g, c, set(), {0}, TOY)
    assert trace[0].action == "strip"
    assert set(range(2, 8)) <= X
    assert len(X) <= TOY.davoid_factor * 1


def test_hitter_same_tunnel_is_skipped():
    n = 41
    path = list(range(41, 41 + 5))
    extra = [(3, path[0])] + list(zip(path, path[1:])) + [(path[-1], 37)]
    extra += [(7, path[1]), (33, path[-2])]
    g = ring(n, 5, extra)
    _, trace = hit_d_avoiding(g, CyclePos(range(n)), set(), {0}, TOY)
    assert trace[0].action == "same-tunnel"


def test_second_packing_without_D_is_empty():
    res = second_greedy_packing(ring(30), CyclePos(range(30)), set(), set(), PAPER, 2)
    assert res.rounds == 1 and res.holes == [] and res.X_tr == set()


def test_second_packing_holes_are_valid_and_disjoint():
    # d = 12 sees 4, 5, 8, 9, 0, 1 (gaps 1 and 3); a path from d lands on 7
    edges = [(12, u) for u in (0, 1, 4, 5, 8, 9)] + [(12, 13), (13, 14), (14, 15), (15, 16), (16, 7)]
    g = ring(12, 5, edges)
    c = CyclePos(range(12))
    D = classify(g, c).D
    assert D == {12}
    res = second_greedy_packing(g, c, D, set(), PAPER, 3)
    # the first scanned cycle vertex sees C itself as its shortest long hole
    assert res.holes and res.holes[0].verts == tuple(range(12))
    used = set()
    for hole in res.holes:
        assert hole.check(g)
        assert not used & set(hole.verts)
        used |= set(hole.verts)
    assert len(res.X_tr) <= 183 * res.rounds
