import json

import networkx as nx
import pytest

from longholes.engine import (
    HOLES,
    LONG_HOLES,
    EPOutcome,
    HypothesisError,
    InducedC4Error,
    pack_or_hit_around_cycle,
    solve,
    verify_outcome,
)
from longholes.generators import cycle_with_appendages, cycle_with_ears, disjoint_hexagons, generate
from longholes.graph import CyclePos, Graph
from longholes.holes import HoleCertificate
from longholes.profile import PAPER, toy_profile
from oracles import from_nx, to_nx

TOY = toy_profile(10)


def union(*graphs):
    h = nx.disjoint_union_all([to_nx(g) for g in graphs])
    return from_nx(h)


def cycle(n):
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def test_two_hexagons_pack_for_k2():
    out = solve(disjoint_hexagons(2), 2)
    assert out.result == "packing"
    assert sorted(h.verts for h in out.holes) == [tuple(range(6)), tuple(range(6, 12))]
    assert out.report["verification"]["ok"]


def test_two_hexagons_hit_for_k3():
    out = solve(disjoint_hexagons(2), 3)
    assert out.result == "hitting-set"
    assert out.hitting_set == frozenset(range(12))
    assert out.report["within_budget"]
    assert out.report["verification"]["ok"]


def test_five_cycle_and_k4_need_nothing():
    out = solve(union(cycle(5), from_nx(nx.complete_graph(4))), 1)
    assert out.result == "hitting-set" and out.hitting_set == frozenset()
    assert out.report["peeled"] == []


def test_holes_mode_counts_short_holes():
    g = union(cycle(4), cycle(6))
    out = solve(g, 2, HOLES)
    assert out.result == "hitting-set"
    assert len(out.hitting_set) == 10
    assert out.report["short_holes"] == 1 and out.report["short_cover"] == 4
    rest = to_nx(g)
    rest.remove_nodes_from(out.hitting_set)
    assert nx.is_chordal(rest)
    assert out.report["verification"]["ok"]


def test_holes_mode_packs_short_holes():
    out = solve(union(cycle(4), cycle(5)), 2, HOLES)
    assert out.result == "packing" and sorted(len(h) for h in out.holes) == [4, 5]


def test_chordal_graph_needs_nothing():
    g = from_nx(nx.complete_graph(5))
    for mode in (LONG_HOLES, HOLES):
        out = solve(g, 2, mode)
        assert out.hitting_set == frozenset()


def test_long_hole_mode_rejects_c4():
    with pytest.raises(InducedC4Error) as info:
        solve(cycle(4), 1)
    assert sorted(info.value.c4) == [0, 1, 2, 3]


def test_holes_mode_accepts_c4():
    out = solve(cycle(4), 1, HOLES)
    assert out.result == "packing"


def test_bad_arguments():
    with pytest.raises(ValueError):
        solve(cycle(6), 0)
    with pytest.raises(ValueError):
        solve(cycle(6), 1, "cycles")


def test_verifier_catches_missing_hole_vertex():
    g = disjoint_hexagons(2)
    bad = EPOutcome(LONG_HOLES, [HoleCertificate((0, 1, 2, 3, 4), 6), HoleCertificate(tuple(range(6, 12)), 6)])
    rep = verify_outcome(g, 2, bad)
    assert not rep["ok"]
    assert any(c["check"] == "hole-valid" for c in rep["checks"] if not c["passed"])


def test_verifier_names_shared_vertex():
    g = Graph(11, [(i, (i + 1) % 6) for i in range(6)] + [(5, 6), (6, 7), (7, 8), (8, 9), (9, 10), (10, 5)])
    holes = [HoleCertificate((0, 1, 2, 3, 4, 5), 6), HoleCertificate((5, 6, 7, 8, 9, 10), 6)]
    rep = verify_outcome(g, 2, EPOutcome(LONG_HOLES, holes))
    fails = [c for c in rep["checks"] if not c["passed"]]
    assert fails == [{"check": "disjoint", "passed": False, "shared_vertex": 5, "holes": [0, 1]}]


def test_verifier_reports_residual_witness():
    g = disjoint_hexagons(2)
    rep = verify_outcome(g, 3, EPOutcome(LONG_HOLES, None, frozenset(range(6))))
    assert not rep["ok"]
    assert rep["checks"][0]["witness"] == list(range(6, 12))


def test_verifier_needs_k_holes():
    rep = verify_outcome(disjoint_hexagons(1), 2, EPOutcome(LONG_HOLES, [HoleCertificate(tuple(range(6)), 6)]))
    assert not rep["ok"]


def test_core_audit_rejects_broken_hypotheses():
    # two hexagons: G - V(C) still has a long hole
    g = disjoint_hexagons(2)
    with pytest.raises(HypothesisError) as info:
        pack_or_hit_around_cycle(g, 1, CyclePos(range(6)), TOY)
    assert info.value.hypothesis == "G - V(C) has no long hole"
    assert info.value.witness == list(range(6, 12))
    # the default profile also insists on a cycle longer than mu_k
    with pytest.raises(HypothesisError) as info:
        pack_or_hit_around_cycle(cycle(40), 1, CyclePos(range(40)), PAPER)
    assert info.value.hypothesis == "|V(C)| > mu_k"


def test_core_on_shorter_hole_is_rejected():
    # 0..5 plus the path 10-11-12 is a 9-hole, shorter than C = 0..9
    g = Graph(13, [(i, (i + 1) % 10) for i in range(10)] + [(0, 10), (10, 11), (11, 12), (12, 5)])
    with pytest.raises(HypothesisError) as info:
        pack_or_hit_around_cycle(g, 1, CyclePos(range(10)), TOY)
    assert info.value.hypothesis == "C is a shortest long hole"
    assert len(info.value.witness) == 9


def test_core_returns_verified_hitting_set_on_bare_cycle():
    res = pack_or_hit_around_cycle(cycle(40), 2, CyclePos(range(40)), TOY)
    assert res.stage == "hitting-set"
    assert res.hitting_set and res.hitting_set <= frozenset(range(40))


def test_core_packs_appendages():
    g = cycle_with_appendages(30, 6, 30, seed=1)
    res = pack_or_hit_around_cycle(g, 2, CyclePos(range(30)), TOY)
    assert res.stage == "appendages"
    assert len(res.holes) == 2 and all(h.check(g) for h in res.holes)


def test_core_packs_ear_cycles():
    g = cycle_with_ears(80, 20, 80, seed=0)
    res = pack_or_hit_around_cycle(g, 2, CyclePos(range(80)), TOY)
    assert res.stage == "ear-cycles"
    assert len(res.holes) == 2
    assert not set(res.holes[0].verts) & set(res.holes[1].verts)


def test_driver_reaches_core_on_long_attachments():
    g = cycle_with_appendages(30, 6, 30, seed=1)
    out = solve(g, 2, LONG_HOLES, TOY)
    assert out.report["verification"]["ok"]
    assert out.result == "packing"


def test_driver_records_oracle_audit_on_small_inputs():
    out = solve(cycle(9), 1)
    assert out.report["oracle_audit"] == [{"n": 9, "agrees_with_oracle": True}]


def test_json_output_is_deterministic():
    g = generate("c4free-random", 7, n=60)
    a = solve(g, 2, LONG_HOLES, TOY).to_json()
    b = solve(g, 2, LONG_HOLES, TOY).to_json()
    assert a == b
    obj = json.loads(a)
    assert list(obj)[:5] == ["mode", "result", "holes", "hitting_set", "report"]
    back = EPOutcome.from_json_obj(obj)
    assert verify_outcome(g, 2, back)["ok"]


@pytest.mark.parametrize(
    "obj",
    [[], {"result": "packing"}, {"mode": "x", "result": "packing", "holes": [], "hitting_set": []},
     {"mode": "holes", "result": "packing", "holes": [["a"]], "hitting_set": []},
     {"mode": "holes", "result": "hitting-set", "holes": [], "hitting_set": "1"}],
)
def test_outcome_schema_errors(obj):
    with pytest.raises(ValueError):
        EPOutcome.from_json_obj(obj)
