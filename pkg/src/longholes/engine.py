"""Pack-or-hit drivers.

``pack_or_hit_around_cycle`` handles one shortest long hole C with nothing
long outside it; ``solve_long_holes`` peels shortest long holes and calls it
from the last cycle backwards; ``solve_holes`` first packs 4- and 5-holes.
Every outcome is re-checked by ``verify_outcome``, which only uses the
hole-finder primitives.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any, Sequence

from .ears import (
    appendage_long_hole,
    appendages_pack_or_hit,
    branching_hitter,
    build_ear_decomposition,
    cycle_to_long_hole,
    extract_disjoint_cycles,
)
from .graph import CyclePos, Graph, find_induced_c4, is_induced_cycle
from .greedy import (
    check_no_hole_in_ball,
    first_greedy_packing,
    hit_d_avoiding,
    second_greedy_packing,
)
from .holes import (
    HoleCertificate,
    PreconditionError,
    find_hole_4_or_5,
    oracle_shortest_long_hole,
    shortest_long_hole,
)
from .profile import PAPER, ConstantsProfile
from .structure import BallIndex, check_D_clique, classify, path_components

LONG_HOLES = "long-holes"
HOLES = "holes"
MIN_LEN = {LONG_HOLES: 6, HOLES: 4}
ORACLE_AUDIT_N = 11


class HypothesisError(PreconditionError):
    """A structural hypothesis of the core step failed; ``hypothesis`` names it."""

    def __init__(self, hypothesis: str, detail: str = "", witness: Any = None):
        self.hypothesis = hypothesis
        self.witness = witness
        super().__init__(f"{hypothesis}: {detail}" if detail else hypothesis)


class InducedC4Error(PreconditionError):
    def __init__(self, c4: Sequence[int]):
        self.c4 = tuple(c4)
        super().__init__(f"graph contains an induced C4: {list(self.c4)}")


@dataclass
class EPOutcome:
    mode: str
    holes: list[HoleCertificate] | None = None
    hitting_set: frozenset[int] | None = None
    report: dict = field(default_factory=dict)

    @property
    def result(self) -> str:
        return "packing" if self.holes is not None else "hitting-set"

    def to_json_obj(self) -> dict:
        holes = sorted(h.verts for h in self.holes) if self.holes is not None else []
        return {
            "mode": self.mode,
            "result": self.result,
            "holes": [list(h) for h in holes],
            "hitting_set": sorted(self.hitting_set) if self.hitting_set is not None else [],
            "report": self.report,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj(), indent=2) + "\n"

    @classmethod
    def from_json_obj(cls, obj: dict) -> "EPOutcome":
        if not isinstance(obj, dict) or list(obj)[:4] != ["mode", "result", "holes", "hitting_set"]:
            raise ValueError("outcome must start with mode, result, holes, hitting_set")
        mode, result = obj["mode"], obj["result"]
        if mode not in MIN_LEN or result not in ("packing", "hitting-set"):
            raise ValueError("bad mode or result")
        holes = obj["holes"]
        hs = obj["hitting_set"]
        if not isinstance(holes, list) or not isinstance(hs, list):
            raise ValueError("holes and hitting_set must be lists")
        if not all(isinstance(h, list) and all(isinstance(v, int) for v in h) for h in holes):
            raise ValueError("each hole must be a list of integers")
        if not all(isinstance(v, int) for v in hs):
            raise ValueError("hitting_set must list integers")
        ml = MIN_LEN[mode]
        if result == "packing":
            return cls(mode, [HoleCertificate(tuple(h), ml) for h in holes], None, obj.get("report", {}))
        return cls(mode, None, frozenset(hs), obj.get("report", {}))


# -- verification ------------------------------------------------------------


def verify_outcome(g: Graph, k: int, out: EPOutcome) -> dict:
    """Re-check a claimed outcome; returns a report whose ``ok`` says it all."""
    ml = MIN_LEN[out.mode]
    rep: dict = {"ok": True, "checks": []}

    def fail(what: str, **info):
        rep["ok"] = False
        rep["checks"].append({"check": what, "passed": False, **info})

    def passed(what: str, **info):
        rep["checks"].append({"check": what, "passed": True, **info})

    if out.holes is not None:
        if len(out.holes) < k:
            fail("hole-count", found=len(out.holes), needed=k)
        else:
            passed("hole-count", found=len(out.holes))
        owner: dict[int, int] = {}
        for i, h in enumerate(out.holes):
            res = is_induced_cycle(g, h.verts, ml)
            if not res:
                fail("hole-valid", index=i, reason=res.reason)
            for v in h.verts:
                if v in owner and owner[v] != i:
                    fail("disjoint", shared_vertex=v, holes=[owner[v], i])
                owner.setdefault(v, i)
        if rep["ok"]:
            passed("holes-valid-and-disjoint")
    else:
        X = out.hitting_set or frozenset()
        if any(not 0 <= v < g.n for v in X):
            fail("hitting-set-range")
            return rep
        rest = g.remove(X)
        witness = None
        if out.mode == HOLES:
            witness = find_hole_4_or_5(rest.graph)
        if witness is None:
            witness = shortest_long_hole(rest.graph)
        if witness is not None:
            fail("residual-hole", witness=list(witness.lift(rest.orig).verts))
        else:
            passed("residual-hole-free", size=len(X))
    return rep


# -- core step ---------------------------------------------------------------


def _audit_hypotheses(g: Graph, c: CyclePos, k: int, profile: ConstantsProfile) -> None:
    c4 = find_induced_c4(g)
    if c4 is not None:
        raise HypothesisError("C4-free", "graph has an induced C4", list(c4))
    check = is_induced_cycle(g, c.seq, 6)
    if not check:
        raise HypothesisError("C is a long hole", check.reason)
    best = shortest_long_hole(g)
    if best is not None and len(best) < len(c):
        raise HypothesisError("C is a shortest long hole", f"shorter hole of length {len(best)}", list(best.verts))
    rest = g.remove(c.seq)
    outside = shortest_long_hole(rest.graph)
    if outside is not None:
        raise HypothesisError("G - V(C) has no long hole", "", list(outside.lift(rest.orig).verts))
    if profile.is_paper and len(c) <= profile.mu(k):
        raise HypothesisError("|V(C)| > mu_k", f"{len(c)} <= {profile.mu(k)}")


@dataclass
class CoreResult:
    holes: list[HoleCertificate] | None
    hitting_set: frozenset[int] | None
    stage: str
    sizes: dict[str, int]
    notes: list[str]


def _disjoint_valid(g: Graph, holes: Sequence[HoleCertificate]) -> bool:
    seen: set[int] = set()
    for h in holes:
        if not h.check(g) or seen.intersection(h.verts):
            return False
        seen.update(h.verts)
    return True


def pack_or_hit_around_cycle(
    g: Graph,
    k: int,
    c: CyclePos,
    profile: ConstantsProfile = PAPER,
    audit: bool = True,
) -> CoreResult:
    """``k`` disjoint long holes, or a set hitting every long hole, given a
    shortest long hole ``c`` such that ``G - V(C)`` has no long hole.

    Stages: first greedy packing, ear decomposition (cycle packing when
    branchy), appendages, the D-avoiding hitter, second greedy packing.
    A packing is only returned when its holes check out; otherwise the stage
    is noted and the run continues towards a hitting set.
    """
    if audit:
        _audit_hypotheses(g, c, k, profile)
    cls = classify(g, c)
    if cls.violations:
        raise HypothesisError("vertex classification", "vertices with scattered C-neighbours", list(cls.violations))
    D = cls.D
    ok, pair = check_D_clique(g, D)
    if not ok:
        raise HypothesisError("D is a clique", "", list(pair))
    notes: list[str] = []
    sizes: dict[str, int] = {}
    balls = BallIndex(g, c, D, profile.ball_r)

    def packed(stage: str, holes: Sequence[HoleCertificate]) -> CoreResult | None:
        holes = list(holes)[:k]
        if len(holes) == k and _disjoint_valid(g, holes):
            return CoreResult(holes, None, stage, sizes, notes)
        notes.append(f"{stage}: packing did not verify")
        return None

    first = first_greedy_packing(g, c, D, profile, k, balls)
    sizes["X5"] = len(first.X5)
    sizes["first_rounds"] = first.rounds
    if len(first.holes) >= k and (res := packed("first-packing", first.holes)):
        return res
    if audit and profile.is_paper:
        _audit_first_packing(g, c, D, first.X5, profile)

    ed = build_ear_decomposition(g, c)
    B = ed.B
    sizes["branching"] = len(B)
    if len(B) >= profile.s(k):
        cp = extract_disjoint_cycles(ed, k, profile.s)
        if cp.ok:
            holes = [cycle_to_long_hole(g, ed, f) for f in cp.cycles]
            if res := packed("ear-cycles", holes):
                return res
        else:
            notes.append(f"cycle extraction {cp.status}")
    X6 = branching_hitter(ed, profile.ear_guard)
    sizes["X6"] = len(X6)

    apps = appendages_pack_or_hit(g, ed, k, profile)
    if apps.packing is not None and (res := packed("appendages", [appendage_long_hole(g, a) for a in apps.packing])):
        return res
    X_app = apps.tips
    sizes["X_app"] = len(X_app)
    if len(X_app) > profile.appendage_factor * k and apps.packing is None:
        notes.append("appendage tips could not be spread")

    X7 = first.X5 | X6 | X_app
    X_da, _ = hit_d_avoiding(g, c, D, X7, profile, balls)
    sizes["C_in_X7"] = len(X7 & c.vertex_set)
    sizes["X_da"] = len(X_da)

    second = second_greedy_packing(g, c, D, X7 | X_da, profile, k)
    sizes["X_tr"] = len(second.X_tr)
    sizes["second_rounds"] = second.rounds
    if len(second.holes) >= k and (res := packed("second-packing", second.holes)):
        return res
    X = frozenset(X7 | X_da | second.X_tr)
    sizes["X"] = len(X)
    return CoreResult(None, X, "hitting-set", sizes, notes)


def _audit_first_packing(g, c, D, X5, profile) -> None:
    """No long hole of ``G - X5`` sits in a window ball plus D, nor in the
    ball of a component of ``C - X5``."""
    w = min(profile.window_B, len(c))
    for start in range(len(c)):
        Q = [c.at(start + j) for j in range(w)]
        if not check_no_hole_in_ball(g, c, D, X5, Q, True, profile.ball_r):
            raise HypothesisError("window balls are hole-free after the first packing", witness=Q[:1])
    for Q in path_components(c, X5):
        if not check_no_hole_in_ball(g, c, D, X5, Q.verts, False, profile.ball_r):
            raise HypothesisError("component balls are hole-free after the first packing", witness=Q.verts[:1])


# -- drivers -----------------------------------------------------------------


def _budget_regime(profile: ConstantsProfile) -> str:
    if profile.is_paper:
        return "paper"
    if profile.budget is not None:
        return "fixed-budget"
    return "toy"


def solve_long_holes(g: Graph, k: int, profile: ConstantsProfile = PAPER, jobs: int = 1) -> EPOutcome:
    """Peel shortest long holes ``C_1, C_2, ...``; with ``k`` of them, pack.
    Otherwise walk back from the last one, adding either ``V(C_j)`` (short
    cycles) or the core step's hitting set, each verified before use."""
    if k < 1:
        raise ValueError("k must be positive")
    c4 = find_induced_c4(g)
    if c4 is not None:
        raise InducedC4Error(c4)
    peeled: list[tuple[int, ...]] = []
    alive = set(range(g.n))
    audit = []
    while len(peeled) < k:
        sub = g.induced(alive)
        hole = shortest_long_hole(sub.graph, jobs=jobs)
        if sub.graph.n <= ORACLE_AUDIT_N:
            ref = oracle_shortest_long_hole(sub.graph)
            same = (ref is None) == (hole is None) and (hole is None or len(ref) == len(hole))
            audit.append({"n": sub.graph.n, "agrees_with_oracle": same})
            if not same:
                raise RuntimeError("peeling disagrees with the brute-force oracle")
        if hole is None:
            break
        lifted = hole.lift(sub.orig)
        peeled.append(lifted.verts)
        alive -= set(lifted.verts)
    report: dict = {
        "k": k,
        "profile": profile.name,
        "bound_regime": _budget_regime(profile),
        "peeled": [len(c) for c in peeled],
        "mu_k": profile.mu(k),
        "oracle_audit": audit,
        "fallbacks": [],
        "core_calls": [],
    }
    if len(peeled) >= k:
        holes = [HoleCertificate.of(c) for c in peeled[:k]]
        return _finish(g, k, EPOutcome(LONG_HOLES, holes, None, report))

    X: set[int] = set()
    remaining = set(alive)  # V(G_{l+1})
    for j in range(len(peeled) - 1, -1, -1):
        cj = peeled[j]
        remaining |= set(cj)
        if len(cj) <= profile.mu(k):
            X |= set(cj)
            continue
        sub = g.induced(remaining - X)
        c_sub = CyclePos(sub.lower(cj), sub.graph)
        entry = {"cycle": j + 1, "length": len(cj)}
        try:
            res = pack_or_hit_around_cycle(sub.graph, k, c_sub, profile, audit=True)
        except PreconditionError as exc:
            entry["error"] = str(exc)
            res = None
        if res is not None:
            entry.update(stage=res.stage, sizes=res.sizes, notes=res.notes)
        report["core_calls"].append(entry)
        if res is not None and res.holes is not None:
            holes = [h.lift(sub.orig) for h in res.holes]
            if _disjoint_valid(g, holes):
                report["core_packing_from_cycle"] = j + 1
                return _finish(g, k, EPOutcome(LONG_HOLES, holes, None, report))
            report["fallbacks"].append({"cycle": j + 1, "reason": "packing-invalid"})
        if res is not None and res.hitting_set is not None:
            cand = set(sub.lift(res.hitting_set))
            residual = sub.graph.remove(res.hitting_set)
            if shortest_long_hole(residual.graph) is None and len(cand) <= len(cj):
                X |= cand
                continue
            reason = "residual-hole" if len(cand) <= len(cj) else "larger-than-cycle"
            report["fallbacks"].append({"cycle": j + 1, "reason": reason})
        elif res is None:
            report["fallbacks"].append({"cycle": j + 1, "reason": "precondition"})
        X |= set(cj)
    budget = (k - 1) * profile.mu(k)
    report["budget"] = budget
    report["within_budget"] = len(X) <= budget
    return _finish(g, k, EPOutcome(LONG_HOLES, None, frozenset(X), report))


def solve_holes(g: Graph, k: int, profile: ConstantsProfile = PAPER, jobs: int = 1) -> EPOutcome:
    """Holes of length at least 4: pack 4/5-holes to maximality, then run the
    long-hole driver on what is left."""
    if k < 1:
        raise ValueError("k must be positive")
    short: list[HoleCertificate] = []
    alive = set(range(g.n))
    while len(short) < k:
        sub = g.induced(alive)
        h = find_hole_4_or_5(sub.graph)
        if h is None:
            break
        h = h.lift(sub.orig)
        short.append(h)
        alive -= set(h.verts)
    if len(short) >= k:
        report = {"k": k, "profile": profile.name, "bound_regime": _budget_regime(profile), "short_holes": len(short)}
        return _finish(g, k, EPOutcome(HOLES, short[:k], None, report))
    U = set(range(g.n)) - alive
    rest = g.induced(alive)
    inner = solve_long_holes(rest.graph, k, profile, jobs)
    report = {
        "k": k,
        "profile": profile.name,
        "bound_regime": _budget_regime(profile),
        "short_holes": len(short),
        "short_cover": len(U),
        "long_holes": inner.report,
    }
    if inner.holes is not None:
        holes = [HoleCertificate(h.lift(rest.orig).verts, 4) for h in inner.holes]
        return _finish(g, k, EPOutcome(HOLES, holes, None, report))
    X = U | set(rest.lift(inner.hitting_set))
    budget = 5 * (k - 1) + (k - 1) * profile.mu(k)
    report["budget"] = budget
    report["within_budget"] = len(X) <= budget
    return _finish(g, k, EPOutcome(HOLES, None, frozenset(X), report))


def _finish(g: Graph, k: int, out: EPOutcome) -> EPOutcome:
    if out.holes is not None:
        out.holes = [HoleCertificate.of(h.verts, MIN_LEN[out.mode]) for h in out.holes]
    out.report["verification"] = verify_outcome(g, k, out)
    return out


def solve(g: Graph, k: int, mode: str = LONG_HOLES, profile: ConstantsProfile = PAPER, jobs: int = 1) -> EPOutcome:
    if mode == LONG_HOLES:
        return solve_long_holes(g, k, profile, jobs)
    if mode == HOLES:
        return solve_holes(g, k, profile, jobs)
    raise ValueError(f"unknown mode {mode!r}")
