"""Sparse ear decompositions grown from a cycle C, disjoint-cycle extraction
on their cubic skeleton, and the appendage pack-or-hit step.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .graph import CyclePos, Graph, bfs, is_induced_cycle, shortest_path
from .holes import HoleCertificate, PreconditionError, extend_path_to_long_hole, is_induced_path

MIN_EAR = 6


@dataclass
class EarDecomposition:
    """``C`` plus ears ``P_1..P_l``; each ear is stored as ``p_0 .. p_m`` with
    ``p_0`` on C and ``p_m`` on the earlier structure."""

    base: CyclePos
    ears: list[tuple[int, ...]] = field(default_factory=list)
    adj: dict[int, set[int]] = field(default_factory=dict)

    @classmethod
    def from_cycle(cls, c: CyclePos) -> "EarDecomposition":
        adj = {v: set() for v in c.seq}
        for a, b in zip(c.seq, c.seq[1:] + c.seq[:1]):
            adj[a].add(b)
            adj[b].add(a)
        return cls(c, [], adj)

    @property
    def vertices(self) -> set[int]:
        return set(self.adj)

    @property
    def B(self) -> frozenset[int]:
        return frozenset(v for v, nb in self.adj.items() if len(nb) == 3)

    def degree(self, v: int) -> int:
        return len(self.adj.get(v, ()))

    def add_ear(self, ear: Sequence[int]) -> None:
        for a, b in zip(ear, ear[1:]):
            self.adj.setdefault(a, set()).add(b)
            self.adj.setdefault(b, set()).add(a)
        self.ears.append(tuple(ear))

    def edges(self) -> set[tuple[int, int]]:
        return {(a, b) for a, nb in self.adj.items() for b in nb if a < b}


@dataclass(frozen=True)
class _Candidate:
    key: tuple
    ear: tuple[int, ...]


def _p4_paths(g: Graph, starts: Iterable[int], forbidden: set[int], far: set[int]):
    """Induced paths ``p1 p2 p3 p4`` with ``p1`` in ``starts``, ``p1`` outside
    ``forbidden`` and ``p2, p3, p4`` outside ``far``; lexicographic order."""
    adj = g.adj
    for p1 in sorted(starts):
        if p1 in forbidden:
            continue
        for p2 in sorted(adj[p1]):
            if p2 in far:
                continue
            for p3 in sorted(adj[p2]):
                if p3 in far or p3 == p1 or p3 in adj[p1]:
                    continue
                for p4 in sorted(adj[p3]):
                    if p4 in far or p4 in (p1, p2) or p4 in adj[p1] or p4 in adj[p2]:
                        continue
                    yield p1, p2, p3, p4


def _ear_candidates(g: Graph, ed: EarDecomposition, to_cycle: bool):
    """Candidates ``p0 p1 p2 p3 p4 Q`` ending on C (``to_cycle``) or on the
    rest of H, shortest first then by ``(p0, p1, p2, p3, p4, p_m)``."""
    hv = ed.vertices
    near_h = g.closed_nbhd(hv)
    cset = ed.base.vertex_set
    free = {v for v in hv if len(ed.adj[v]) == 2}
    free_c = free & cset
    targets = sorted(free_c if to_cycle else free - cset)
    if not targets or not free_c:
        return None
    starts = {p1 for v in free_c for p1 in g.adj[v]}
    best: _Candidate | None = None
    for p1, p2, p3, p4 in _p4_paths(g, starts, hv, near_h):
        p0s = sorted(v for v in g.adj[p1] if v in free_c)
        # p4 itself lies in N[p3]; only p_m and p4 are exempt from blocking
        blocked = (hv | g.closed_nbhd((p1, p2, p3))) - {p4}
        limit = (best.key[1] if best else g.n + 5) - 5
        if limit < 0:
            continue
        d = bfs(g, [p4], blocked, limit)
        for pm in targets:
            ends = [d[z] for z in g.adj[pm] if z in d]
            if not ends:
                continue
            m = 5 + min(ends)
            p0 = next((x for x in p0s if x != pm), None)
            if p0 is None:
                continue
            key = (-(1 + to_cycle), m, (p0, p1, p2, p3, p4, pm))
            if best is not None and key >= best.key:
                continue
            q = shortest_path(g, p4, pm, blocked)
            best = _Candidate(key, (p0, p1, p2, p3) + tuple(q))
    return best


def find_extension(g: Graph, ed: EarDecomposition) -> tuple[int, ...] | None:
    """The next ear of a good decomposition: most C-vertices, then shortest,
    then lexicographically least ``(p0, p1, p2, p3, p4, p_m)``."""
    for to_cycle in (True, False):
        cand = _ear_candidates(g, ed, to_cycle)
        if cand is not None:
            return cand.ear
    return None


def build_ear_decomposition(g: Graph, c: CyclePos) -> EarDecomposition:
    check = is_induced_cycle(g, c.seq, 4)
    if not check:
        raise PreconditionError(f"base cycle is not an induced cycle ({check.reason})")
    ed = EarDecomposition.from_cycle(c)
    while True:
        ear = find_extension(g, ed)
        if ear is None:
            return ed
        ed.add_ear(ear)


def validate_ear_decomposition(g: Graph, ed: EarDecomposition, check_maximal: bool = True) -> list[str]:
    """Independent check of the decomposition conditions; returns the
    problems found (empty when valid)."""
    problems: list[str] = []
    c = ed.base
    if not is_induced_cycle(g, c.seq, 4):
        problems.append("base is not an induced cycle")
    seen = set(c.seq)
    adj: dict[int, set[int]] = {v: set() for v in c.seq}
    for a, b in zip(c.seq, c.seq[1:] + c.seq[:1]):
        adj[a].add(b)
        adj[b].add(a)
    for i, ear in enumerate(ed.ears, start=1):
        p0, pm = ear[0], ear[-1]
        if p0 not in c:
            problems.append(f"ear {i}: p0={p0} not on C")
        if len(ear) - 1 < MIN_EAR:
            problems.append(f"ear {i}: length {len(ear) - 1} < {MIN_EAR}")
        if pm not in seen or pm == p0:
            problems.append(f"ear {i}: end {pm} not on earlier structure")
        inner = ear[1:-1]
        if any(v in seen for v in inner) or len(set(ear)) != len(ear):
            problems.append(f"ear {i}: interior meets earlier structure")
        if any(not g.has_edge(a, b) for a, b in zip(ear, ear[1:])):
            problems.append(f"ear {i}: not a path of G")
        if not is_induced_path(g, inner):
            problems.append(f"ear {i}: interior is not induced")
        for v in ear[2:5]:
            if g.adj[v] & seen:
                problems.append(f"ear {i}: p_j={v} sees earlier structure")
        for a, b in zip(ear, ear[1:]):
            adj.setdefault(a, set()).add(b)
            adj.setdefault(b, set()).add(a)
        seen.update(ear)
    if any(len(nb) > 3 for nb in adj.values()):
        problems.append("H has a vertex of degree above 3")
    if adj != ed.adj:
        problems.append("stored H does not match its ears")
    if check_maximal and not problems and find_extension(g, ed) is not None:
        problems.append("decomposition is not maximal")
    return problems


# -- cubic skeleton ----------------------------------------------------------


@dataclass
class SuppressedCubic:
    """Multigraph on the degree-3 vertices of a subcubic graph after tails
    are pruned; each edge carries its vertex path ``a .. b`` in the host."""

    nodes: list[int]
    edges: list[tuple[int, int, tuple[int, ...]]]
    free_cycles: list[tuple[int, ...]]

    @classmethod
    def of(cls, adj: dict[int, set[int]]) -> "SuppressedCubic":
        adj = {v: set(nb) for v, nb in adj.items()}
        stack = [v for v, nb in adj.items() if len(nb) <= 1]
        while stack:
            v = stack.pop()
            if v not in adj:
                continue
            for w in adj.pop(v):
                adj[w].discard(v)
                if len(adj[w]) <= 1:
                    stack.append(w)
        if any(len(nb) > 3 for nb in adj.values()):
            raise ValueError("host graph must have maximum degree 3")
        nodes = sorted(v for v, nb in adj.items() if len(nb) == 3)
        node_set = set(nodes)
        edges = []
        used: set[tuple[int, int]] = set()
        for a in nodes:
            for first in sorted(adj[a]):
                if (a, first) in used:
                    continue
                path = [a, first]
                prev, cur = a, first
                while cur not in node_set:
                    cur, prev = next(w for w in sorted(adj[cur]) if w != prev), cur
                    path.append(cur)
                used.add((a, path[1]))
                used.add((cur, path[-2]))
                edges.append((a, cur, tuple(path)))
        covered = set(node_set)
        for _, _, p in edges:
            covered.update(p)
        free = []
        for s in sorted(adj):
            if s in covered:
                continue
            cyc = [s]
            prev, cur = None, s
            while True:
                nxt = min(w for w in adj[cur] if w != prev)
                if nxt == s:
                    break
                cyc.append(nxt)
                prev, cur = cur, nxt
            covered.update(cyc)
            free.append(tuple(cyc))
        return cls(nodes, edges, free)

    def shortest_cycle(self) -> tuple[int, ...] | None:
        """A shortest cycle by number of multigraph edges, as a host vertex cycle."""
        best: tuple[int, list[int]] | None = None
        for idx, (a, b, _) in enumerate(self.edges):
            if a == b:
                return self._walk([idx], a)
        inc: dict[int, list[tuple[int, int]]] = {v: [] for v in self.nodes}
        for idx, (a, b, _) in enumerate(self.edges):
            inc[a].append((idx, b))
            inc[b].append((idx, a))
        for root in self.nodes:
            depth = {root: 0}
            via: dict[int, tuple[int, int]] = {}
            queue = deque([root])
            while queue:
                u = queue.popleft()
                if best is not None and 2 * depth[u] + 1 >= best[0]:
                    break
                for idx, w in inc[u]:
                    if via.get(u, (None,))[0] == idx:
                        continue
                    if w not in depth:
                        depth[w] = depth[u] + 1
                        via[w] = (idx, u)
                        queue.append(w)
                        continue
                    length = depth[u] + depth[w] + 1
                    if best is not None and length >= best[0]:
                        continue
                    left, right = self._trace(via, u), self._trace(via, w)
                    if set(left[1]) & set(right[1]) - {root}:
                        continue
                    best = (length, left[0] + [idx] + right[0][::-1])
                    best_root = root
        if best is None:
            return None
        return self._walk(best[1], best_root)

    @staticmethod
    def _trace(via, v):
        ids, verts = [], [v]
        while v in via:
            idx, v = via[v]
            ids.append(idx)
            verts.append(v)
        return ids[::-1], verts

    def _walk(self, ids: list[int], start: int) -> tuple[int, ...]:
        out = []
        cur = start
        for idx in ids:
            a, b, path = self.edges[idx]
            seq = list(path) if a == cur else list(path[::-1])
            out.extend(seq[:-1])
            cur = seq[-1]
        return tuple(out)


def _host_adj(h) -> dict[int, set[int]]:
    if isinstance(h, EarDecomposition):
        return h.adj
    if isinstance(h, Graph):
        return {v: set(h.adj[v]) for v in range(h.n)}
    return {v: set(nb) for v, nb in h.items()}


@dataclass(frozen=True)
class CyclePacking:
    status: str  # "ok", "below-threshold" or "stalled"
    cycles: tuple[tuple[int, ...], ...]
    skeleton_size: int

    @property
    def ok(self) -> bool:
        return self.status == "ok"


def extract_disjoint_cycles(h, k: int, s_fn: Callable[[int], float]) -> CyclePacking:
    """``k`` vertex-disjoint cycles of a subcubic graph whose cubic skeleton
    has at least ``s_fn(k)`` vertices, by repeatedly deleting a shortest
    skeleton cycle. A shortfall is reported as ``stalled``."""
    adj = {v: set(nb) for v, nb in _host_adj(h).items()}
    skel = SuppressedCubic.of(adj)
    size = len(skel.nodes)
    if size < s_fn(k):
        return CyclePacking("below-threshold", (), size)
    found: list[tuple[int, ...]] = []
    while len(found) < k:
        if skel.free_cycles:
            cyc = skel.free_cycles[0]
        else:
            cyc = skel.shortest_cycle()
            if cyc is None:
                return CyclePacking("stalled", tuple(found), size)
        found.append(cyc)
        for v in cyc:
            for w in adj.pop(v):
                if w in adj:
                    adj[w].discard(v)
        skel = SuppressedCubic.of(adj)
    return CyclePacking("ok", tuple(found), size)


def is_cycle_of(adj: dict[int, set[int]], cyc: Sequence[int]) -> bool:
    return (
        len(cyc) >= 3
        and len(set(cyc)) == len(cyc)
        and all(b in adj.get(a, ()) for a, b in zip(cyc, tuple(cyc[1:]) + (cyc[0],)))
    )


class HoleExtractionError(RuntimeError):
    pass


def cycle_to_long_hole(g: Graph, ed: EarDecomposition, f: Sequence[int]) -> HoleCertificate:
    """A long hole inside ``G[V(f)]`` for a cycle ``f`` of the decomposition."""
    fs = set(f)
    if fs == ed.base.vertex_set:
        return HoleCertificate.of(ed.base.seq)
    last = max((i for i, ear in enumerate(ed.ears) if fs.intersection(ear[1:-1])), default=None)
    if last is None:
        raise HoleExtractionError("cycle uses no ear interior yet differs from C")
    ear = ed.ears[last]
    sub = g.induced(fs)
    seed = sub.lower(ear[1:6])
    hole = extend_path_to_long_hole(sub.graph, seed)
    if hole is None:
        raise HoleExtractionError(f"ear {last + 1} seed does not close inside the cycle")
    return hole.lift(sub.orig)


# -- appendages --------------------------------------------------------------


@dataclass(frozen=True)
class Appendage:
    """Cycle ``v0 v1 .. vn v0`` with tip ``v0``."""

    cycle: tuple[int, ...]

    @property
    def tip(self) -> int:
        return self.cycle[0]


def _appendage_at(g: Graph, ed: EarDecomposition, v: int) -> Appendage | None:
    hv = ed.vertices
    near_h = g.closed_nbhd(hv)
    outside = sorted(w for w in g.adj[v] if w not in hv)
    if len(outside) < 2:
        return None
    for p1, p2, p3, p4 in _p4_paths(g, outside, hv, near_h):
        path_set = (p1, p2, p3, p4)
        # p_m may touch p4 (shortest appendage); p1..p3 must stay induced
        pms = [
            pm for pm in outside
            if pm not in path_set and not any(pm in g.adj[p] for p in (p1, p2, p3))
        ]
        if not pms:
            continue
        blocked = (hv | g.closed_nbhd((p1, p2, p3))) - {p4}
        d = bfs(g, [p4], blocked)
        for pm in pms:
            if pm in d:
                q = shortest_path(g, p4, pm, blocked)
                return Appendage((v, p1, p2, p3) + tuple(q))
    return None


def validate_appendage(g: Graph, ed: EarDecomposition, app: Appendage) -> list[str]:
    problems = []
    cyc = app.cycle
    v0, rest = cyc[0], cyc[1:]
    hv = ed.vertices
    if len(rest) < 5:
        problems.append("fewer than five non-tip vertices")
    if v0 not in ed.base or v0 in ed.B:
        problems.append("tip is not a non-branching vertex of C")
    if set(cyc) & hv != {v0} or len(set(cyc)) != len(cyc):
        problems.append("cycle meets H outside its tip")
    if any(not g.has_edge(a, b) for a, b in zip(cyc, cyc[1:] + cyc[:1])):
        problems.append("not a cycle of G")
    if not is_induced_path(g, rest):
        problems.append("v1..vn is not an induced path")
    if any(g.adj[v] & hv for v in rest[1:4]):
        problems.append("one of v2, v3, v4 has a neighbour in H")
    return problems


def appendage_long_hole(g: Graph, app: Appendage) -> HoleCertificate:
    sub = g.induced(app.cycle)
    hole = extend_path_to_long_hole(sub.graph, sub.lower(app.cycle[1:6]))
    if hole is None:
        raise HoleExtractionError(f"appendage at tip {app.tip} holds no long hole")
    return hole.lift(sub.orig)


@dataclass(frozen=True)
class AppendageResult:
    tips: frozenset[int]
    appendages: tuple[Appendage, ...]
    packing: tuple[Appendage, ...] | None


def _spread_tips(c: CyclePos, tips: Iterable[int], sep: int, k: int) -> list[int]:
    chosen: list[int] = []
    for t in sorted(tips, key=c.pos.__getitem__):
        if all(c.dist(t, s) >= sep for s in chosen):
            chosen.append(t)
            if len(chosen) == k:
                break
    return chosen


def appendages_pack_or_hit(g: Graph, ed: EarDecomposition, k: int, profile) -> AppendageResult:
    """Every non-branching tip of C that carries an appendage; when there
    are more than ``appendage_factor * k`` of them, also ``k`` appendages
    with pairwise far-apart tips."""
    B = ed.B
    found = []
    for v in ed.base.seq:
        if v in B:
            continue
        app = _appendage_at(g, ed, v)
        if app is not None:
            found.append(app)
    tips = frozenset(a.tip for a in found)
    packing = None
    if len(tips) > profile.appendage_factor * k:
        chosen = set(_spread_tips(ed.base, tips, profile.appendage_sep, k))
        if len(chosen) == k:
            packing = tuple(a for a in found if a.tip in chosen)
    return AppendageResult(tips, tuple(found), packing)


def branching_hitter(ed: EarDecomposition, guard: int) -> frozenset[int]:
    """``N_C^guard[B on C]`` plus the branching points off C."""
    B = ed.B
    on_c = B & ed.base.vertex_set
    return frozenset(ed.base.ball(on_c, guard) | (B - on_c))
