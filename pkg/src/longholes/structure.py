"""Structure of a graph around a fixed induced cycle C: almost C-dominating
vertices, restricted balls around cycle vertices, boundary/interior blocks of
subpaths of C, and a check that paths between far-apart cycle vertices are long.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import CyclePos, Graph, bfs


class Tag(enum.Enum):
    DOMINATING = "almost-dominating"
    CONSECUTIVE = "consecutive"
    NO_C_NEIGHBOR = "no-c-neighbor"


@dataclass(frozen=True)
class DomClassification:
    tags: dict[int, Tag]
    consecutive: dict[int, tuple[int, ...]]
    dominating: frozenset[int]
    violations: tuple[int, ...] = ()

    @property
    def D(self) -> frozenset[int]:
        return self.dominating


def _arc_gaps(c: CyclePos, nbrs: Sequence[int]) -> list[int]:
    idx = sorted(c.pos[u] for u in nbrs)
    m = len(c)
    return [(idx[(i + 1) % len(idx)] - idx[i]) % m or m for i in range(len(idx))]


def is_almost_dominating(c: CyclePos, nbrs: Sequence[int]) -> bool:
    """C-neighbours, read in cyclic order, leave gaps of 1 or 3 only
    (the wrap-around gap included)."""
    return len(nbrs) >= 2 and all(gap in (1, 3) for gap in _arc_gaps(c, nbrs))


def _consecutive_run(c: CyclePos, nbrs: Sequence[int]) -> tuple[int, ...] | None:
    if not 1 <= len(nbrs) <= 3:
        return None
    if len(nbrs) == len(c):
        return None
    gaps = _arc_gaps(c, nbrs)
    # a run of t vertices has t-1 unit gaps and one long wrap gap
    if len(nbrs) > 1 and sorted(gaps)[:-1] != [1] * (len(nbrs) - 1):
        return None
    idx = sorted(c.pos[u] for u in nbrs)
    m = len(c)
    start = idx[0]
    for i in range(len(idx)):
        if (idx[i] - idx[i - 1]) % m != 1:
            start = idx[i]
    return tuple(c.at(start + j) for j in range(len(nbrs)))


def classify(g: Graph, c: CyclePos) -> DomClassification:
    """Tag every vertex off C as almost dominating, consecutive (at most three
    consecutive C-neighbours) or C-free; anything else is a violation."""
    cset = c.vertex_set
    tags: dict[int, Tag] = {}
    runs: dict[int, tuple[int, ...]] = {}
    dom: set[int] = set()
    bad: list[int] = []
    for v in range(g.n):
        if v in cset:
            continue
        nbrs = [u for u in g.adj[v] if u in cset]
        if not nbrs:
            tags[v] = Tag.NO_C_NEIGHBOR
        elif is_almost_dominating(c, nbrs):
            tags[v] = Tag.DOMINATING
            dom.add(v)
        else:
            run = _consecutive_run(c, nbrs)
            if run is None:
                bad.append(v)
            else:
                tags[v] = Tag.CONSECUTIVE
                runs[v] = run
    return DomClassification(tags, runs, frozenset(dom), tuple(bad))


def check_D_clique(g: Graph, D: Iterable[int]) -> tuple[bool, tuple[int, int] | None]:
    ds = sorted(D)
    for i, a in enumerate(ds):
        for b in ds[i + 1:]:
            if not g.has_edge(a, b):
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class RestrictedBall:
    origin: frozenset[int]
    radius: int
    members: frozenset[int]


class BallIndex:
    """Per-vertex restricted balls around cycle vertices, computed lazily.

    The ball around ``v`` lives in ``G - (D + (V(C) - v))``.
    """

    def __init__(self, g: Graph, c: CyclePos, D: Iterable[int], r: int = 3):
        self.g = g
        self.c = c
        self.r = r
        self._blocked = frozenset(D) | c.vertex_set
        self._cache: dict[int, frozenset[int]] = {}

    def of(self, v: int) -> frozenset[int]:
        got = self._cache.get(v)
        if got is None:
            if v not in self.c:
                raise ValueError(f"{v} is not a cycle vertex")
            got = frozenset(bfs(self.g, [v], self._blocked - {v}, self.r))
            self._cache[v] = got
        return got

    def union(self, xs: Iterable[int]) -> set[int]:
        out: set[int] = set()
        for v in xs:
            out |= self.of(v)
        return out


def restricted_ball(g: Graph, c: CyclePos, D: Iterable[int], X: Iterable[int], r: int) -> RestrictedBall:
    X = frozenset(X)
    if not X <= c.vertex_set:
        raise ValueError("ball origins must lie on the cycle")
    idx = BallIndex(g, c, D, r)
    return RestrictedBall(X, r, frozenset(idx.union(sorted(X))))


@dataclass(frozen=True)
class ArcCoords:
    """A subpath of C in the cycle's orientation, left end first."""

    verts: tuple[int, ...]

    def _check(self, i: int) -> None:
        if i < 1:
            raise ValueError("block size must be at least 1")

    def bd_L(self, i: int) -> tuple[int, ...]:
        self._check(i)
        return self.verts[:i]

    def bd_R(self, i: int) -> tuple[int, ...]:
        self._check(i)
        return self.verts[-i:]

    def bd(self, i: int) -> frozenset[int]:
        return frozenset(self.bd_L(i)) | frozenset(self.bd_R(i))

    def interior(self, i: int) -> tuple[int, ...]:
        self._check(i)
        return self.verts[i:len(self.verts) - i]

    def layer_L(self, lo: int, hi: int) -> tuple[int, ...]:
        """``bd^hi_L - bd^lo_L``."""
        return self.verts[lo:hi]

    def layer_R(self, lo: int, hi: int) -> tuple[int, ...]:
        n = len(self.verts)
        return self.verts[max(n - hi, 0):max(n - lo, 0)]

    def __len__(self) -> int:
        return len(self.verts)


def arc_coords(c: CyclePos, q: Sequence[int]) -> ArcCoords:
    q = tuple(q)
    if not q or len(q) > len(c):
        raise ValueError("subpath must be a nonempty proper part of the cycle")
    for a, b in zip(q, q[1:]):
        if a not in c or c.succ(a) != b:
            raise ValueError("vertices do not follow the cycle orientation")
    if q[-1] not in c:
        raise ValueError(f"{q[-1]} is not on the cycle")
    return ArcCoords(q)


def path_components(c: CyclePos, removed: Iterable[int]) -> list[ArcCoords]:
    """Components of ``C - removed`` as oriented subpaths; at least one cycle
    vertex must be removed."""
    removed = set(removed) & c.vertex_set
    if not removed:
        raise ValueError("C minus nothing is a cycle, not a union of paths")
    m = len(c)
    start = c.pos[min(removed, key=c.pos.__getitem__)]
    out: list[ArcCoords] = []
    run: list[int] = []
    for j in range(1, m + 1):
        v = c.at(start + j)
        if v in removed:
            if run:
                out.append(ArcCoords(tuple(run)))
                run = []
        else:
            run.append(v)
    if run:
        out.append(ArcCoords(tuple(run)))
    return out


def far_ends_force_long_path(g: Graph, c: CyclePos, D: Iterable[int], p: Sequence[int], m: int) -> bool:
    """Whether a path ``p`` in ``G - D`` with ends on C obeys: cycle-distance
    of the ends at least ``4m`` forces length at least ``m + 3``."""
    D = set(D)
    if p[0] not in c or p[-1] not in c:
        raise ValueError("path ends must lie on the cycle")
    if D.intersection(p):
        raise ValueError("path must avoid D")
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            raise ValueError(f"({a}, {b}) is not an edge")
    return c.dist(p[0], p[-1]) < 4 * m or len(p) - 1 >= m + 3
