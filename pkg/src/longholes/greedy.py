"""Greedy packings of long holes near the cycle C and the hitting sets they
leave behind: the window-based first packing, the hitter for holes avoiding
the almost-dominating set D, and the vertex-based second packing.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graph import CyclePos, Graph
from .holes import HoleCertificate, shortest_long_hole, shortest_long_hole_through
from .profile import ConstantsProfile
from .structure import BallIndex, path_components


class BoundViolation(AssertionError):
    """A size bound that holds by construction failed: a bug, never a toy-scale effect."""


def _check_bound(name: str, size: int, bound: float) -> None:
    if size > bound:
        raise BoundViolation(f"{name}: size {size} exceeds bound {bound}")


def _small_subsets(ds: Iterable[int], with_empty: bool) -> list[tuple[int, ...]]:
    ds = sorted(ds)
    out: list[tuple[int, ...]] = [()] if with_empty else []
    out += [(d,) for d in ds]
    out += list(itertools.combinations(ds, 2))
    return out


def _long_hole_in(g: Graph, verts: Iterable[int]) -> HoleCertificate | None:
    sub = g.induced(verts)
    hole = shortest_long_hole(sub.graph)
    return None if hole is None else hole.lift(sub.orig)


@dataclass
class GreedyState:
    """Bookkeeping shared by both greedy packings (round ``i`` is 1-based)."""

    cycle_alive: set[int]
    d_alive: set[int]
    removed: set[int]
    holes: list[HoleCertificate] = field(default_factory=list)

    @property
    def round(self) -> int:
        return len(self.holes) + 1

    def consistent(self, c: CyclePos, D: frozenset[int], base_removed: set[int] = frozenset()) -> bool:
        return (
            self.cycle_alive == c.vertex_set - self.removed - base_removed
            and self.d_alive == set(D) - self.removed - base_removed
        )


@dataclass(frozen=True)
class FirstPacking:
    holes: list[HoleCertificate]
    X5: frozenset[int]
    rounds: int
    removed: frozenset[int]
    v_init: int


def first_greedy_packing(
    g: Graph,
    c: CyclePos,
    D: Iterable[int],
    profile: ConstantsProfile,
    k: int | None = None,
    balls: BallIndex | None = None,
) -> FirstPacking:
    """Pack long holes living in ``A + S^3_B`` for ``A`` at most two vertices
    of D and ``B`` a window of consecutive cycle vertices.

    Pairs are scanned ``A``-major (empty set, singletons, pairs), then by
    window start along C, then by window length. A pair that fails once fails
    forever (its graph never changes, only the pool shrinks), so a single
    pass is equivalent to rescanning after every success. With ``k`` given,
    the scan stops once ``k`` holes are packed.
    """
    D = frozenset(D)
    balls = balls or BallIndex(g, c, D, profile.ball_r)
    v_init = min(c.seq)
    st = GreedyState(set(c.seq) - {v_init}, set(D), {v_init})
    w = profile.window_B
    m = len(c)

    def window(start: int) -> list[int]:
        out = []
        for j in range(min(w, m)):
            v = c.at(start + j)
            if v not in st.cycle_alive:
                break
            out.append(v)
        return out

    for A in _small_subsets(D, with_empty=True):
        if k is not None and len(st.holes) >= k:
            break
        for start in range(m):
            if not set(A) <= st.d_alive:
                break
            if c.at(start) not in st.cycle_alive:
                continue
            full = window(start)
            base = set(A)
            if _long_hole_in(g, base | balls.union(full)) is None:
                continue
            # smallest window length from this start that already carries a hole
            lo, hi = 1, len(full)
            while lo < hi:
                mid = (lo + hi) // 2
                if _long_hole_in(g, base | balls.union(full[:mid])) is None:
                    lo = mid + 1
                else:
                    hi = mid
            B = full[:lo]
            hole = _long_hole_in(g, base | balls.union(B))
            st.holes.append(hole)
            st.d_alive -= set(A)
            clear = c.ball(B, profile.clearance_first)
            st.cycle_alive -= clear
            st.removed |= set(A) | clear
            if k is not None and len(st.holes) >= k:
                break

    rounds = len(st.holes) + 1
    on_c = st.removed & c.vertex_set
    X5 = frozenset((st.removed & D) | c.ball(on_c, profile.hit_radius_first))
    _check_bound("first packing X5", len(X5), profile.first_bound_factor * rounds)
    return FirstPacking(st.holes, X5, rounds, frozenset(st.removed), v_init)


def check_no_hole_in_ball(
    g: Graph,
    c: CyclePos,
    D: Iterable[int],
    X: Iterable[int],
    Q: Sequence[int],
    with_D: bool,
    r: int = 3,
) -> bool:
    """True iff ``G[S^r_Q (+ D)] - X`` has no long hole."""
    D = frozenset(D)
    region = BallIndex(g, c, D, r).union(Q)
    if with_D:
        region |= D
    region -= set(X)
    return _long_hole_in(g, region) is None


@dataclass(frozen=True)
class DAvoidTrace:
    component: tuple[int, ...]
    action: str
    added: int
    notes: tuple[str, ...] = ()


def _components_of(g: Graph, verts: set[int]) -> list[frozenset[int]]:
    seen: set[int] = set()
    comps = []
    for s in sorted(verts):
        if s in seen:
            continue
        comp = {s}
        stack = [s]
        while stack:
            u = stack.pop()
            for w in g.adj[u]:
                if w in verts and w not in comp:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def hit_d_avoiding(
    g: Graph,
    c: CyclePos,
    D: Iterable[int],
    X7: Iterable[int],
    profile: ConstantsProfile,
    balls: BallIndex | None = None,
) -> tuple[frozenset[int], list[DAvoidTrace]]:
    """Hitting set for long holes avoiding D, built component by component
    over ``C - X7``: short components wholesale, long ones through their
    boundary blocks plus, when the left and right tunnels differ, a strip
    ending at the last cycle vertex touching the left tunnel."""
    D = frozenset(D)
    X7 = frozenset(X7)
    balls = balls or BallIndex(g, c, D, profile.ball_r)
    b = profile.davoid_block
    S: set[int] = set()
    trace: list[DAvoidTrace] = []
    for Q in path_components(c, X7):
        if len(Q) <= profile.davoid_small:
            S.update(Q.verts)
            trace.append(DAvoidTrace(Q.verts, "small", len(Q)))
            continue
        before = len(S)
        S |= Q.bd(profile.davoid_boundary)
        M = set(Q.interior(b))
        tunnel = balls.union(M) - M
        comps = _components_of(g, tunnel)
        notes = []

        def meeting(a: Sequence[int], z: Sequence[int], side: str):
            sa, sz = balls.union(a), balls.union(z)
            hits = [F for F in comps if F & sa and F & sz]
            if len(hits) > 1:
                notes.append(f"{len(hits)} candidate {side} tunnels")
            return hits[0] if hits else None

        F_L = meeting(Q.layer_L(b, 2 * b), Q.layer_L(3 * b, 4 * b), "left")
        F_R = meeting(Q.layer_R(b, 2 * b), Q.layer_R(3 * b, 4 * b), "right")
        if F_L is None or F_R is None:
            trace.append(DAvoidTrace(Q.verts, "no-tunnel", len(S) - before, tuple(notes)))
            continue
        if F_L == F_R:
            trace.append(DAvoidTrace(Q.verts, "same-tunnel", len(S) - before, tuple(notes)))
            continue
        last = max(j for j, v in enumerate(Q.verts) if balls.of(v) & F_L)
        S.update(Q.verts[max(0, last - profile.davoid_strip):last + 1])
        trace.append(DAvoidTrace(Q.verts, "strip", len(S) - before, tuple(notes)))
    X_da = frozenset(S - X7)
    _check_bound("D-avoiding hitter", len(X_da), profile.davoid_factor * len(c.vertex_set & X7))
    return X_da, trace


@dataclass(frozen=True)
class SecondPacking:
    holes: list[HoleCertificate]
    X_tr: frozenset[int]
    rounds: int


def second_greedy_packing(
    g: Graph,
    c: CyclePos,
    D: Iterable[int],
    X_prior: Iterable[int],
    profile: ConstantsProfile,
    k: int | None = None,
) -> SecondPacking:
    """Pack long holes through a cycle vertex ``v`` whose D-part lies inside a
    nonempty ``A`` (at most two vertices of D), in ``G - X_prior``.

    Scanned ``A``-major then by cycle position; the tested graph only shrinks
    from round to round, so one pass suffices.
    """
    D = frozenset(D)
    X_prior = frozenset(X_prior)
    st = GreedyState(set(c.seq) - X_prior, set(D) - X_prior, set())
    for A in _small_subsets(st.d_alive, with_empty=False):
        if k is not None and len(st.holes) >= k:
            break
        for v in c.seq:
            if not set(A) <= st.d_alive:
                break
            if v not in st.cycle_alive:
                continue
            drop = X_prior | st.removed | (st.d_alive - set(A))
            sub = g.remove(drop)
            hole = shortest_long_hole_through(sub.graph, sub.index[v])
            if hole is None:
                continue
            st.holes.append(hole.lift(sub.orig))
            st.d_alive -= set(A)
            clear = c.ball([v], profile.second_clearance)
            st.cycle_alive -= clear
            st.removed |= set(A) | clear
            if k is not None and len(st.holes) >= k:
                break
    rounds = len(st.holes) + 1
    X_tr = frozenset(st.removed)
    _check_bound("second packing X_tr", len(X_tr), profile.second_bound_factor * rounds)
    return SecondPacking(st.holes, X_tr, rounds)
