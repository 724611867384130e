"""Finding holes: extension of an induced path to the shortest
long hole through it, shortest long holes globally or through a vertex,
short (4/5) holes, and a brute-force oracle for tiny graphs.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

from .graph import Graph, bfs, find_induced_c4, is_induced_cycle, shortest_path

LONG = 6
ORACLE_MAX_N = 14


class PreconditionError(ValueError):
    pass


def canonical_cycle(seq: Sequence[int]) -> tuple[int, ...]:
    """Rotate to start at the smallest vertex; orient so the second vertex
    is the smaller of its two cycle neighbours."""
    seq = list(seq)
    i = seq.index(min(seq))
    rot = seq[i:] + seq[:i]
    if len(rot) > 2 and rot[-1] < rot[1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


@dataclass(frozen=True)
class HoleCertificate:
    verts: tuple[int, ...]
    claimed_min_len: int = LONG

    @classmethod
    def of(cls, seq: Iterable[int], min_len: int = LONG) -> "HoleCertificate":
        return cls(canonical_cycle(list(seq)), min_len)

    def __len__(self) -> int:
        return len(self.verts)

    @property
    def key(self) -> tuple:
        return (len(self.verts), self.verts)

    def check(self, g: Graph):
        return is_induced_cycle(g, self.verts, self.claimed_min_len)

    def lift(self, orig: Sequence[int]) -> "HoleCertificate":
        """Translate to host ids of an induced subgraph."""
        return HoleCertificate.of((orig[v] for v in self.verts), self.claimed_min_len)


def _better(a: HoleCertificate | None, b: HoleCertificate | None) -> HoleCertificate | None:
    if a is None:
        return b
    if b is None:
        return a
    return a if a.key <= b.key else b


def is_induced_path(g: Graph, q: Sequence[int]) -> bool:
    if len(set(q)) != len(q):
        return False
    where = {v: i for i, v in enumerate(q)}
    for i, v in enumerate(q):
        if i + 1 < len(q) and not g.has_edge(v, q[i + 1]):
            return False
        for w in g.adj[v]:
            j = where.get(w)
            if j is not None and abs(i - j) != 1:
                return False
    return True


def extend_path_to_long_hole(g: Graph, q: Sequence[int]) -> HoleCertificate | None:
    """Shortest long hole containing the induced path ``q`` (length >= 4).

    Closes ``q`` with a shortest path between its ends that avoids the
    closed neighbourhood of the interior of ``q``.
    """
    q = list(q)
    if len(q) < 5 or not is_induced_path(g, q):
        raise PreconditionError("q must be an induced path of length at least 4")
    u, v = q[0], q[-1]
    blocked = g.closed_nbhd(q[1:-1]) - {u, v}
    path = shortest_path(g, v, u, blocked)
    if path is None:
        return None
    return HoleCertificate.of(q + path[1:-1])


def _triple_candidates(
    g: Graph,
    x3: int,
    x2: int,
    x4: int,
    floor: int,
    best: HoleCertificate | None,
) -> HoleCertificate | None:
    """Best long hole containing an induced P5 ``x1 x2 x3 x4 x5`` using only
    vertices ``>= floor`` (all vertices when ``floor`` is 0)."""
    adj = g.adj
    r = adj[x2] | adj[x3] | adj[x4] | {x2, x3, x4}
    near3 = adj[x3] | {x3}
    ones = [x1 for x1 in sorted(adj[x2]) if x1 >= floor and x1 not in near3 and x1 not in adj[x4] and x1 != x4]
    if not ones:
        return best
    fives = [x5 for x5 in sorted(adj[x4]) if x5 >= floor and x5 not in near3 and x5 not in adj[x2] and x5 != x2]
    if not fives:
        return best
    blocked = r
    for x1 in ones:
        targets = [x5 for x5 in fives if x5 != x1 and x5 not in adj[x1]]
        if not targets:
            continue
        # hole length = 6 + distance inside the unblocked region
        limit = len(best) - LONG if best is not None else g.n
        if limit < 0:
            return best
        starts = [w for w in adj[x1] if w not in blocked]
        d = bfs(g, starts, blocked, limit, floor)
        for x5 in targets:
            ends = [(d[z], z) for z in adj[x5] if z in d]
            if not ends:
                continue
            dz, z = min(ends)
            if best is not None and LONG + dz > len(best):
                continue
            inner = shortest_path(g, x1, z, blocked, floor)
            cand = HoleCertificate.of([x5, x4, x3, x2] + inner)
            best = _better(best, cand)
    return best


def _scan_min_vertex(g: Graph, lo: int, hi: int, best: HoleCertificate | None = None):
    adj = g.adj
    for m in range(lo, hi):
        nb = sorted(w for w in adj[m] if w > m)
        for i, x2 in enumerate(nb):
            for x4 in nb[i + 1:]:
                if x4 in adj[x2]:
                    continue
                best = _triple_candidates(g, m, x2, x4, m, best)
    return best


def _scan_chunk(args):
    g, lo, hi = args
    return _scan_min_vertex(g, lo, hi)


def shortest_long_hole(g: Graph, jobs: int = 1) -> HoleCertificate | None:
    """A shortest long hole, or ``None``.

    Every long hole is found from the induced P5 centred at its smallest
    vertex, so the search around centre ``m`` may ignore vertices below ``m``.
    Ties go to the smallest canonical sequence among the candidates built.
    """
    if jobs <= 1 or g.n < 64:
        return _scan_min_vertex(g, 0, g.n)
    bounds = [round(i * g.n / (4 * jobs)) for i in range(4 * jobs + 1)]
    chunks = [(g, a, b) for a, b in zip(bounds, bounds[1:]) if a < b]
    best = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for res in pool.map(_scan_chunk, chunks):
            best = _better(best, res)
    return best


def has_long_hole(g: Graph) -> bool:
    return shortest_long_hole(g) is not None


def shortest_long_hole_through(g: Graph, v: int) -> HoleCertificate | None:
    """Shortest long hole containing ``v`` (via induced P5s centred at ``v``)."""
    if not 0 <= v < g.n:
        raise IndexError("vertex out of range")
    adj = g.adj
    best = None
    nb = sorted(adj[v])
    for i, x2 in enumerate(nb):
        for x4 in nb[i + 1:]:
            if x4 not in adj[x2]:
                best = _triple_candidates(g, v, x2, x4, 0, best)
    return best


def find_hole_4_or_5(g: Graph) -> HoleCertificate | None:
    """An induced C4 if there is one, otherwise an induced C5, otherwise ``None``."""
    c4 = find_induced_c4(g)
    if c4 is not None:
        return HoleCertificate.of(c4, 4)
    c5 = _find_c5(g)
    return None if c5 is None else HoleCertificate.of(c5, 4)


def _find_c5(g: Graph) -> tuple[int, ...] | None:
    adj = g.adj
    # e with nonadjacent neighbours a, d joined by an induced path a-b-c-d off N[e]
    for e in range(g.n):
        ne = adj[e] | {e}
        nb = sorted(adj[e])
        for i, a in enumerate(nb):
            for d in nb[i + 1:]:
                if d in adj[a]:
                    continue
                for b in sorted(adj[a]):
                    if b in ne or b in adj[d]:
                        continue
                    for c in sorted(adj[b] & adj[d]):
                        if c not in ne and c not in adj[a]:
                            return (e, a, b, c, d)
    return None


def shortest_hole(g: Graph, min_len: int = LONG) -> HoleCertificate | None:
    """Shortest hole of length at least ``min_len`` (4, 5 or 6)."""
    if min_len >= LONG:
        return shortest_long_hole(g)
    c4 = find_induced_c4(g) if min_len <= 4 else None
    if c4 is not None:
        return HoleCertificate.of(c4, min_len)
    c5 = _find_c5(g)
    if c5 is not None:
        return HoleCertificate.of(c5, min_len)
    long_ = shortest_long_hole(g)
    return None if long_ is None else HoleCertificate(long_.verts, min_len)


# -- brute force -------------------------------------------------------------


def _masks(g: Graph) -> list[int]:
    return [sum(1 << w for w in g.adj[v]) for v in range(g.n)]


def _cycle_order(g: Graph, verts: Sequence[int]) -> list[int]:
    vs = set(verts)
    start = min(vs)
    order = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in g.adj[cur] if w in vs and w != prev)
        if nxt == start:
            return order
        order.append(nxt)
        prev, cur = cur, nxt


def iter_holes_bruteforce(g: Graph, min_len: int = LONG, max_len: int | None = None) -> Iterator[HoleCertificate]:
    """Every hole with ``min_len <= length <= max_len``, by subset enumeration,
    in order of increasing length."""
    if g.n > ORACLE_MAX_N:
        raise ValueError(f"brute force refuses graphs with more than {ORACLE_MAX_N} vertices")
    masks = _masks(g)
    top = g.n if max_len is None else min(max_len, g.n)
    for size in range(max(min_len, 3), top + 1):
        for combo in itertools.combinations(range(g.n), size):
            sub = 0
            for v in combo:
                sub |= 1 << v
            if any((masks[v] & sub).bit_count() != 2 for v in combo):
                continue
            # 2-regular: a single cycle iff connected
            seen = 1 << combo[0]
            frontier = seen
            while frontier:
                grow = 0
                for v in combo:
                    if frontier >> v & 1:
                        grow |= masks[v] & sub
                frontier = grow & ~seen
                seen |= grow
            if seen == sub:
                yield HoleCertificate.of(_cycle_order(g, combo), min_len)


def oracle_shortest_long_hole(g: Graph) -> HoleCertificate | None:
    """Exact shortest long hole by enumerating vertex subsets (``n <= 14``)."""
    return next(iter_holes_bruteforce(g, LONG), None)
