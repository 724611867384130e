"""Simple undirected graphs on dense integer vertices, plus the elementary
queries every other module builds on (BFS distances, balls, cycle
coordinates, induced-cycle checks, induced C4 search).
"""

from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphFormatError(ValueError):
    """Malformed edge-list or JSON graph input."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj", "_m")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        self.n = n
        self.adj: tuple[frozenset[int], ...] = tuple(frozenset(s) for s in nbrs)
        self._m = sum(len(s) for s in nbrs) // 2

    @property
    def num_edges(self) -> int:
        return self._m

    def vertices(self) -> range:
        return range(self.n)

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def edges(self) -> list[tuple[int, int]]:
        """All edges as ``(u, v)`` with ``u < v``, sorted."""
        return sorted((u, v) for u in range(self.n) for v in self.adj[u] if u < v)

    def closed_nbhd(self, vs: Iterable[int]) -> set[int]:
        out = set(vs)
        for v in list(out):
            out |= self.adj[v]
        return out

    def induced(self, keep: Iterable[int]) -> "Induced":
        """Induced subgraph on ``keep``; new ids follow the sorted order of ``keep``."""
        orig = tuple(sorted(set(keep)))
        index = {v: i for i, v in enumerate(orig)}
        edges = []
        for i, v in enumerate(orig):
            for w in self.adj[v]:
                j = index.get(w)
                if j is not None and i < j:
                    edges.append((i, j))
        return Induced(Graph(len(orig), edges), orig, index)

    def remove(self, drop: Iterable[int]) -> "Induced":
        drop = set(drop)
        return self.induced(v for v in range(self.n) if v not in drop)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self._m})"


@dataclass(frozen=True)
class Induced:
    """An induced subgraph together with the translation back to host ids."""

    graph: Graph
    orig: tuple[int, ...]
    index: dict[int, int]

    def lift(self, vs: Iterable[int]) -> list[int]:
        return [self.orig[v] for v in vs]

    def lower(self, vs: Iterable[int]) -> list[int]:
        return [self.index[v] for v in vs]


# -- serialization -----------------------------------------------------------


def parse_edge_list(text: str) -> Graph:
    """Parse ``u v`` lines; ``#`` comments, blank lines and an optional
    ``p n`` header are accepted."""
    edges: list[tuple[int, int]] = []
    declared: int | None = None
    top = -1
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        toks = line.split()
        if toks[0] == "p":
            if len(toks) != 2 or declared is not None:
                raise GraphFormatError("malformed header, expected 'p n'", lineno)
            declared = _int_token(toks[1], lineno)
            continue
        if len(toks) != 2:
            raise GraphFormatError(f"expected two vertex ids, got {len(toks)} tokens", lineno)
        u, v = _int_token(toks[0], lineno), _int_token(toks[1], lineno)
        if u == v:
            raise GraphFormatError(f"loop edge at vertex {u}", lineno)
        edges.append((u, v))
        top = max(top, u, v)
    n = top + 1
    if declared is not None:
        if declared < n:
            raise GraphFormatError(f"header declares n={declared} but vertex {top} appears")
        n = declared
    return Graph(n, edges)


def _int_token(tok: str, lineno: int) -> int:
    try:
        val = int(tok)
    except ValueError:
        raise GraphFormatError(f"non-integer token {tok!r}", lineno) from None
    if val < 0:
        raise GraphFormatError(f"negative vertex id {val}", lineno)
    return val


def to_edge_list(g: Graph) -> str:
    lines = [f"p {g.n}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def to_json_obj(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def to_json(g: Graph) -> str:
    return json.dumps(to_json_obj(g), separators=(",", ":"))


def from_json(text: str) -> Graph:
    try:
        obj = json.loads(text)
        n = int(obj["n"])
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise GraphFormatError(f"bad JSON graph: {exc}") from None
    try:
        return Graph(n, edges)
    except ValueError as exc:
        raise GraphFormatError(str(exc)) from None


# -- distances ---------------------------------------------------------------


def bfs(
    g: Graph,
    sources: Iterable[int],
    blocked: set[int] | frozenset[int] = frozenset(),
    limit: float = math.inf,
    floor: int = 0,
) -> dict[int, int]:
    """Distances from ``sources`` avoiding ``blocked`` and every vertex below
    ``floor``, up to depth ``limit``."""
    dist = {s: 0 for s in sources if s not in blocked and s >= floor}
    frontier = sorted(dist)
    d = 0
    adj = g.adj
    while frontier and d < limit:
        d += 1
        nxt = []
        for u in frontier:
            for w in adj[u]:
                if w not in dist and w not in blocked and w >= floor:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def shortest_path(
    g: Graph,
    source: int,
    target: int,
    blocked: set[int] | frozenset[int] = frozenset(),
    floor: int = 0,
) -> list[int] | None:
    """A shortest ``source``-``target`` path avoiding ``blocked`` (ends exempt).

    Ties are broken toward smaller vertex ids at every step from the source.
    """
    if source == target:
        return [source]
    parent = {source: source}
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        for w in sorted(adj[u]):
            if w in parent or (w != target and (w in blocked or w < floor)):
                continue
            parent[w] = u
            if w == target:
                path = [w]
                while path[-1] != source:
                    path.append(parent[path[-1]])
                return path[::-1]
            queue.append(w)
    return None


def dist(g: Graph, x: int, y: int) -> float:
    """BFS distance; ``math.inf`` when disconnected."""
    if not (0 <= x < g.n and 0 <= y < g.n):
        raise IndexError("vertex out of range")
    p = shortest_path(g, x, y)
    return math.inf if p is None else len(p) - 1


def ball(g: Graph, centre: Iterable[int], r: int) -> frozenset[int]:
    if r < 0:
        raise ValueError("radius must be nonnegative")
    return frozenset(bfs(g, centre, limit=r))


# -- cycles ------------------------------------------------------------------


class CyclePos:
    """A cycle ``a0 a1 ... a_{m} a0`` directed from ``a0`` towards ``a1``."""

    __slots__ = ("seq", "pos")

    def __init__(self, seq: Sequence[int], host: Graph | None = None):
        seq = tuple(seq)
        if len(seq) < 3 or len(set(seq)) != len(seq):
            raise ValueError("a cycle needs at least 3 distinct vertices")
        if host is not None:
            for a, b in zip(seq, seq[1:] + seq[:1]):
                if not host.has_edge(a, b):
                    raise ValueError(f"({a}, {b}) is not an edge of the host graph")
        self.seq = seq
        self.pos = {v: i for i, v in enumerate(seq)}

    def __len__(self) -> int:
        return len(self.seq)

    def __contains__(self, v: object) -> bool:
        return v in self.pos

    def __iter__(self):
        return iter(self.seq)

    @property
    def vertex_set(self) -> frozenset[int]:
        return frozenset(self.seq)

    def at(self, i: int) -> int:
        return self.seq[i % len(self.seq)]

    def succ(self, v: int, steps: int = 1) -> int:
        return self.at(self.pos[v] + steps)

    def forward(self, x: int, y: int) -> int:
        """Number of steps from ``x`` to ``y`` along the orientation."""
        return (self._index(y) - self._index(x)) % len(self.seq)

    def dist(self, x: int, y: int) -> int:
        f = self.forward(x, y)
        return min(f, len(self.seq) - f)

    def ball(self, vs: Iterable[int], r: int) -> set[int]:
        """``N_C^r[vs]``: vertices of the cycle within cycle-distance ``r``."""
        m = len(self.seq)
        out: set[int] = set()
        if r * 2 + 1 >= m:
            return set(self.seq) if any(True for _ in vs) else out
        for v in vs:
            i = self._index(v)
            out.update(self.seq[(i + d) % m] for d in range(-r, r + 1))
        return out

    def _index(self, v: int) -> int:
        try:
            return self.pos[v]
        except KeyError:
            raise ValueError(f"vertex {v} is not on the cycle") from None

    def __repr__(self) -> str:
        return f"CyclePos(len={len(self.seq)})"


def dist_on_cycle(c: CyclePos, x: int, y: int) -> int:
    return c.dist(x, y)


@dataclass(frozen=True)
class CycleCheck:
    ok: bool
    reason: str | None = None

    def __bool__(self) -> bool:
        return self.ok


def is_induced_cycle(g: Graph, seq: Sequence[int], min_len: int) -> CycleCheck:
    """Whether ``seq`` (read cyclically) is an induced cycle with at least
    ``min_len`` vertices. Returns a falsy check carrying a reason code on failure."""
    seq = list(seq)
    if any(not isinstance(v, int) or not 0 <= v < g.n for v in seq):
        return CycleCheck(False, "vertex_out_of_range")
    if len(set(seq)) != len(seq):
        return CycleCheck(False, "repeated_vertex")
    m = len(seq)
    if m < max(min_len, 3):
        return CycleCheck(False, "too_short")
    where = {v: i for i, v in enumerate(seq)}
    for i, v in enumerate(seq):
        if not g.has_edge(v, seq[(i + 1) % m]):
            return CycleCheck(False, "missing_edge")
        on_cycle = [where[w] for w in g.adj[v] if w in where]
        if len(on_cycle) != 2:
            return CycleCheck(False, "chord")
    return CycleCheck(True)


def find_induced_c4(g: Graph) -> tuple[int, int, int, int] | None:
    """Some induced 4-cycle ``(a, b, c, d)`` in cyclic order, or ``None``.

    Scans nonadjacent pairs ``a < c`` in lexicographic order for two
    nonadjacent common neighbours ``b < d``.
    """
    common: dict[tuple[int, int], list[int]] = {}
    adj = g.adj
    for b in range(g.n):
        nb = sorted(adj[b])
        for i, a in enumerate(nb):
            for c in nb[i + 1:]:
                if c not in adj[a]:
                    common.setdefault((a, c), []).append(b)
    for a, c in sorted(common):
        mids = common[(a, c)]
        if len(mids) < 2:
            continue
        for i, b in enumerate(mids):
            for d in mids[i + 1:]:
                if d not in adj[b]:
                    return (a, b, c, d)
    return None
