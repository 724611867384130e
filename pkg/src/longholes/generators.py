"""Seeded instance families. All randomness comes from ``random.Random``
(Mersenne Twister MT19937) seeded with the caller's integer seed."""

from __future__ import annotations

import random

from .graph import Graph, find_induced_c4

FAMILIES = ("c4free-random", "cubic-random", "cycle-with-ears", "cycle-with-appendages", "disjoint-hexagons")


def c4free_random(n: int, p: float, seed: int) -> Graph:
    """G(n, p), then delete a uniformly chosen edge of some induced C4 until none is left."""
    if n < 0 or not 0 <= p <= 1:
        raise ValueError("need n >= 0 and 0 <= p <= 1")
    rng = random.Random(seed)
    edges = {(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p}
    while True:
        g = Graph(n, edges)
        c4 = find_induced_c4(g)
        if c4 is None:
            return g
        i = rng.randrange(4)
        a, b = c4[i], c4[(i + 1) % 4]
        edges.discard((min(a, b), max(a, b)))


def cubic_random(n: int, seed: int, max_tries: int = 1000) -> Graph:
    """Uniform-ish simple 3-regular graph by the configuration model with restarts."""
    if n < 4 or n % 2:
        raise ValueError("a cubic graph needs an even number of at least 4 vertices")
    rng = random.Random(seed)
    for _ in range(max_tries):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        pairs = {(min(a, b), max(a, b)) for a, b in zip(stubs[::2], stubs[1::2]) if a != b}
        if len(pairs) == 3 * n // 2:
            return Graph(n, pairs)
    raise RuntimeError("configuration model kept producing loops or multi-edges")


def disjoint_hexagons(count: int) -> Graph:
    if count < 0:
        raise ValueError("count must be nonnegative")
    edges = [(6 * h + i, 6 * h + (i + 1) % 6) for h in range(count) for i in range(6)]
    return Graph(6 * count, edges)


def _cycle_edges(length: int) -> list[tuple[int, int]]:
    return [(i, (i + 1) % length) for i in range(length)]


def cycle_with_ears(cycle_len: int, ears: int, ear_len: int, seed: int) -> Graph:
    """A cycle ``0..cycle_len-1`` plus ``ears`` paths of ``ear_len`` new
    vertices, each joining two distinct unused cycle vertices at cycle
    distance at least 3."""
    if cycle_len < 6 or ear_len < 1:
        raise ValueError("need cycle_len >= 6 and ear_len >= 1")
    rng = random.Random(seed)
    edges = _cycle_edges(cycle_len)
    free = list(range(cycle_len))
    n = cycle_len
    for _ in range(ears):
        pairs = [
            (a, b) for a in free for b in free
            if a < b and min(b - a, cycle_len - (b - a)) >= 3
        ]
        if not pairs:
            break
        a, b = rng.choice(pairs)
        free.remove(a)
        free.remove(b)
        path = [a] + list(range(n, n + ear_len)) + [b]
        n += ear_len
        edges += list(zip(path, path[1:]))
    return Graph(n, edges)


def cycle_with_appendages(cycle_len: int, count: int, app_len: int, seed: int) -> Graph:
    """A cycle plus ``count`` pendant cycles of ``app_len + 1`` vertices,
    each meeting the main cycle in one tip; tips are drawn at random among
    positions at least 3 apart."""
    if cycle_len < 6 or app_len < 5:
        raise ValueError("need cycle_len >= 6 and app_len >= 5")
    rng = random.Random(seed)
    edges = _cycle_edges(cycle_len)
    tips: list[int] = []
    order = list(range(cycle_len))
    rng.shuffle(order)
    for t in order:
        if len(tips) == count:
            break
        if all(min(abs(t - s), cycle_len - abs(t - s)) >= 3 for s in tips):
            tips.append(t)
    n = cycle_len
    for t in sorted(tips):
        ring = [t] + list(range(n, n + app_len)) + [t]
        n += app_len
        edges += list(zip(ring, ring[1:]))
    return Graph(n, edges)


def generate(family: str, seed: int, **params) -> Graph:
    """Dispatch by family name; unknown parameters raise ``TypeError``."""
    if family == "c4free-random":
        n = params.pop("n", 40)
        p = params.pop("p", 3.0 / max(n - 1, 1))
        g = c4free_random(n, p, seed)
    elif family == "cubic-random":
        g = cubic_random(params.pop("n", 40), seed)
    elif family == "cycle-with-ears":
        g = cycle_with_ears(params.pop("cycle_len", 30), params.pop("count", 3), params.pop("length", 7), seed)
    elif family == "cycle-with-appendages":
        g = cycle_with_appendages(params.pop("cycle_len", 30), params.pop("count", 3), params.pop("length", 6), seed)
    elif family == "disjoint-hexagons":
        g = disjoint_hexagons(params.pop("count", 3))
    else:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if params:
        raise TypeError(f"unused parameters for {family}: {', '.join(sorted(params))}")
    return g
