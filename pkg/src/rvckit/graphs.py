"""Immutable simple graphs plus the small value types shared by every module.

Vertices are dense integers 0..n-1.  Edges and vertex pairs are stored as
(i, j) tuples with i < j, so every set comparison and every emitted file
sees one canonical form.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator

INFINITY = math.inf


def normalize_pair(u: int, v: int) -> tuple[int, int]:
    """Order an unordered pair; rejects the diagonal."""
    if u == v:
        raise ValueError(f"pair ({u}, {v}) repeats a vertex")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices 0..n-1.

    Instances are immutable; every mutation helper returns a new graph.
    Build through :func:`graph_from_edges` unless the edge set is already
    normalized.
    """

    n: int
    edges: frozenset
    _adj: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("graph must have at least one vertex")
        adj = [[] for _ in range(self.n)]
        for e in self.edges:
            u, v = e
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge {e} is not a normalized in-range pair")
            adj[u].append(v)
            adj[v].append(u)
        object.__setattr__(self, "_adj", tuple(tuple(sorted(a)) for a in adj))

    @property
    def m(self) -> int:
        return len(self.edges)

    def vertices(self) -> range:
        return range(self.n)

    def neighbors(self, v: int) -> tuple:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        return normalize_pair(u, v) in self.edges

    def check_vertex(self, v: int) -> None:
        if not (0 <= v < self.n):
            raise ValueError(f"vertex {v} out of range for n={self.n}")


def graph_from_edges(n: int, edges: Iterable) -> Graph:
    """Build a graph from an edge list; dedupes, rejects loops and bad ids."""
    if n < 1:
        raise ValueError("graph must have at least one vertex")
    norm = set()
    for e in edges:
        u, v = e
        if not (0 <= u < n) or not (0 <= v < n):
            raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
        norm.add(normalize_pair(u, v))
    return Graph(n, frozenset(norm))


@dataclass(frozen=True)
class PairSet:
    """A set of unordered, distinct vertex pairs.

    Iteration is always in sorted order so downstream reports and files are
    deterministic.
    """

    pairs: frozenset

    def __post_init__(self):
        for p in self.pairs:
            u, v = p
            if not (isinstance(u, int) and isinstance(v, int)) or not u < v:
                raise ValueError(f"pair {p} is not a normalized (i, j) with i < j")

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(sorted(self.pairs))

    def __len__(self) -> int:
        return len(self.pairs)

    def __contains__(self, pair) -> bool:
        u, v = pair
        if u == v:
            return False
        return normalize_pair(u, v) in self.pairs

    def check_in_range(self, g: Graph) -> None:
        for u, v in self.pairs:
            if v >= g.n:
                raise ValueError(f"pair ({u}, {v}) references a vertex outside n={g.n}")


def pair_set(pairs: Iterable) -> PairSet:
    """Normalize an iterable of vertex pairs into a PairSet."""
    return PairSet(frozenset(normalize_pair(u, v) for u, v in pairs))


EMPTY_PAIRS = PairSet(frozenset())


def all_vertex_pairs(g: Graph) -> PairSet:
    return PairSet(frozenset(combinations(range(g.n), 2)))


@dataclass(frozen=True)
class VertexColoring:
    """A total assignment of colors 1..k to vertices 0..n-1.

    ``k`` is the declared budget; a coloring may use fewer distinct colors
    than it declares, never more.
    """

    colors: tuple
    k: int

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("color budget must be at least 1")
        for v, c in enumerate(self.colors):
            if not 1 <= c <= self.k:
                raise ValueError(f"vertex {v} has color {c} outside 1..{self.k}")

    def __len__(self) -> int:
        return len(self.colors)


def coloring(colors: Iterable[int], k: int | None = None) -> VertexColoring:
    """Build a VertexColoring, inferring the budget from the colors if absent."""
    cols = tuple(colors)
    if k is None:
        k = max(cols) if cols else 1
    return VertexColoring(cols, k)


def check_total_coloring(g: Graph, c: VertexColoring) -> None:
    if len(c.colors) != g.n:
        raise ValueError(f"coloring has {len(c.colors)} entries, graph has {g.n} vertices")


def distance(g: Graph, u: int, v: int):
    """BFS distance between u and v; INFINITY when v is unreachable."""
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        return 0
    seen = [False] * g.n
    seen[u] = True
    frontier = deque([(u, 0)])
    while frontier:
        x, d = frontier.popleft()
        for y in g.neighbors(x):
            if y == v:
                return d + 1
            if not seen[y]:
                seen[y] = True
                frontier.append((y, d + 1))
    return INFINITY


def _eccentricities(g: Graph) -> list:
    ecc = []
    for u in range(g.n):
        dist = [-1] * g.n
        dist[u] = 0
        frontier = deque([u])
        while frontier:
            x = frontier.popleft()
            for y in g.neighbors(x):
                if dist[y] < 0:
                    dist[y] = dist[x] + 1
                    frontier.append(y)
        if min(dist) < 0:
            return []  # disconnected
        ecc.append(max(dist))
    return ecc


def is_connected(g: Graph) -> bool:
    if g.n == 1:
        return True
    seen = [False] * g.n
    seen[0] = True
    frontier = deque([0])
    count = 1
    while frontier:
        x = frontier.popleft()
        for y in g.neighbors(x):
            if not seen[y]:
                seen[y] = True
                count += 1
                frontier.append(y)
    return count == g.n


def diameter(g: Graph) -> int:
    ecc = _eccentricities(g)
    if not ecc:
        raise ValueError("diameter is undefined for a disconnected graph")
    return max(ecc)


def is_complete(g: Graph) -> bool:
    return g.m == g.n * (g.n - 1) // 2


def remove_edges(g: Graph, drop: Iterable) -> Graph:
    """Return g without the given edges; every dropped edge must be present."""
    dropped = set()
    for e in drop:
        u, v = e
        ne = normalize_pair(u, v)
        if ne not in g.edges:
            raise ValueError(f"edge ({u}, {v}) is not present in the graph")
        dropped.add(ne)
    return Graph(g.n, g.edges - dropped)


def simple_paths(g: Graph, u: int, v: int, max_len: int | None = None) -> Iterator[tuple]:
    """Yield every simple u-v path with at most max_len edges.

    Paths come out in DFS prefix order with neighbors visited in ascending
    order, so the sequence is deterministic.  Partial paths that cannot
    reach v within the remaining budget are cut using exact distances to v,
    which prunes nothing that could still complete.
    """
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("path endpoints must differ")
    if max_len is None:
        max_len = g.n - 1
    if max_len < 1:
        return

    dist_to_v: list = [None] * g.n
    dist_to_v[v] = 0
    frontier = deque([v])
    while frontier:
        x = frontier.popleft()
        for y in g.neighbors(x):
            if dist_to_v[y] is None:
                dist_to_v[y] = dist_to_v[x] + 1
                frontier.append(y)

    path = [u]
    on_path = {u}

    def walk() -> Iterator[tuple]:
        here = path[-1]
        used = len(path) - 1
        for y in g.neighbors(here):
            if y == v:
                yield tuple(path) + (v,)
                continue
            if y in on_path:
                continue
            d = dist_to_v[y]
            if d is None or used + 1 + d > max_len:
                continue
            path.append(y)
            on_path.add(y)
            yield from walk()
            path.pop()
            on_path.remove(y)

    if dist_to_v[u] is not None and dist_to_v[u] <= max_len:
        yield from walk()
