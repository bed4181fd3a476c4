"""Rainbow vertex-connection checks.

A path is rainbow when its internal vertices all carry distinct colors; the
endpoints are unconstrained.  With a budget of k colors a rainbow path has at
most k internal vertices, so every search below caps path length at k+1 edges.

The search state is (current vertex, set of internal colors used so far).
Because internal colors must stay distinct, two internal vertices can never
coincide, so the color set captures a partial path exactly and states can be
deduplicated without losing any simple path.  The start vertex is barred from
re-entry, which closes the one loophole (its color is not charged).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .graphs import Graph, PairSet, VertexColoring, check_total_coloring


@dataclass
class SearchStats:
    """Cumulative counters for the rainbow path search engine."""

    calls: int = 0
    expansions: int = 0
    max_expansions: int = 0
    violations: int = 0

    def reset(self) -> None:
        self.calls = 0
        self.expansions = 0
        self.max_expansions = 0
        self.violations = 0


search_stats = SearchStats()


def path_budget(n: int, k: int) -> int:
    """Upper bound on u-v paths of length <= k+1 in a graph of order n.

    There are at most n choices for each of the ell-1 internal vertices of a
    length-ell path, so the count is bounded by the sum of n**(ell-1) over
    ell = 1..k+1.  Python integers are exact at any size, so the sum never
    overflows.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    if k < 0:
        raise ValueError("k must be at least 0")
    return sum(n**i for i in range(k + 1))


@dataclass(frozen=True)
class PathWitness:
    """A concrete path in a graph, validated at construction.

    ``vertices`` lists the path in order; every consecutive pair must be an
    edge of ``graph`` and no vertex may repeat.
    """

    graph: Graph = field(repr=False)
    vertices: tuple

    def __post_init__(self):
        vs = self.vertices
        if len(vs) < 2:
            raise ValueError("a path witness needs at least two vertices")
        seen = set()
        for v in vs:
            self.graph.check_vertex(v)
            if v in seen:
                raise ValueError(f"not a path: vertex {v} repeats")
            seen.add(v)
        for a, b in zip(vs, vs[1:]):
            if not self.graph.has_edge(a, b):
                raise ValueError(f"not a path: ({a}, {b}) is not an edge")

    @property
    def length(self) -> int:
        return len(self.vertices) - 1

    @property
    def internal_vertices(self) -> tuple:
        return self.vertices[1:-1]


def is_rainbow_path(c: VertexColoring, p: PathWitness) -> bool:
    """True when the internal vertices of p carry pairwise distinct colors."""
    check_total_coloring(p.graph, c)
    internal = p.internal_vertices
    return len({c.colors[v] for v in internal}) == len(internal)


def _rainbow_search(g: Graph, c: VertexColoring, source: int, targets, want_witness: bool):
    """Shared engine: find rainbow paths from source to the given targets.

    Runs a level-synchronized BFS over (vertex, color-set) states, expanding
    states in lexicographic order of the underlying path, so the first path
    reaching a target is the shortest one and lexicographically least among
    the shortest.  Returns a witness tuple (or None) when want_witness is
    set, otherwise the set of targets reached.

    Every call asserts that the number of expanded states stays within
    path_budget(n, k); expanded states are deduplicated partial paths, so the
    bound is never exceeded by a correct search.
    """
    colors = c.colors
    budget = path_budget(g.n, c.k)
    expansions = 0

    remaining = set(targets)
    found = set()

    # Distance-1 pairs are rainbow under every coloring: the edge itself has
    # no internal vertices.  Resolve them before searching.
    for y in g.neighbors(source):
        if y in remaining:
            remaining.discard(y)
            found.add(y)
            if want_witness:
                _note_call(expansions)
                return (source, y)

    bit = [0] * (g.n)
    for v in range(g.n):
        bit[v] = 1 << (colors[v] - 1)

    # Each frontier entry is (vertex, mask); parents reconstructs witnesses.
    frontier = [(source, 0)]
    seen = [set() for _ in range(g.n)]
    seen[source].add(0)
    parents = {} if want_witness else None

    while frontier and remaining:
        next_frontier = []
        for state in frontier:
            x, mask = state
            expansions += 1
            if expansions > budget:
                search_stats.violations += 1
                raise RuntimeError(
                    f"path search expanded {expansions} states, over budget {budget}"
                )
            for y in g.neighbors(x):
                if y in remaining:
                    found.add(y)
                    remaining.discard(y)
                    if want_witness:
                        path = [y]
                        st = state
                        while st != (source, 0):
                            path.append(st[0])
                            st = parents[st]
                        path.append(source)
                        path.reverse()
                        _note_call(expansions)
                        return tuple(path)
                    if not remaining:
                        break
                if y == source:
                    continue
                b = bit[y]
                if mask & b:
                    continue
                m2 = mask | b
                if m2 in seen[y]:
                    continue
                seen[y].add(m2)
                if want_witness:
                    parents[(y, m2)] = state
                next_frontier.append((y, m2))
            if not remaining:
                break
        frontier = next_frontier

    _note_call(expansions)
    if want_witness:
        return None
    return found


def _note_call(expansions: int) -> None:
    search_stats.calls += 1
    search_stats.expansions += expansions
    if expansions > search_stats.max_expansions:
        search_stats.max_expansions = expansions


def exists_rainbow_path(g: Graph, c: VertexColoring, u: int, v: int) -> PathWitness | None:
    """Shortest rainbow u-v path under c, or None.

    Only paths of length at most k+1 can be rainbow under k colors, so the
    search never looks further.  Ties between shortest witnesses break to the
    lexicographically least vertex sequence.
    """
    check_total_coloring(g, c)
    g.check_vertex(u)
    g.check_vertex(v)
    if u == v:
        raise ValueError("rainbow path endpoints must differ")
    path = _rainbow_search(g, c, u, {v}, want_witness=True)
    if path is None:
        return None
    return PathWitness(g, path)


def is_subset_rainbow_vc(g: Graph, c: VertexColoring, p: PairSet) -> bool:
    """True when every requested pair has a rainbow path under c."""
    check_total_coloring(g, c)
    p.check_in_range(g)
    by_source: dict = {}
    for a, b in p:
        by_source.setdefault(a, set()).add(b)
    for source in sorted(by_source):
        targets = by_source[source]
        found = _rainbow_search(g, c, source, targets, want_witness=False)
        if found != targets:
            return False
    return True


def is_rainbow_vertex_connected(g: Graph, c: VertexColoring) -> bool:
    """True when every vertex pair has a rainbow path under c.

    Rainbow connectivity is symmetric, so each unordered pair is checked
    once, from its smaller endpoint.
    """
    from .graphs import is_connected

    check_total_coloring(g, c)
    if not is_connected(g):
        raise ValueError("rainbow vertex-connection is defined for connected graphs")
    for source in range(g.n - 1):
        targets = set(range(source + 1, g.n))
        found = _rainbow_search(g, c, source, targets, want_witness=False)
        if found != targets:
            return False
    return True
