"""Small graph families: named constructors and exhaustive enumeration.

Enumeration of connected graphs up to isomorphism leans on the networkx
graph atlas, which lists every graph on at most seven vertices exactly once
per isomorphism class in a fixed order.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterator

import networkx as nx
from networkx.generators.atlas import graph_atlas_g

from .graphs import Graph, PairSet, graph_from_edges, pair_set


def path_graph(n: int) -> Graph:
    return graph_from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least three vertices")
    return graph_from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return graph_from_edges(n, combinations(range(n), 2))


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with the hub at vertex 0."""
    return graph_from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


_ATLAS_LIMIT = 7


def connected_graphs_of_order(n: int) -> list:
    """Connected graphs on exactly n vertices, one per isomorphism class."""
    if not 1 <= n <= _ATLAS_LIMIT:
        raise ValueError(f"atlas enumeration covers 1..{_ATLAS_LIMIT} vertices")
    out = []
    for ag in graph_atlas_g():
        if ag.number_of_nodes() != n:
            continue
        if n > 1 and not nx.is_connected(ag):
            continue
        out.append(graph_from_edges(n, ag.edges()))
    return out


def connected_graphs(max_n: int) -> list:
    """Connected graphs on 1..max_n vertices, one per isomorphism class."""
    out = []
    for n in range(1, max_n + 1):
        out.extend(connected_graphs_of_order(n))
    return out


def all_pair_sets(g: Graph) -> Iterator[PairSet]:
    """Every subset of vertex pairs of g, in a fixed subset-mask order."""
    pairs = list(combinations(range(g.n), 2))
    for mask in range(1 << len(pairs)):
        yield pair_set(p for bit, p in enumerate(pairs) if mask >> bit & 1)
