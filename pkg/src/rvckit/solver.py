"""Exact decision procedures built on backtracking color assignment.

The subset solver enumerates colorings in a canonical order: vertices are
assigned by descending degree (ties by index), the first vertex is pinned to
color 1, and a color new to the partial assignment must be the smallest
unused index.  Every coloring has exactly one canonical renaming, and rainbow
connectivity is invariant under renaming, so the restriction loses nothing.

Pruning works off candidate paths.  For each requested pair the solver
precomputes all simple paths of length at most k+1 (only such paths can be
rainbow under k colors) and keeps just the inclusion-minimal internal vertex
sets: if one set is rainbow, so is any subset of it.  A pair whose candidate
sets are all color-blocked by the partial assignment can never be satisfied,
and the branch is abandoned.

Yes-answers are never trusted from search state: the witness coloring is
re-verified with the independent rainbow checker before it is returned.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    Graph,
    PairSet,
    VertexColoring,
    all_vertex_pairs,
    diameter,
    is_complete,
    is_connected,
    simple_paths,
)
from .rainbow import is_subset_rainbow_vc


@dataclass(frozen=True)
class SolveResult:
    """Outcome of a decision run.

    ``witness`` is present on every yes-decision that needs a coloring; the
    k = 0 rainbow decision is the one yes-case without a witness, since it
    holds exactly for complete graphs where no coloring is consulted.
    ``nodes_explored`` counts vertex-color assignments tried.
    """

    decision: bool
    witness: VertexColoring | None
    nodes_explored: int


def _assignment_order(g: Graph) -> list:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def _minimal_sets(sets: set) -> list:
    """Drop every set that contains another candidate set."""
    by_size = sorted(sets, key=len)
    kept: list = []
    for s in by_size:
        if not any(m <= s for m in kept):
            kept.append(s)
    return kept


def decide_subset_rvc(g: Graph, p: PairSet, k: int) -> SolveResult:
    """Decide whether some k-coloring makes every pair in p rainbow connected."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if not is_connected(g):
        raise ValueError("subset rainbow decisions need a connected graph")
    p.check_in_range(g)

    # Candidate internal-vertex sets per pair.  Pairs with a path of at most
    # one internal vertex are satisfied under every coloring and drop out.
    constraints = []
    for a, b in p:
        if g.has_edge(a, b):
            continue
        sets = {frozenset(path[1:-1]) for path in simple_paths(g, a, b, k + 1)}
        if not sets:
            return SolveResult(False, None, 0)
        minimal = _minimal_sets(sets)
        if len(minimal[0]) <= 1:
            continue
        constraints.append((a, b, tuple(tuple(sorted(s)) for s in minimal)))

    order = _assignment_order(g)
    colors = [0] * g.n

    # blocked/alive bookkeeping per constraint, plus vertex -> candidate index.
    blocked = [[False] * len(sets) for _, _, sets in constraints]
    alive = [len(sets) for _, _, sets in constraints]
    touching: list = [[] for _ in range(g.n)]
    for ci, (_, _, sets) in enumerate(constraints):
        for si, s in enumerate(sets):
            for v in s:
                touching[v].append((ci, si, s))

    nodes = 0

    def place(v: int, col: int):
        """Apply the assignment; returns an undo journal or None on a dead pair."""
        journal = []
        colors[v] = col
        for ci, si, s in touching[v]:
            if blocked[ci][si]:
                continue
            if any(colors[x] == col for x in s if x != v):
                blocked[ci][si] = True
                alive[ci] -= 1
                journal.append((ci, si))
                if alive[ci] == 0:
                    _undo(v, journal)
                    return None
        return journal

    def _undo(v: int, journal) -> None:
        colors[v] = 0
        for ci, si in journal:
            blocked[ci][si] = False
            alive[ci] += 1

    def search(pos: int, used: int):
        nonlocal nodes
        if pos == g.n:
            return VertexColoring(tuple(colors), k)
        v = order[pos]
        for col in range(1, min(used + 1, k) + 1):
            nodes += 1
            journal = place(v, col)
            if journal is None:
                continue
            result = search(pos + 1, max(used, col))
            if result is not None:
                return result
            _undo(v, journal)
        return None

    witness = search(0, 0)
    if witness is None:
        return SolveResult(False, None, nodes)
    if not is_subset_rainbow_vc(g, witness, p):
        raise RuntimeError("solver produced a witness the independent checker rejects")
    return SolveResult(True, witness, nodes)


def decide_rvc_le_k(g: Graph, k: int) -> SolveResult:
    """Decide whether k colors suffice to rainbow vertex-connect g.

    k = 0 holds exactly for complete graphs (every pair is an edge), where no
    coloring is needed and none is reported.
    """
    if k < 0:
        raise ValueError("k must be at least 0")
    if not is_connected(g):
        raise ValueError("rainbow vertex-connection needs a connected graph")
    if k == 0:
        return SolveResult(is_complete(g), None, 0)
    return decide_subset_rvc(g, all_vertex_pairs(g), k)


def rvc_exact(g: Graph):
    """Smallest k that rainbow vertex-connects g, with a witness coloring.

    Searches upward from the diameter lower bound; n-2 colors always suffice
    (color the internal vertices of a spanning tree distinctly), so the scan
    terminates.
    """
    if not is_connected(g):
        raise ValueError("rainbow vertex-connection needs a connected graph")
    start = max(0, diameter(g) - 1)
    limit = max(g.n - 2, 0)
    for k in range(start, limit + 1):
        result = decide_rvc_le_k(g, k)
        if result.decision:
            return k, result.witness
    raise RuntimeError(f"no decision up to the n-2 bound for n={g.n}")


def chromatic_decision(g: Graph, k: int) -> SolveResult:
    """Decide whether g has a proper k-coloring, with the same canonical search."""
    if k < 1:
        raise ValueError("k must be at least 1")
    order = _assignment_order(g)
    colors = [0] * g.n
    nodes = 0

    def search(pos: int, used: int):
        nonlocal nodes
        if pos == g.n:
            return VertexColoring(tuple(colors), k)
        v = order[pos]
        for col in range(1, min(used + 1, k) + 1):
            nodes += 1
            if any(colors[w] == col for w in g.neighbors(v)):
                continue
            colors[v] = col
            result = search(pos + 1, max(used, col))
            if result is not None:
                return result
            colors[v] = 0
        return None

    witness = search(0, 0)
    if witness is None:
        return SolveResult(False, None, nodes)
    for u, v in g.edges:
        if witness.colors[u] == witness.colors[v]:
            raise RuntimeError("proper-coloring search returned an improper coloring")
    return SolveResult(True, witness, nodes)
