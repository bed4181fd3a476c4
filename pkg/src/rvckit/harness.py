"""Executable checks for the reduction constructions, with seeded corruptions.

Every check returns a ClaimReport rather than raising: sweeps over hundreds
of instances want to keep going and aggregate.  A failing report always
carries a concrete counterexample that can be re-checked by hand from the
instance description.

The corruption helpers exist so the checks themselves stay honest: each check
must fail when the gadget it inspects is broken in a targeted way, otherwise
it is testing nothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .families import all_pair_sets, connected_graphs
from .gadgets import (
    GadgetGraph,
    build_gadget,
    lift_coloring,
    pendant_reduction,
    project_coloring,
)
from .graphs import (
    Graph,
    PairSet,
    distance,
    graph_from_edges,
    normalize_pair,
    pair_set,
    remove_edges,
    simple_paths,
)
from .rainbow import exists_rainbow_path, is_rainbow_vertex_connected, is_subset_rainbow_vc
from .solver import chromatic_decision, decide_subset_rvc, decide_rvc_le_k


@dataclass(frozen=True)
class ClaimReport:
    """Outcome of one check on one instance."""

    check: str
    instance: str
    status: str  # "pass" | "fail" | "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def describe_instance(g: Graph, p: PairSet | None, k: int) -> str:
    ptxt = "-" if p is None else str(list(p))
    return f"n={g.n} edges={sorted(g.edges)} P={ptxt} k={k}"


@lru_cache(maxsize=256)
def _cached_gadget(g: Graph, p: PairSet, k: int) -> GadgetGraph:
    return build_gadget(g, p, k)


def _stripped(gg: GadgetGraph) -> Graph:
    return remove_edges(gg.graph, gg.base_edges)


def check_pair_distances(gg: GadgetGraph, instance: str = "") -> ClaimReport:
    """Requested base pairs sit at distance >= k+2 once base edges are removed."""
    h = _stripped(gg)
    bound = gg.k + 2
    for a, b in gg.pairs_k:
        d = distance(h, a, b)
        if d < bound:
            return ClaimReport(
                "pair-distance",
                instance,
                "fail",
                f"pair ({a}, {b}) at distance {d}, expected >= {bound}",
            )
    return ClaimReport("pair-distance", instance, "pass")


def check_nonpair_distances(gg: GadgetGraph, instance: str = "") -> ClaimReport:
    """Non-requested base pairs sit at distance exactly k+1 without base edges."""
    h = _stripped(gg)
    want = gg.k + 1
    for i, j in combinations(range(gg.source_n), 2):
        a, b = normalize_pair(gg.base[i], gg.base[j])
        if (a, b) in gg.pairs_k:
            continue
        d = distance(h, a, b)
        if d != want:
            return ClaimReport(
                "nonpair-distance",
                instance,
                "fail",
                f"pair ({a}, {b}) at distance {d}, expected exactly {want}",
            )
    return ClaimReport("nonpair-distance", instance, "pass")


def check_path_confinement(gg: GadgetGraph, instance: str = "") -> ClaimReport:
    """Short paths between requested base pairs never leave the base layer."""
    base_set = set(gg.base)
    for a, b in gg.pairs_k:
        for path in simple_paths(gg.graph, a, b, gg.k + 1):
            if any(v not in base_set for v in path):
                return ClaimReport(
                    "confinement",
                    instance,
                    "fail",
                    f"path {list(path)} between ({a}, {b}) leaves the base layer",
                )
    return ClaimReport("confinement", instance, "pass")


def check_lift_validity(
    g: Graph, p: PairSet, k: int, gadget: GadgetGraph | None = None
) -> ClaimReport:
    """A witness coloring for (g, p, k) lifts to rainbow-connect the gadget.

    Skipped when (g, p, k) has no witness at all.  Passing a pre-built (or
    deliberately corrupted) gadget overrides the freshly built one.
    """
    instance = describe_instance(g, p, k)
    result = decide_subset_rvc(g, p, k)
    if not result.decision:
        return ClaimReport("lift-validity", instance, "skip", "no witness coloring exists")
    gg = gadget if gadget is not None else _cached_gadget(g, p, k)
    ck = lift_coloring(g, p, k, result.witness, gadget=gg)
    if is_rainbow_vertex_connected(gg.graph, ck):
        return ClaimReport("lift-validity", instance, "pass")
    for a, b in combinations(range(gg.graph.n), 2):
        if exists_rainbow_path(gg.graph, ck, a, b) is None:
            return ClaimReport(
                "lift-validity",
                instance,
                "fail",
                f"lifted coloring leaves pair ({a}, {b}) without a rainbow path",
            )
    return ClaimReport("lift-validity", instance, "fail", "checker disagreement")


def check_reduction_equivalence(g: Graph, p: PairSet, k: int, cap: int = 18) -> ClaimReport:
    """The gadget needs k colors exactly when (g, p) does.

    The gadget side is decided by exhaustive search over its own colorings,
    so instances are skipped once the gadget outgrows the cap.  On a yes the
    gadget witness must project back to a coloring that serves (g, p).
    """
    instance = describe_instance(g, p, k)
    gg = _cached_gadget(g, p, k)
    if gg.graph.n > cap:
        return ClaimReport(
            "equivalence", instance, "skip", f"gadget has {gg.graph.n} vertices, cap {cap}"
        )
    lhs = decide_subset_rvc(g, p, k)
    rhs = decide_rvc_le_k(gg.graph, k)
    if lhs.decision != rhs.decision:
        return ClaimReport(
            "equivalence",
            instance,
            "fail",
            f"subset decision {lhs.decision} but gadget decision {rhs.decision}",
        )
    if rhs.decision:
        projected = project_coloring(gg, rhs.witness)
        if not is_subset_rainbow_vc(g, projected, p):
            return ClaimReport(
                "equivalence", instance, "fail", "gadget witness projects to a failing coloring"
            )
    return ClaimReport("equivalence", instance, "pass")


def check_pendant_equivalence(g: Graph, k: int) -> ClaimReport:
    """Proper k-colorability matches the pendant subset instance, k >= 3."""
    if k < 3:
        raise ValueError("pendant equivalence holds for k >= 3")
    instance = describe_instance(g, None, k)
    inst = pendant_reduction(g)
    lhs = chromatic_decision(g, k)
    rhs = decide_subset_rvc(inst.graph, inst.pairs, k)
    if lhs.decision != rhs.decision:
        return ClaimReport(
            "pendant-equivalence",
            instance,
            "fail",
            f"chromatic decision {lhs.decision} but subset decision {rhs.decision}",
        )
    return ClaimReport("pendant-equivalence", instance, "pass")


# ---------------------------------------------------------------------------
# Seeded corruptions: targeted ways to break a gadget.


def _label_index(gg: GadgetGraph) -> dict:
    return {lab: vid for vid, lab in enumerate(gg.labels)}


def corrupt_shortcut(gg: GadgetGraph) -> GadgetGraph | None:
    """Add an edge that undercuts the detour of the first requested pair."""
    pairs = list(gg.pairs_k)
    if not pairs:
        return None
    a, b = pairs[0]
    i = gg.base.index(a)
    rung = _label_index(gg)[("v", i, gg.k - 2, 1)]
    edges = set(gg.graph.edges)
    edges.add(normalize_pair(rung, b))
    graph = graph_from_edges(gg.graph.n, edges)
    return GadgetGraph(graph, gg.k, gg.labels, gg.base, gg.pairs_k, gg.base_edges)


def corrupt_unhook(gg: GadgetGraph) -> GadgetGraph | None:
    """Detach the shortcut rung of the first non-requested pair."""
    for i, j in combinations(range(gg.source_n), 2):
        if normalize_pair(gg.base[i], gg.base[j]) in gg.pairs_k:
            continue
        index = _label_index(gg)
        drop = {
            normalize_pair(gg.base[i], index[("w", i, j, 1)]),
            normalize_pair(gg.base[j], index[("w", i, j, 2)]),
        }
        graph = remove_edges(gg.graph, drop)
        return GadgetGraph(graph, gg.k, gg.labels, gg.base, gg.pairs_k, gg.base_edges)
    return None


def corrupt_base_cut(gg: GadgetGraph) -> GadgetGraph | None:
    """Remove a base edge whose endpoints form a requested pair."""
    for e in sorted(gg.base_edges):
        if e in gg.pairs_k:
            graph = remove_edges(gg.graph, [e])
            return GadgetGraph(
                graph, gg.k, gg.labels, gg.base, gg.pairs_k, gg.base_edges - {e}
            )
    return None


# ---------------------------------------------------------------------------
# Sweeps


_CHECKS = (
    "pair-distance",
    "nonpair-distance",
    "confinement",
    "lift-validity",
    "equivalence",
    "pendant-equivalence",
)


def run_check(check: str, g: Graph, p: PairSet | None, k: int, cap: int = 18) -> ClaimReport:
    """Run one named check on one instance."""
    if check == "pair-distance":
        return check_pair_distances(_cached_gadget(g, p, k), describe_instance(g, p, k))
    if check == "nonpair-distance":
        return check_nonpair_distances(_cached_gadget(g, p, k), describe_instance(g, p, k))
    if check == "confinement":
        return check_path_confinement(_cached_gadget(g, p, k), describe_instance(g, p, k))
    if check == "lift-validity":
        return check_lift_validity(g, p, k)
    if check == "equivalence":
        return check_reduction_equivalence(g, p, k, cap=cap)
    if check == "pendant-equivalence":
        return check_pendant_equivalence(g, k)
    raise ValueError(f"unknown check {check!r}; expected one of {', '.join(_CHECKS)}")


def run_sweep(instances, checks, cap: int = 18, jobs: int = 1) -> list:
    """Run the named checks over (g, p, k) instances; reports come back sorted."""
    for check in checks:
        if check not in _CHECKS:
            raise ValueError(f"unknown check {check!r}; expected one of {', '.join(_CHECKS)}")
    work = [(check, g, p, k, cap) for g, p, k in instances for check in checks]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            reports = pool.starmap(run_check, work, chunksize=16)
    else:
        reports = [run_check(*item) for item in work]
    return sorted(reports, key=lambda r: (r.check, r.instance, r.status))


def gadget_sweep_instances(max_n: int, ks) -> list:
    """Every connected graph up to max_n, every pair subset, every level in ks."""
    out = []
    for g in connected_graphs(max_n):
        for p in all_pair_sets(g):
            for k in ks:
                out.append((g, p, k))
    return out


def equivalence_fixture_instances() -> list:
    """Three small instances whose gadgets stay within exhaustive reach."""
    from .families import cycle_graph, path_graph

    c5 = cycle_graph(5)
    p5 = path_graph(5)
    p3 = path_graph(3)
    return [
        (c5, pair_set(combinations(range(5), 2)), 2),
        (p5, pair_set(combinations(range(5), 2)), 2),
        (p3, pair_set([(0, 2)]), 2),
    ]


def pendant_sweep_instances(max_n: int, k: int = 3) -> list:
    return [(g, None, k) for g in connected_graphs(max_n)]


def suite_jobs(name: str, cap: int = 18) -> list:
    """Instances and checks for a named sweep suite.

    Returns (check, g, p, k) tuples.  "core" is a fast smoke pass; "full" is
    the complete sweep the acceptance tests run.
    """
    def expand(instances, checks):
        return [(check, g, p, k) for g, p, k in instances for check in checks]

    if name == "distances":
        return expand(gadget_sweep_instances(4, (2, 3, 4, 5)), ("pair-distance", "nonpair-distance"))
    if name == "confinement":
        return expand(gadget_sweep_instances(4, (2, 3)), ("confinement",))
    if name == "lift":
        return expand(gadget_sweep_instances(4, (2, 3, 4, 5)), ("lift-validity",))
    if name == "equivalence":
        return expand(equivalence_fixture_instances(), ("equivalence",))
    if name == "pendant":
        return expand(pendant_sweep_instances(5), ("pendant-equivalence",))
    if name == "core":
        jobs = expand(
            gadget_sweep_instances(3, (2, 3, 4, 5)),
            ("pair-distance", "nonpair-distance"),
        )
        jobs += expand(gadget_sweep_instances(3, (2, 3)), ("confinement", "lift-validity"))
        jobs += expand(equivalence_fixture_instances(), ("equivalence",))
        jobs += expand(pendant_sweep_instances(4), ("pendant-equivalence",))
        return jobs
    if name == "full":
        jobs = suite_jobs("distances", cap)
        jobs += suite_jobs("confinement", cap)
        jobs += suite_jobs("lift", cap)
        jobs += suite_jobs("equivalence", cap)
        jobs += suite_jobs("pendant", cap)
        return jobs
    raise ValueError(f"unknown suite {name!r}")


SUITE_NAMES = ("core", "full", "distances", "confinement", "lift", "equivalence", "pendant")


def run_suite(name: str, cap: int = 18, jobs: int = 1) -> list:
    """Run a named suite and return its sorted reports."""
    work = [(check, g, p, k, cap) for check, g, p, k in suite_jobs(name, cap)]
    if jobs > 1:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            reports = pool.starmap(run_check, work, chunksize=16)
    else:
        reports = [run_check(*item) for item in work]
    return sorted(reports, key=lambda r: (r.check, r.instance, r.status))
