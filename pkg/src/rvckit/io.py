"""JSON instance files and DOT export.

An instance file is a single JSON object with keys, in this order:

    n         vertex count (required)
    edges     sorted list of [u, v] with u < v (required)
    pairs     sorted list of requested [a, b] pairs (optional)
    coloring  list of n colors in 1..k (optional)
    k         color budget, or gadget level in gadget files (optional)
    labels    per-vertex label strings, gadget files only (optional)

Emission is deterministic: fixed key order, sorted lists, two-space indent,
trailing newline.  ``pairs: []`` means "an explicitly empty pair set" and is
distinct from omitting the key.
"""

from __future__ import annotations

import json
import re

from .gadgets import GadgetGraph, label_level
from .graphs import (
    Graph,
    PairSet,
    VertexColoring,
    graph_from_edges,
    pair_set,
)


class InstanceFormatError(ValueError):
    """Raised when an instance file cannot be parsed or fails validation."""


def _load_object(text: str) -> dict:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceFormatError(
            f"invalid JSON at line {e.lineno} column {e.colno}: {e.msg}"
        ) from None
    if not isinstance(obj, dict):
        raise InstanceFormatError("instance file must be a JSON object")
    return obj


def _parse_graph(obj: dict) -> Graph:
    n = obj.get("n")
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InstanceFormatError("field 'n' must be a positive integer")
    edges = obj.get("edges")
    if not isinstance(edges, list):
        raise InstanceFormatError("field 'edges' must be a list of [u, v] pairs")
    norm = []
    for idx, e in enumerate(edges):
        if not isinstance(e, list) or len(e) != 2 or not all(isinstance(x, int) for x in e):
            raise InstanceFormatError(f"edges[{idx}] must be a two-integer list")
        norm.append((e[0], e[1]))
    try:
        return graph_from_edges(n, norm)
    except ValueError as e:
        raise InstanceFormatError(f"bad edge list: {e}") from None


def _parse_pairs(obj: dict, g: Graph) -> PairSet | None:
    raw = obj.get("pairs")
    if raw is None:
        return None
    if not isinstance(raw, list):
        raise InstanceFormatError("field 'pairs' must be a list of [a, b] pairs")
    out = []
    for idx, p in enumerate(raw):
        if not isinstance(p, list) or len(p) != 2 or not all(isinstance(x, int) for x in p):
            raise InstanceFormatError(f"pairs[{idx}] must be a two-integer list")
        out.append((p[0], p[1]))
    try:
        ps = pair_set(out)
        ps.check_in_range(g)
    except ValueError as e:
        raise InstanceFormatError(f"bad pair list: {e}") from None
    return ps


def _parse_coloring(obj: dict, g: Graph) -> VertexColoring | None:
    raw = obj.get("coloring")
    if raw is None:
        return None
    if not isinstance(raw, list) or not all(
        isinstance(x, int) and not isinstance(x, bool) for x in raw
    ):
        raise InstanceFormatError("field 'coloring' must be a list of integers")
    if len(raw) != g.n:
        raise InstanceFormatError(
            f"coloring has {len(raw)} entries, graph has {g.n} vertices"
        )
    k = obj.get("k", max(raw, default=1))
    if not isinstance(k, int) or isinstance(k, bool) or k < 1:
        raise InstanceFormatError("field 'k' must be a positive integer")
    try:
        return VertexColoring(tuple(raw), k)
    except ValueError as e:
        raise InstanceFormatError(f"bad coloring: {e}") from None


def parse_instance(text: str):
    """Parse an instance file into (graph, pairs, coloring).

    ``pairs`` and ``coloring`` are None when the corresponding key is absent.
    """
    obj = _load_object(text)
    g = _parse_graph(obj)
    return g, _parse_pairs(obj, g), _parse_coloring(obj, g)


def emit_instance(
    g: Graph,
    pairs: PairSet | None = None,
    coloring: VertexColoring | None = None,
    k: int | None = None,
    labels=None,
) -> str:
    """Serialize an instance deterministically; see the module docstring."""
    if coloring is not None and k is not None and coloring.k != k:
        raise ValueError(f"coloring declares k={coloring.k} but k={k} was requested")
    obj: dict = {"n": g.n, "edges": [list(e) for e in sorted(g.edges)]}
    if pairs is not None:
        obj["pairs"] = [list(p) for p in pairs]
    if coloring is not None:
        obj["coloring"] = list(coloring.colors)
        obj["k"] = coloring.k
    elif k is not None:
        obj["k"] = k
    if labels is not None:
        obj["labels"] = list(labels)
    lines = [f'  "{key}": {json.dumps(value)}' for key, value in obj.items()]
    return "{\n" + ",\n".join(lines) + "\n}\n"


# ---------------------------------------------------------------------------
# Gadget files: instances plus per-vertex labels and the level k.


def label_text(label: tuple, k: int) -> str:
    """Human-readable form of a gadget vertex label."""
    kind = label[0]
    if kind == "hub":
        return "u"
    if kind == "base":
        return f"v_{{{label[1]},{k}}}"
    if kind == "v":
        _, i, lvl, a = label
        return f"v_{{{i},{lvl}}}^{{({a})}}"
    if kind in ("u", "w"):
        _, i, j, a = label
        return f"{kind}_{{{i},{j}}}^{{({a})}}"
    raise ValueError(f"unknown label {label!r}")


_RUNG_RE = re.compile(r"^([uvw])_\{(\d+),(\d+)\}\^\{\((\d+)\)\}$")
_BASE_RE = re.compile(r"^v_\{(\d+),(\d+)\}$")


def parse_label(text: str, k: int) -> tuple:
    """Inverse of :func:`label_text`."""
    if text == "u":
        return ("hub",)
    m = _RUNG_RE.match(text)
    if m:
        kind, i, j, a = m.group(1), int(m.group(2)), int(m.group(3)), int(m.group(4))
        if kind == "v":
            return ("v", i, j, a)
        return (kind, i, j, a)
    m = _BASE_RE.match(text)
    if m:
        i, lvl = int(m.group(1)), int(m.group(2))
        if lvl != k:
            raise InstanceFormatError(
                f"label {text!r} sits at level {lvl}, expected base level {k}"
            )
        return ("base", i)
    raise InstanceFormatError(f"unrecognized vertex label {text!r}")


def emit_gadget(gg: GadgetGraph) -> str:
    labels = [label_text(lab, gg.k) for lab in gg.labels]
    return emit_instance(gg.graph, pairs=gg.pairs_k, k=gg.k, labels=labels)


def parse_gadget(text: str) -> GadgetGraph:
    """Read a gadget file back into a GadgetGraph."""
    obj = _load_object(text)
    g = _parse_graph(obj)
    pairs = _parse_pairs(obj, g)
    if pairs is None:
        raise InstanceFormatError("gadget file must carry a 'pairs' key")
    k = obj.get("k")
    if not isinstance(k, int) or isinstance(k, bool) or k < 2:
        raise InstanceFormatError("gadget file must carry an integer 'k' >= 2")
    raw_labels = obj.get("labels")
    if not isinstance(raw_labels, list) or len(raw_labels) != g.n:
        raise InstanceFormatError("gadget file must carry one label per vertex")
    labels = tuple(parse_label(str(s), k) for s in raw_labels)
    base_map = {lab[1]: vid for vid, lab in enumerate(labels) if lab[0] == "base"}
    if sorted(base_map) != list(range(len(base_map))) or not base_map:
        raise InstanceFormatError("base labels must cover indices 0..n-1 of the source graph")
    base = tuple(base_map[i] for i in range(len(base_map)))
    base_set = set(base)
    base_edges = frozenset(e for e in g.edges if e[0] in base_set and e[1] in base_set)
    return GadgetGraph(g, k, labels, base, pairs, base_edges)


# ---------------------------------------------------------------------------
# DOT export


def emit_dot(obj, pairs: PairSet | None = None) -> str:
    """Render a graph or a gadget as Graphviz DOT text.

    Gadgets come out clustered by level, with base vertices doubled and
    requested pairs drawn as dashed red non-constraint edges.
    """
    if isinstance(obj, GadgetGraph):
        return _gadget_dot(obj)
    return _plain_dot(obj, pairs)


def _pair_edge_lines(pairs: PairSet | None) -> list:
    if not pairs:
        return []
    return [
        f"  {a} -- {b} [style=dashed, color=red, constraint=false];" for a, b in pairs
    ]


def _plain_dot(g: Graph, pairs: PairSet | None) -> str:
    lines = ["graph G {", "  node [shape=circle];"]
    lines += [f"  {v};" for v in range(g.n)]
    lines += [f"  {u} -- {v};" for u, v in sorted(g.edges)]
    lines += _pair_edge_lines(pairs)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _gadget_dot(gg: GadgetGraph) -> str:
    by_level: dict = {}
    for vid, lab in enumerate(gg.labels):
        by_level.setdefault(label_level(lab, gg.k), []).append(vid)
    lines = ["graph gadget {", "  node [shape=circle];"]
    for idx, lvl in enumerate(sorted(by_level)):
        name = "hub" if lvl < 0 else f"level {lvl}"
        lines.append(f"  subgraph cluster_{idx} {{")
        lines.append(f'    label="{name}";')
        for vid in sorted(by_level[lvl]):
            text = label_text(gg.labels[vid], gg.k)
            shape = ", shape=doublecircle" if gg.labels[vid][0] == "base" else ""
            lines.append(f'    {vid} [label="{text}"{shape}];')
        lines.append("  }")
    for u, v in sorted(gg.graph.edges):
        style = " [penwidth=2]" if (u, v) in gg.base_edges else ""
        lines.append(f"  {u} -- {v}{style};")
    lines += _pair_edge_lines(gg.pairs_k)
    lines.append("}")
    return "\n".join(lines) + "\n"
