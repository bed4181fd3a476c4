"""Pendants turn proper coloring into a requested-pairs question.

Attach a fresh degree-1 vertex x_v to every vertex v, then request the pair
(x_u, x_v) for each original edge uv.  Any path between two pendants must
pass through both owners, so rainbow-connecting the requested pairs with
k >= 3 colors is exactly as hard as properly k-coloring the source graph.
"""

from rvckit import (
    chromatic_decision,
    coloring,
    complete_graph,
    cycle_graph,
    decide_subset_rvc,
    pendant_lift,
    pendant_project,
    pendant_reduction,
)

c5 = cycle_graph(5)
inst = pendant_reduction(c5)
print("C5 pendant instance: n =", inst.graph.n, "pairs =", list(inst.pairs))

# Forward: a proper 3-coloring of C5 lifts (pendants copy their owner) to a
# coloring that serves every requested pair.
proper = coloring([1, 2, 1, 2, 3], k=3)
lifted = pendant_lift(inst, proper)
print("lifted colors:", list(lifted.colors))
print("serves the pairs:", decide_subset_rvc(inst.graph, inst.pairs, 3).decision)

# Backward: any witness for the pendant pairs restricts to a proper coloring
# of the source.  pendant_project checks the pairs before restricting.
res = decide_subset_rvc(inst.graph, inst.pairs, 3)
back = pendant_project(inst, res.witness)
print("projected witness:", list(back.colors))
print(
    "proper on C5:",
    all(back.colors[a] != back.colors[b] for a, b in c5.edges),
)

# The two decisions agree on both polarities.  K4 needs four colors, so its
# pendant instance is a no at k = 3.
for g, name in [(c5, "C5"), (complete_graph(4), "K4")]:
    chrom = chromatic_decision(g, 3).decision
    other = pendant_reduction(g)
    pend = decide_subset_rvc(other.graph, other.pairs, 3).decision
    print(f"{name}: 3-colorable = {chrom}, pendant decision = {pend}")
