"""The requested-pairs variant and why path length is capped.

Instead of connecting every pair, only a chosen set P must be rainbow
connected.  Under k colors a rainbow path has at most k internal vertices,
hence length at most k+1; the solver and the verifier both lean on that cap,
and path_budget(n, k) bounds how many partial paths a search can ever touch.
"""

from rvckit import (
    decide_subset_rvc,
    pair_set,
    path_budget,
    path_graph,
    search_stats,
)

p5 = path_graph(5)

# Ask only for the two ends.  Under 2 colors no path of length <= 3 reaches
# across P5, so the answer is no; a third color opens the straight route.
ends = pair_set([(0, 4)])
print("P = {(0, 4)}, k = 2:", decide_subset_rvc(p5, ends, 2).decision)
res = decide_subset_rvc(p5, ends, 3)
print("P = {(0, 4)}, k = 3:", res.decision, "witness", list(res.witness.colors))

# Pairs with a single internal vertex are free: one internal vertex cannot
# clash with itself, so even one color suffices.
near = pair_set([(0, 2), (1, 3), (2, 4)])
print("near pairs, k = 1:", decide_subset_rvc(p5, near, 1).decision)

# Dropping pairs never flips a yes to a no, and extra colors never hurt.
both = pair_set([(0, 4), (0, 2)])
for k in (2, 3, 4):
    print(f"P = {{(0, 4), (0, 2)}}, k = {k}:", decide_subset_rvc(p5, both, k).decision)

# The search budget in action: every rainbow-path query accounts its state
# expansions and stays below the closed-form bound.
search_stats.reset()
decide_subset_rvc(p5, both, 3)
print(
    "searches:", search_stats.calls,
    "max expansions:", search_stats.max_expansions,
    "budget:", path_budget(p5.n, 3),
)
