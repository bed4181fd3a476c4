"""Rainbow vertex-connection from the ground up.

A vertex coloring rainbow-connects a pair of vertices when some path
between them uses pairwise distinct colors on its internal vertices;
endpoints never count.  rvc(G) is the fewest colors that rainbow-connect
every pair.  This script walks the definitions on small named graphs.
"""

from rvckit import (
    complete_graph,
    coloring,
    cycle_graph,
    exists_rainbow_path,
    is_rainbow_vertex_connected,
    path_graph,
    rvc_exact,
    star_graph,
)

# A path on five vertices.  Its two ends are four edges apart, so any
# connecting path has three internal vertices, and those three need three
# distinct colors.
p5 = path_graph(5)
print("P5 edges:", sorted(p5.edges))

witnessless = coloring([1, 1, 1, 1, 1])
print("monochromatic, pair (0, 4):", exists_rainbow_path(p5, witnessless, 0, 4))

three = coloring([1, 1, 2, 3, 1], k=3)
w = exists_rainbow_path(p5, three, 0, 4)
print("three colors, pair (0, 4):", w.vertices)
print("fully connected under it:", is_rainbow_vertex_connected(p5, three))

# The exact value confirms the intuition: rvc(P_n) = n - 2.
for n in range(3, 8):
    value, _ = rvc_exact(path_graph(n))
    print(f"rvc(P{n}) = {value}")

# Two extremes.  Complete graphs need no colors at all: every pair is an
# edge, and an edge has no internal vertices.  Stars need exactly one: the
# hub is the single internal vertex of every cross path.
print("rvc(K4) =", rvc_exact(complete_graph(4))[0])
print("rvc(star with 6 leaves) =", rvc_exact(star_graph(6))[0])

# Cycles sit in between; the answer tracks the diameter.
for n in (4, 5, 6, 8):
    value, witness = rvc_exact(cycle_graph(n))
    print(f"rvc(C{n}) = {value}, witness {list(witness.colors) if witness else None}")
