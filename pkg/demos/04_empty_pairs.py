# Empty pairs in triangle-free graphs.
#
# For an independent spine B of size k, the vertices A with no neighbour in
# B form the pages of a book in the complement.  A and B have no edges
# between them, and the search reports the best pair for each k.

import numpy as np

from bookramsey.graph import Graph, petersen_graph
from bookramsey.lemmas import empty_pair_extract

g = petersen_graph()
res = empty_pair_extract(g)
for k, (A, B) in sorted(res.per_k.items()):
    print(f"k={k}: |A|={len(A)} B={B} via {res.method[k]}")
print("best pair", res.A, res.B)

# On a random triangle-free graph the same guarantee holds: no crossing edges.
rng = np.random.default_rng(0)
rows = [0] * 30
for u, v in rng.permutation([(u, v) for u in range(30) for v in range(u + 1, 30)]):
    u, v = int(u), int(v)
    if rng.random() < 0.2 and not rows[u] & rows[v]:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
h = Graph(30, rows)
res = empty_pair_extract(h)
crossing = sum(h.has_edge(a, b) for a in res.A for b in res.B)
print(f"30-vertex graph with {h.num_edges()} edges: |A|={len(res.A)}, |B|={len(res.B)}, crossing edges {crossing}")
