# Walking through the constructive lemmas on small graphs.

from fractions import Fraction

from bookramsey.graph import complete_graph, complete_multipartite, cycle_graph, empty_graph
from bookramsey.lemmas import (
    GreedyParams, book_partition, find_blowup, greedy_step, make_kp_free, stability_partition, trace,
)
from bookramsey.search import MultipartiteWitness

# A triangle-free graph with an induced edge {0, 1}: every vertex misses one
# of its ends, so the vertex set splits into two books of the complement.
books = book_partition(cycle_graph(5), MultipartiteWitness(((0,), (1,)), True))
for b in books:
    print("spine", b.spine, "pages", b.pages)

# One greedy step from an induced K_2(16) inside K_3(16).  Every class is
# small, so the step grows the blow-up by one part instead of returning a book.
g = complete_multipartite([16, 16, 16])
parts = MultipartiteWitness((tuple(range(16)), tuple(range(16, 32))), True)
out = greedy_step(g, parts, GreedyParams(k=1, r=2, s=2, t=16))
print(out.branch, out.witness.parts)
print("trace keys:", sorted(trace("greedy", g, out)))

# With no edges at all the blow-up search returns the spanning star book.
e = empty_graph(10)
out = find_blowup(e, e.full, p=3, k=1, x=1, n=10)
print(out.branch, "order", out.witness.order)

# Removal: every edge of K_5 lies in three triangles, above the threshold,
# so all of them go and the rest is triangle-free.
res = make_kp_free(complete_graph(5), 3, Fraction(1, 2))
print("threshold", res.threshold, "removed", len(res.removed), "edges; triangle-free:", res.audit["kp_free"])

# Stability: remove heavy edges, then find a locally optimal (p-1)-partition.
part, internal = stability_partition(complete_multipartite([3, 3, 3]), 4)
print("parts", part.parts, "internal edges", internal)
