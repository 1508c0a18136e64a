# Small Ramsey numbers of a triangle against books.
#
# A book B_{k,n} is a k-clique (the spine) plus n-k pages, each page joined
# to the whole spine and to nothing else.  r(K_3, B_{k,n}) is the least N
# such that every graph on N vertices has a triangle or an independent
# copy of B_{k,n} in its complement.

from bookramsey import exact_ramsey, goodness_gap
from bookramsey.ramsey import ArrowingInstance, arrows, burr_bound
from bookramsey.graph6 import serialize_graph6

for H in ["book:1,2", "book:1,3", "book:1,4", "book:2,3", "book:2,4"]:
    res = exact_ramsey("clique:3", H)
    lb = burr_bound("clique:3", H)
    print(f"r(K3, {H:9s}) = {res.r}   lower bound {lb}   critical graph {serialize_graph6(res.witness)}")

# The two engines are independent: one grows non-arrowing graphs vertex by
# vertex up to isomorphism, the other enumerates every labelled graph.
a = exact_ramsey("clique:3", "book:2,4", engine="dfs")
b = exact_ramsey("clique:3", "book:2,4", engine="exhaustive")
print("dfs nodes", a.nodes_explored, "exhaustive nodes", b.nodes_explored, "same answer:", a.r == b.r)

# The critical graph on r-1 vertices really avoids both patterns.
inst = ArrowingInstance("clique:3", "book:2,4", a.r - 1)
print("witness arrows?", arrows(a.witness, inst).arrows)

# The gap to (p-1)(n-1)+1 is zero exactly when the book is 3-good.
for k, n in [(1, 3), (2, 3), (2, 4)]:
    print(f"goodness gap for B_{k},{n}: {goodness_gap(3, k, n)}")
