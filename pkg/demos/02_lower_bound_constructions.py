# Two ways to build red graphs that avoid a clique and a blue book.
#
# The Burr graph is complete (p-1)-partite with parts of size n-1.  It has
# no K_p, and every independent set in it has fewer than n vertices, so its
# complement has no B_{k,n}.

from bookramsey.constructions import GoodnessInstance, book_only_if_graph, burr_graph
from bookramsey.graph import complement
from bookramsey.ramsey import ArrowingInstance, arrows
from bookramsey.search import find_book, find_multipartite

g = burr_graph(3, 1, 6)
inst = ArrowingInstance("clique:3", "book:2,6", g.n)
print("Burr graph on", g.n, "vertices arrows (K3, B_{2,6})?", arrows(g, inst).arrows)

# For a target K_p(a_1, ..., a_p) with a_2 >= 2 one can do better by a_1-1
# vertices: put a C4-free, almost a_1-regular graph inside the first part.
inst = GoodnessInstance(p=3, k=2, n=9, t=2, a=(2, 2, 2), seed=1, context="only_if")
g = book_only_if_graph(inst)
target = ArrowingInstance("multipartite:2,2,2", "book:2,9", g.n)
print("only-if graph on", g.n, "vertices arrows (K(2,2,2), B_{2,9})?", arrows(g, target).arrows)

# The construction needs the last part to be at least a_2.  With a = (1, 2, 1)
# the two singleton parts can sit on one matching edge inside the first part.
bad = book_only_if_graph(GoodnessInstance(p=3, k=2, n=10, t=2, a=(1, 2, 1), context="only_if"))
print("K(1,2,1) inside the a=(1,2,1) graph:", find_multipartite(bad, [1, 2, 1]).parts)

# The complement side is unaffected: there is still no blue book.
print("blue B_{2,10} present?", find_book(complement(bad), 2, 10) is not None)
