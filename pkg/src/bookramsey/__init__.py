"""Book Ramsey numbers: exact search, lower-bound constructions and executable lemmas."""

from .graph import (
    Graph, complement, complete_graph, complete_multipartite, cycle_graph,
    empty_graph, induced_subgraph, path_graph, petersen_graph, turan_graph,
)
from .graph6 import Graph6Error, parse_graph6, serialize_graph6
from .search import (
    BookWitness, MultipartiteWitness, check_book, check_multipartite,
    find_book, find_clique, find_independent_set, find_multipartite,
)
from .counting import (
    clique_count_report, count_cliques, edge_loads, extension_count, heavy_edges,
)
from .constructions import (
    GoodnessInstance, burr_graph, book_only_if_graph, c4_free_almost_regular,
    derived_params, dk_witness, random_threshold_graph,
)
from .lemmas import (
    BookFound, GreedyParams, HypothesisViolated, MultipartiteFound, TargetFound,
    book_partition, empty_pair_extract, find_blowup, greedy_step, make_kp_free,
    partition_audit, stability_partition,
)
from .ramsey import ArrowingInstance, arrows, exact_ramsey, goodness_gap, n_arrows, parse_pattern

__version__ = "0.1.0"
