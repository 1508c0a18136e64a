"""Small Ramsey numbers r(G, H) by exact search, and goodness gaps.

Two engines share one semantics: ``N -> (G, H)`` holds iff every red/blue
colouring of ``K_N`` has a red ``G`` or a blue ``H``.  A colouring is stored
as its red graph.

``dfs`` grows the class of non-arrowing red graphs one vertex at a time,
keeping one representative per isomorphism class (the class is hereditary,
so every non-arrowing graph on ``N+1`` vertices extends one on ``N``).
``exhaustive`` enumerates colourings as integers with numpy, fixing vertex
0's red neighbourhood to a prefix ``{1..d}`` to break symmetry.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations, permutations

import networkx as nx
import numpy as np
from networkx.algorithms import isomorphism

from .graph import (
    Graph, complement, complete_graph, complete_multipartite, cycle_graph, path_graph,
)
from .graph6 import parse_graph6, serialize_graph6
from .search import find_book, find_clique, find_multipartite

DFS_MAX_N = 10
EXHAUSTIVE_MAX_EDGES = 28
PATTERN_MAX_ORDER = 12


@dataclass(frozen=True)
class Pattern:
    """A named small graph with its chromatic data.

    ``kind`` selects a specialised containment search; ``sigma`` is the
    smallest colour-class size over all proper ``chi``-colourings.
    """

    kind: str
    params: tuple[int, ...]
    graph: Graph
    chi: int
    sigma: int

    @property
    def order(self) -> int:
        return self.graph.n

    @property
    def name(self) -> str:
        if self.kind == "graph6":
            return "g6:" + serialize_graph6(self.graph)
        return f"{self.kind}:{','.join(map(str, self.params))}"

    def connected(self) -> bool:
        return self.graph.n > 0 and nx.is_connected(self.graph.to_networkx())

    def find_in(self, host: Graph):
        """A copy of this pattern in ``host`` (not necessarily induced), or None.

        Cliques give a vertex tuple, books a :class:`BookWitness`,
        multipartite patterns a :class:`MultipartiteWitness`; anything else
        a ``{host vertex: pattern vertex}`` map.
        """
        if self.graph.n > host.n:
            return None
        if self.kind == "clique":
            return find_clique(host, self.params[0])
        if self.kind == "book":
            return find_book(host, *self.params)
        if self.kind == "multipartite":
            if len(self.params) == 1:
                return tuple(range(self.params[0]))
            return find_multipartite(host, sorted(self.params, reverse=True))
        if self.graph.num_edges() == 0:
            return {v: v for v in range(self.graph.n)}
        m = isomorphism.GraphMatcher(host.to_networkx(), self.graph.to_networkx())
        return next(m.subgraph_monomorphisms_iter(), None)

    def found_in(self, host: Graph) -> bool:
        return self.find_in(host) is not None


def chromatic_data(g: Graph) -> tuple[int, int]:
    """``(chi, sigma)`` by exhaustive colouring; classes are sorted so labels are canonical."""
    n = g.n
    if n == 0:
        return 0, 0
    if n > PATTERN_MAX_ORDER:
        raise ValueError(f"chromatic data only for at most {PATTERN_MAX_ORDER} vertices")
    for q in range(1, n + 1):
        best = None
        colour = [-1] * n

        def rec(v: int, used: int, sizes: list[int]):
            nonlocal best
            if v == n:
                if used == q:
                    s = min(sizes)
                    best = s if best is None else min(best, s)
                return
            if q - used > n - v:
                return
            for c in range(min(used + 1, q)):
                if any(colour[u] == c for u in g.neighbors(v) if u < v):
                    continue
                colour[v] = c
                sizes[c] += 1
                rec(v + 1, max(used, c + 1), sizes)
                sizes[c] -= 1
            colour[v] = -1

        rec(0, 0, [0] * q)
        if best is not None:
            return q, best
    raise AssertionError("unreachable")


def _book_graph(k: int, n: int) -> Graph:
    return complete_multipartite([1] * k + ([n - k] if n > k else []))


def parse_pattern(text: str) -> Pattern:
    """``clique:p``, ``book:k,n``, ``multipartite:a1,...``, ``cycle:n``, ``path:n``, ``star:n`` or ``g6:<graph6>``."""
    kind, _, arg = text.strip().partition(":")
    kind = kind.lower()
    if kind == "g6":
        g = parse_graph6(arg)
        chi, sigma = chromatic_data(g)
        return Pattern("graph6", (), g, chi, sigma)
    try:
        params = tuple(int(x) for x in arg.split(",")) if arg else ()
    except ValueError:
        raise ValueError(f"bad pattern parameters in {text!r}") from None
    if kind in ("clique", "k"):
        (p,) = params
        if p < 1:
            raise ValueError("clique needs p >= 1")
        return Pattern("clique", (p,), complete_graph(p), p, 1)
    if kind in ("book", "b"):
        k, n = params
        if not n >= k >= 1:
            raise ValueError("book needs n >= k >= 1")
        return Pattern("book", (k, n), _book_graph(k, n), k + 1 if n > k else k, 1)
    if kind in ("multipartite", "kp"):
        if not params or min(params) < 1:
            raise ValueError("multipartite needs positive part sizes")
        return Pattern("multipartite", params, complete_multipartite(params), len(params), min(params))
    if kind in ("cycle", "path", "star"):
        (n,) = params
        if kind == "cycle":
            if n < 3:
                raise ValueError("cycle needs n >= 3")
            g = cycle_graph(n)
        elif kind == "path":
            if n < 1:
                raise ValueError("path needs n >= 1")
            g = path_graph(n)
        else:
            if n < 1:
                raise ValueError("star needs n >= 1")
            g = complete_multipartite([1, n - 1]) if n > 1 else complete_graph(1)
        chi, sigma = chromatic_data(g)
        return Pattern(kind, (n,), g, chi, sigma)
    raise ValueError(f"unknown pattern kind {kind!r}")


def as_pattern(x) -> Pattern:
    return x if isinstance(x, Pattern) else parse_pattern(x)


@dataclass(frozen=True)
class ArrowingInstance:
    G: Pattern
    H: Pattern
    N: int

    def __post_init__(self):
        object.__setattr__(self, "G", as_pattern(self.G))
        object.__setattr__(self, "H", as_pattern(self.H))
        if self.N < 0:
            raise ValueError("N must be non-negative")

    def avoids(self, red: Graph) -> bool:
        """Is ``red`` (on ``N`` vertices) a colouring with no red ``G`` and no blue ``H``?"""
        return not arrows(red, self).arrows


@dataclass(frozen=True)
class Arrowing:
    arrows: bool
    side: str | None = None
    witness: object = None


def arrows(gamma: Graph, inst: ArrowingInstance) -> Arrowing:
    """Does ``gamma`` contain ``G`` or its complement contain ``H``?  Carries the copy found."""
    if gamma.n != inst.N:
        raise ValueError(f"graph has {gamma.n} vertices, instance expects {inst.N}")
    hit = inst.G.find_in(gamma)
    if hit is not None:
        return Arrowing(True, "G", hit)
    hit = inst.H.find_in(complement(gamma))
    if hit is not None:
        return Arrowing(True, "H", hit)
    return Arrowing(False)


@dataclass
class RamseyResult:
    G: str
    H: str
    r: int
    witness: Graph
    nodes_explored: int
    wall_ms: float
    engine: str

    def to_dict(self) -> dict:
        return {
            "G": self.G, "H": self.H, "r": self.r,
            "witness_graph6": serialize_graph6(self.witness),
            "nodes_explored": self.nodes_explored, "wall_ms": int(round(self.wall_ms)),
            "engine": self.engine,
        }


# --- dfs engine -------------------------------------------------------------------


class _IsoClasses:
    def __init__(self):
        self.buckets: dict[str, list[tuple[Graph, nx.Graph]]] = {}

    def add(self, g: Graph) -> bool:
        h = g.to_networkx()
        key = nx.weisfeiler_lehman_graph_hash(h, iterations=3)
        bucket = self.buckets.setdefault(key, [])
        if any(nx.is_isomorphic(h, other) for _, other in bucket):
            return False
        bucket.append((g, h))
        return True

    def graphs(self) -> list[Graph]:
        out = [g for b in self.buckets.values() for g, _ in b]
        out.sort(key=lambda g: (g.num_edges(), serialize_graph6(g)))
        return out


def _extend(g: Graph, nbrs: int) -> Graph:
    n = g.n
    rows = [row | ((nbrs >> v & 1) << n) for v, row in enumerate(g.rows)]
    rows.append(nbrs)
    return Graph(n + 1, rows)


def non_arrowing_levels(G, H, max_n: int = DFS_MAX_N):
    """Yield ``(N, representatives, nodes)`` for each level until the class dies out."""
    G, H = as_pattern(G), as_pattern(H)
    level = [Graph(0, [])]
    for N in range(1, max_n + 1):
        classes = _IsoClasses()
        nodes = 0
        for g in level:
            for nbrs in range(1 << g.n):
                nodes += 1
                cand = _extend(g, nbrs)
                if G.found_in(cand) or H.found_in(complement(cand)):
                    continue
                classes.add(cand)
        level = classes.graphs()
        yield N, level, nodes
        if not level:
            return


def _ramsey_dfs(G: Pattern, H: Pattern, max_n: int):
    total = 0
    last = Graph(0, [])
    for N, level, nodes in non_arrowing_levels(G, H, max_n):
        total += nodes
        if not level:
            return N, last, total
        last = level[0]
    raise ValueError(f"r({G.name}, {H.name}) exceeds the search bound {max_n}")


# --- exhaustive engine -------------------------------------------------------------


def _edge_index(N: int) -> dict[tuple[int, int], int]:
    return {e: i for i, e in enumerate(combinations(range(N), 2))}


def copy_masks(pattern: Pattern, N: int) -> np.ndarray:
    """Edge masks (bit per edge of ``K_N``) of every labelled copy of ``pattern`` in ``K_N``."""
    idx = _edge_index(N)
    v = pattern.order
    if v > N:
        return np.zeros(0, dtype=np.int64)
    edges = list(pattern.graph.edges())
    seen = set()
    for image in permutations(range(N), v):
        m = 0
        for a, b in edges:
            x, y = image[a], image[b]
            m |= 1 << idx[(x, y) if x < y else (y, x)]
        seen.add(m)
    return np.array(sorted(seen), dtype=np.int64)


def _surviving_code(N: int, gm: np.ndarray, hm: np.ndarray, chunk: int = 1 << 20):
    E = N * (N - 1) // 2
    rest_bits = E - (N - 1)
    nodes = 0
    for d in range(N):
        prefix = (1 << d) - 1
        for start in range(0, 1 << rest_bits, chunk):
            stop = min(start + chunk, 1 << rest_bits)
            codes = (np.arange(start, stop, dtype=np.int64) << (N - 1)) | prefix
            nodes += codes.size
            for m in gm:
                codes = codes[(codes & m) != m]
                if not codes.size:
                    break
            for m in hm:
                if not codes.size:
                    break
                codes = codes[(codes & m) != 0]
            if codes.size:
                return int(codes[0]), nodes
    return None, nodes


def _code_graph(N: int, code: int) -> Graph:
    return Graph.from_edges(N, (e for e, i in _edge_index(N).items() if code >> i & 1))


def _ramsey_exhaustive(G: Pattern, H: Pattern, max_n: int):
    total = 0
    last = Graph(0, [])
    for N in range(1, max_n + 1):
        if N * (N - 1) // 2 > EXHAUSTIVE_MAX_EDGES:
            break
        if N == 1:
            red = Graph(1, [0])
            total += 1
            if G.found_in(red) or H.found_in(red):
                return 1, last, total
            last = red
            continue
        gm, hm = copy_masks(G, N), copy_masks(H, N)
        code, nodes = _surviving_code(N, gm, hm)
        total += nodes
        if code is None:
            return N, last, total
        last = _code_graph(N, code)
    raise ValueError(f"r({G.name}, {H.name}) exceeds the exhaustive bound")


def n_arrows(N: int, G, H, engine: str = "dfs") -> bool:
    """``N -> (G, H)``: every graph on ``N`` vertices arrows."""
    G, H = as_pattern(G), as_pattern(H)
    if engine == "exhaustive":
        if N * (N - 1) // 2 > EXHAUSTIVE_MAX_EDGES:
            raise ValueError("exhaustive engine limited to K_8")
        if N == 1:
            return G.order <= 1 or H.order <= 1
        code, _ = _surviving_code(N, copy_masks(G, N), copy_masks(H, N))
        return code is None
    if engine != "dfs":
        raise ValueError(f"unknown engine {engine!r}")
    for n, level, _ in non_arrowing_levels(G, H, N):
        if not level:
            return True
    return False


def exact_ramsey(G, H, engine: str = "dfs", max_n: int = DFS_MAX_N) -> RamseyResult:
    """``r(G, H)`` with a critical colouring of ``K_{r-1}`` as witness (red graph)."""
    G, H = as_pattern(G), as_pattern(H)
    lb = _known_lower_bound(G, H)
    if lb > max_n:
        raise ValueError(f"r({G.name}, {H.name}) >= {lb} exceeds the search bound {max_n}")
    t0 = time.perf_counter()
    if engine == "dfs":
        r, witness, nodes = _ramsey_dfs(G, H, max_n)
    elif engine == "exhaustive":
        r, witness, nodes = _ramsey_exhaustive(G, H, max_n)
    else:
        raise ValueError(f"unknown engine {engine!r}")
    wall = (time.perf_counter() - t0) * 1000
    return RamseyResult(G.name, H.name, r, witness, nodes, wall, engine)


def _known_lower_bound(G: Pattern, H: Pattern) -> int:
    """Burr's bound in whichever orientation has a connected second pattern (1 if neither)."""
    lb = 1
    if H.connected():
        lb = max(lb, burr_bound(G, H))
    if G.connected():
        lb = max(lb, burr_bound(H, G))
    return lb


def burr_bound(G, H) -> int:
    """``(chi(G) - 1)(|H| - 1) + sigma(G)``."""
    G, H = as_pattern(G), as_pattern(H)
    return (G.chi - 1) * (H.order - 1) + G.sigma


def goodness_report(G, H, engine: str = "dfs", max_n: int = DFS_MAX_N) -> dict:
    """``r(G, H)`` against the general lower bound; gap zero means ``H`` is ``G``-good."""
    G, H = as_pattern(G), as_pattern(H)
    if not H.connected():
        raise ValueError("goodness is defined for connected H")
    res = exact_ramsey(G, H, engine, max_n)
    lb = burr_bound(G, H)
    return {"G": G.name, "H": H.name, "r": res.r, "lower_bound": lb, "gap": res.r - lb,
            "good": res.r == lb, "result": res.to_dict()}


def goodness_gap(p: int, k: int, n: int, engine: str = "dfs") -> int:
    """``r(K_p, B_{k,n}) - ((p-1)(n-1)+1)``."""
    return exact_ramsey(f"clique:{p}", f"book:{k},{n}", engine).r - ((p - 1) * (n - 1) + 1)


def lower_bound_colouring(G, H) -> Graph:
    """Red graph on ``burr_bound - 1`` vertices with no red ``G`` and, for connected ``H``, no blue ``H``.

    Red is complete multipartite with ``chi-1`` parts of ``|H|-1`` and one of
    ``sigma-1``; blue is the disjoint union of cliques inside the parts.
    """
    G, H = as_pattern(G), as_pattern(H)
    sizes = [H.order - 1] * (G.chi - 1) + ([G.sigma - 1] if G.sigma > 1 else [])
    return complete_multipartite(sizes)
