"""Bitset-backed simple undirected graphs.

Each vertex's neighbourhood is stored as a Python ``int`` whose bit ``v`` is
set iff ``v`` is a neighbour.  Vertex sets are plain ``int`` masks as well, so
intersections, unions and popcounts are single big-int operations.
"""

from __future__ import annotations

import json
from itertools import combinations
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 4096


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def members(mask: int) -> tuple[int, ...]:
    return tuple(iter_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def popcount(mask: int) -> int:
    return mask.bit_count()


def above(v: int) -> int:
    """Mask selecting every vertex id strictly greater than ``v`` (unbounded)."""
    return ~((1 << (v + 1)) - 1)


class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``rows[v]`` is the neighbourhood bitset of ``v``.  Construct through
    :meth:`from_edges` or :meth:`from_rows`; the latter validates symmetry.
    """

    __slots__ = ("n", "rows", "_hash")

    def __init__(self, n: int, rows: Sequence[int]):
        if not 0 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [0, {MAX_VERTICES}]")
        if len(rows) != n:
            raise ValueError("need exactly one adjacency row per vertex")
        self.n = n
        self.rows = tuple(rows)
        self._hash = None

    @classmethod
    def from_rows(cls, rows: Sequence[int]) -> "Graph":
        n = len(rows)
        full = (1 << n) - 1
        for u, row in enumerate(rows):
            if row < 0 or row & ~full:
                raise ValueError(f"row {u} references a vertex outside 0..{n - 1}")
            if row >> u & 1:
                raise ValueError(f"loop at vertex {u}")
            for v in iter_bits(row):
                if not rows[v] >> u & 1:
                    raise ValueError(f"asymmetric adjacency between {u} and {v}")
        return cls(n, rows)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) outside 0..{n - 1}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def num_edges(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u, row in enumerate(self.rows):
            yield from ((u, v) for v in iter_bits(row & above(u)))

    def neighbors(self, v: int) -> tuple[int, ...]:
        return members(self.rows[v])

    def common_neighbors(self, vs: Iterable[int]) -> int:
        m = self.full
        for v in vs:
            m &= self.rows[v]
        return m

    def edges_within(self, mask: int) -> int:
        return sum((self.rows[v] & mask).bit_count() for v in iter_bits(mask)) // 2

    def edges_between(self, a: int, b: int) -> int:
        """Number of pairs (x, y), x in ``a``, y in ``b`` that are edges (disjoint sets)."""
        return sum((self.rows[v] & b).bit_count() for v in iter_bits(a))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph(self.n, rows)

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return Graph(self.n, rows)

    def to_json(self) -> str:
        return json.dumps({"n": self.n, "edges": [list(e) for e in self.edges()]})

    @classmethod
    def from_json(cls, text: str) -> "Graph":
        data = json.loads(text)
        return cls.from_edges(int(data["n"]), (tuple(e) for e in data["edges"]))

    def to_networkx(self):
        import networkx as nx

        h = nx.Graph()
        h.add_nodes_from(range(self.n))
        h.add_edges_from(self.edges())
        return h

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.rows == other.rows

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.n, self.rows))
        return self._hash

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges()})"


def complement(g: Graph) -> Graph:
    full = g.full
    return Graph(g.n, [full & ~row & ~(1 << v) for v, row in enumerate(g.rows)])


def induced_subgraph(g: Graph, vertices: Iterable[int] | int) -> Graph:
    """Subgraph on ``vertices``, relabelled ``0..|s|-1`` in ascending vertex order."""
    vs = members(vertices) if isinstance(vertices, int) else sorted(set(vertices))
    for v in vs:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} outside 0..{g.n - 1}")
    index = {v: i for i, v in enumerate(vs)}
    rows = []
    sel = mask_of(vs)
    for v in vs:
        rows.append(mask_of(index[u] for u in iter_bits(g.rows[v] & sel)))
    return Graph(len(vs), rows)


def disjoint_union(*graphs: Graph) -> Graph:
    rows: list[int] = []
    offset = 0
    for h in graphs:
        rows.extend(r << offset for r in h.rows)
        offset += h.n
    return Graph(offset, rows)


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def complete_multipartite(sizes: Sequence[int]) -> Graph:
    """Complete multipartite graph with consecutive blocks of the given sizes."""
    n = sum(sizes)
    full = (1 << n) - 1
    rows = []
    start = 0
    for size in sizes:
        block = ((1 << size) - 1) << start
        rows.extend([full & ~block] * size)
        start += size
    return Graph(n, rows)


def turan_graph(n: int, r: int) -> Graph:
    q, rem = divmod(n, r)
    return complete_multipartite([q + 1] * rem + [q] * (r - rem))


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def blocks(sizes: Sequence[int]) -> list[int]:
    """Vertex masks of consecutive blocks, matching :func:`complete_multipartite`."""
    out, start = [], 0
    for size in sizes:
        out.append(((1 << size) - 1) << start)
        start += size
    return out


def all_pairs(mask: int) -> Iterator[tuple[int, int]]:
    yield from combinations(members(mask), 2)
