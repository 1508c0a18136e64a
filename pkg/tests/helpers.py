"""Seeded graph generators shared by the test modules."""

from __future__ import annotations

from fractions import Fraction

import numpy as np
import networkx as nx

from bookramsey.graph import (
    Graph, complement, complete_graph, complete_multipartite, cycle_graph, empty_graph,
    path_graph, petersen_graph, turan_graph,
)
from bookramsey.search import find_clique, find_independent_set


def gnp(n: int, q: float, rng: np.random.Generator) -> Graph:
    iu, ju = np.triu_indices(n, 1)
    keep = rng.random(iu.size) < q
    return Graph.from_edges(n, zip(iu[keep].tolist(), ju[keep].tolist()))


def corpus() -> list[tuple[str, Graph]]:
    """Named small graphs, every graph on up to 5 vertices, and seeded random ones up to 12."""
    out = [
        ("K4", complete_graph(4)), ("K5", complete_graph(5)), ("C5", cycle_graph(5)),
        ("P4", path_graph(4)), ("E6", empty_graph(6)), ("K333", complete_multipartite([3, 3, 3])),
        ("petersen", petersen_graph()), ("T12_3", turan_graph(12, 3)), ("K1", complete_graph(1)),
        ("E0", empty_graph(0)),
    ]
    for i, h in enumerate(nx.graph_atlas_g()):
        if h.number_of_nodes() <= 5:
            out.append((f"atlas{i}", Graph.from_edges(h.number_of_nodes(), h.edges())))
    rng = np.random.default_rng(2024)
    for i in range(60):
        n = int(rng.integers(6, 13))
        out.append((f"gnp{i}", gnp(n, float(rng.uniform(0.15, 0.85)), rng)))
    return out


def kp_free_with_planted(p: int, k: int, extra: int, q: float, rng) -> tuple[Graph, tuple]:
    """K_p-free graph containing an induced K_{p-1}(k) on vertices ``0..(p-1)k-1``.

    Other pairs are offered in random order, each kept with probability ``q``
    unless it would close a ``K_p`` or add an edge inside a planted part.
    """
    n = (p - 1) * k + extra
    parts = tuple(tuple(range(i * k, (i + 1) * k)) for i in range(p - 1))
    owner = {v: i for i, part in enumerate(parts) for v in part}
    rows = [0] * n
    for i, a in enumerate(parts):
        for b in parts[i + 1:]:
            for u in a:
                for v in b:
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)
             if not (u in owner and v in owner)]
    for idx in rng.permutation(len(pairs)):
        u, v = pairs[idx]
        if rng.random() >= q:
            continue
        common = rows[u] & rows[v]
        if p == 2 or (common and find_clique(Graph(n, rows), p - 2, among=common) is not None):
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows), parts


def planted_blowup(r: int, t: int, extra: int, q: float, rng) -> tuple[Graph, tuple]:
    """Random graph with an induced K_r(t) planted on ``0..rt-1``; the rest is G(n, q)."""
    n, core = r * t + extra, r * t
    parts = tuple(tuple(range(i * t, (i + 1) * t)) for i in range(r))
    edges = [(u, v) for u, v in gnp(n, q, rng).edges() if v >= core]
    edges += list(complete_multipartite([t] * r).edges())
    return Graph.from_edges(n, edges), parts


def bounded_independence(m: int, z: int, rng) -> Graph:
    """Random graph on m vertices with no independent set of size z (edges added until none remains)."""
    g = gnp(m, float(rng.uniform(0.2, 0.6)), rng)
    while True:
        ind = find_independent_set(g, z)
        if ind is None:
            return g
        a, b = sorted(int(x) for x in rng.choice(ind, size=2, replace=False))
        g = g.add_edges([(a, b)])


def triangle_free(n: int, rng, attempts: int | None = None) -> Graph:
    """Random maximal-ish triangle-free graph built by offering random pairs."""
    rows = [0] * n
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    keep = float(rng.uniform(0.3, 1.0))
    for idx in rng.permutation(len(pairs))[: attempts or len(pairs)]:
        u, v = pairs[idx]
        if rows[u] & rows[v] or rng.random() > keep:
            continue
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, rows)


def min_degree_graph(m: int, beta, rng, family: int) -> Graph:
    """Graph on m vertices with minimum degree at least (1/3 + beta) m, from one of three families."""
    need = (Fraction(1, 3) + Fraction(beta)) * m
    while True:
        if family == 0:
            g = gnp(m, float(rng.uniform(0.5, 0.9)), rng)
        elif family == 1:
            # dense bipartite core plus a sprinkling of inside edges
            half = m // 2
            rows = [0] * m
            for u in range(m):
                for v in range(u + 1, m):
                    cross = (u < half) != (v < half)
                    if rng.random() < (0.97 if cross else 0.04):
                        rows[u] |= 1 << v
                        rows[v] |= 1 << u
            g = Graph(m, rows)
        else:
            g = complement(gnp(m, float(rng.uniform(0.05, 0.3)), rng))
        if g.min_degree() >= need:
            return g
