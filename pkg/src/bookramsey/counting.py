"""Exact clique counting, extension counts and per-edge clique loads.

Everything here is integer or :class:`fractions.Fraction` arithmetic; threshold
comparisons downstream depend on that.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .graph import Graph, above, iter_bits, mask_of
from .search import is_clique, iter_cliques


def _count_in(g: Graph, cand: int, p: int) -> int:
    """Number of ``p``-cliques inside the vertex mask ``cand``."""
    if p == 0:
        return 1
    if p == 1:
        return cand.bit_count()
    rows = g.rows
    if p == 2:
        return sum((rows[v] & cand).bit_count() for v in iter_bits(cand)) // 2
    total = 0
    for v in iter_bits(cand):
        cand &= above(v)
        nxt = cand & rows[v]
        if nxt.bit_count() >= p - 1:
            total += _count_in(g, nxt, p - 1)
        if cand.bit_count() < p:
            break
    return total


def count_cliques(g: Graph, p: int) -> int:
    if p < 1:
        raise ValueError("clique size must be at least 1")
    return _count_in(g, g.full, p)


def edge_loads(g: Graph, p: int) -> dict[tuple[int, int], int]:
    """For every edge ``uv``: the number of ``K_p`` copies containing it."""
    if p < 2:
        raise ValueError("edge loads need p >= 2")
    return {(u, v): _count_in(g, g.rows[u] & g.rows[v], p - 2) for u, v in g.edges()}


def extension_count(g: Graph, s) -> int:
    """``|ext(S)|``: vertices joined to every vertex of the clique ``s``."""
    m = s if isinstance(s, int) else mask_of(s)
    if not is_clique(g, m):
        raise ValueError("extension count needs a clique")
    return g.common_neighbors(iter_bits(m)).bit_count()


@dataclass
class CliqueCountReport:
    p: int
    total: int
    per_edge: dict[tuple[int, int], int] = field(default_factory=dict)
    _graph: Graph | None = field(default=None, repr=False, compare=False)

    def extensions(self, s) -> int:
        if self._graph is None:
            raise ValueError("report was built without its graph")
        return extension_count(self._graph, s)

    def edge_sum_ok(self) -> bool:
        return sum(self.per_edge.values()) == comb(self.p, 2) * self.total

    def extension_sum_ok(self) -> bool:
        g = self._graph
        s = sum(extension_count(g, c) for c in iter_cliques(g, self.p - 1))
        return s == self.p * self.total

    def to_json(self) -> str:
        return json.dumps(
            {
                "p": self.p,
                "total": self.total,
                "per_edge": [[u, v, c] for (u, v), c in sorted(self.per_edge.items())],
            }
        )

    @classmethod
    def from_json(cls, text: str) -> "CliqueCountReport":
        d = json.loads(text)
        return cls(d["p"], d["total"], {(u, v): c for u, v, c in d["per_edge"]})


def clique_count_report(g: Graph, p: int) -> CliqueCountReport:
    if p < 2:
        raise ValueError("per-edge loads need p >= 2")
    return CliqueCountReport(p, count_cliques(g, p), edge_loads(g, p), g)


def heavy_edges(g: Graph, p: int, threshold: int) -> set[tuple[int, int]]:
    """Edges lying in at least ``threshold`` copies of ``K_p``."""
    if p < 3:
        raise ValueError("heavy edges are defined for p >= 3")
    return {e for e, c in edge_loads(g, p).items() if c >= threshold}


def supersaturation_bound(m: int, p: int, r: int) -> Fraction:
    """``C(m,p)/C(r,p)``: forced ``K_p`` count when every ``r``-set spans a ``K_p``."""
    if not m >= r >= p >= 2:
        raise ValueError("need m >= r >= p >= 2")
    return Fraction(comb(m, p), comb(r, p))


def removal_threshold(m: int, p: int, beta: Fraction) -> int:
    """``ceil(beta * (m/(8p))^(p-2))`` computed exactly."""
    val = Fraction(beta) * Fraction(m, 8 * p) ** (p - 2)
    return -(-val.numerator // val.denominator)


# --- arithmetic side lemmas ------------------------------------------------


def calc_inequality_holds(x: Fraction) -> bool:
    """``x(2x-5)/(2x-3) >= x - 2 + 2/5`` (stated for ``x >= 4``)."""
    x = Fraction(x)
    return x * (2 * x - 5) / (2 * x - 3) >= x - 2 + Fraction(2, 5)


def ineq_two_holds(p: int, t: int) -> bool:
    """``(2p-3-2t) / (5(2p-3)(p-t)) >= 1/(8p)`` (stated for ``t <= p-4``)."""
    return Fraction(2 * p - 3 - 2 * t, 5 * (2 * p - 3) * (p - t)) >= Fraction(1, 8 * p)
