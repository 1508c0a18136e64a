"""Explicit lower-bound graphs for book Ramsey goodness, plus their parameter bookkeeping."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Sequence

import numpy as np

from .graph import MAX_VERTICES, Graph, complement, iter_bits, members
from .graph6 import serialize_graph6
from .search import find_book, find_clique, find_multipartite

RETRY_BUDGET = 10_000
DK_VERTEX_CAP = 10


class ConstructionError(RuntimeError):
    """A generator could not produce a graph meeting its contract."""


class PreconditionError(ValueError):
    """An input graph fails a stated precondition; ``clause`` names which one."""

    def __init__(self, clause: str, message: str):
        super().__init__(f"{clause}: {message}")
        self.clause = clause


@dataclass(frozen=True)
class GoodnessInstance:
    """Parameters of one goodness question ``r(K_p(a), B_{k,n})``.

    ``context`` selects the target vertex count: ``"goodness"`` gives
    ``(p-1)(n-1)+1`` and ``"only_if"`` gives ``(p-1)(n-1)+a_1``.
    """

    p: int
    k: int
    n: int
    t: int = 2
    a: tuple[int, ...] = ()
    seed: int = 0
    context: str = "goodness"

    def __post_init__(self):
        object.__setattr__(self, "a", tuple(self.a))
        if self.p < 2 or self.k < 2:
            raise ValueError("need p, k >= 2")
        if self.n < self.k:
            raise ValueError("need n >= k")
        head = self.a[: self.p - 1]
        if any(x < 1 for x in self.a) or list(head) != sorted(head):
            raise ValueError("need 1 <= a_1 <= ... <= a_{p-1}")
        if head and head[-1] > self.t:
            raise ValueError("need a_{p-1} <= t")
        if self.a and len(self.a) != self.p:
            raise ValueError("need exactly p part sizes")
        if self.context not in ("goodness", "only_if"):
            raise ValueError(f"unknown context {self.context!r}")
        if self.context == "only_if" and not self.a:
            raise ValueError("only_if context needs part sizes")

    @property
    def N(self) -> int:
        base = (self.p - 1) * (self.n - 1)
        return base + (self.a[0] if self.context == "only_if" else 1)

    def to_dict(self) -> dict:
        return {
            "p": self.p, "k": self.k, "n": self.n, "t": self.t, "a": list(self.a),
            "seed": self.seed, "context": self.context, "N": self.N,
        }


@dataclass
class DerivedParams:
    """Constants of the goodness argument, exact wherever representable.

    Quantities such as ``z**(-z)`` or ``2**(-t**(1000 k^2 p^2))`` are far
    beyond any desk instance; ``gamma`` is left ``None`` when ``z`` is too
    large and the final ``delta`` is kept as its (integer) base-2 exponent.
    """

    p: int
    k: int
    t: int
    n: int
    alpha: Fraction
    eps: Fraction
    x: int
    z: int
    eps_ladder: dict[int, Fraction]
    t_ladder: dict[int, Fraction]
    xi: Fraction
    zeta: Fraction
    beta: Fraction
    eps_stability: Fraction
    eta: Fraction
    lam: Fraction
    N: int
    d: Fraction
    gamma: Fraction | None = None
    log2_delta_lower: int | None = None
    dk_value: int | None = None
    erdos_szekeres: int | None = None
    extra: dict = field(default_factory=dict)

    def t_ladder_counts(self) -> dict[int, int]:
        return {r: math.ceil(v) for r, v in self.t_ladder.items()}


def blowup_ladder(p: int, k: int, x: int) -> tuple[dict[int, Fraction], dict[int, Fraction]]:
    """Per-level densities ``eps_r`` and part sizes ``t_r`` (``t_{p-1} = x``)."""
    eps = {r: (1 - Fraction(r, p - 1)) / (4 * k) for r in range(1, p - 1)}
    t = {p - 1: Fraction(x)}
    for r in range(p - 2, 0, -1):
        t[r] = t[r + 1] / eps[r]
    return eps, t


def derived_params(
    p: int, k: int, t: int, n: int, alpha: Fraction | None = None, x: int | None = None
) -> DerivedParams:
    alpha = Fraction(1, 200 * k * t * t * p**6) if alpha is None else Fraction(alpha)
    eps = (alpha / 10) ** k / (10 * k)
    if x is None:
        x = math.ceil(t / eps)
    z = x * (20 * k) ** p
    eps_r, t_r = blowup_ladder(p, k, x)
    xi = 4 * p * p * alpha
    N = (p - 1) * (n - 1) + 1
    eps_stab = Fraction(1, 100 * p**6 * t * t)
    gamma = alpha / Fraction(z) ** z if z <= 64 else None
    return DerivedParams(
        p=p, k=k, t=t, n=n, alpha=alpha, eps=eps, x=x, z=z,
        eps_ladder=eps_r, t_ladder=t_r, xi=xi, zeta=p * t * xi,
        beta=Fraction(1, p**3), eps_stability=eps_stab,
        eta=eps_stab / Fraction(p) ** (10 * p), lam=eps_stab / 10,
        N=N, d=(1 - Fraction(1, p - 1) - alpha) * N, gamma=gamma,
        log2_delta_lower=-(t ** (1000 * k * k * p * p)) if k * p <= 12 else None,
        erdos_szekeres=math.comb(z + p, p) if z < 10**6 else None,
    )


# --- generators -------------------------------------------------------------


def _blowup(inner: Graph, other_sizes: Sequence[int]) -> Graph:
    """``inner`` on the first block, independent blocks after it, all cross pairs joined."""
    sizes = [inner.n, *other_sizes]
    n = sum(sizes)
    if n > MAX_VERTICES:
        raise ValueError(f"{n} vertices exceeds cap {MAX_VERTICES}")
    full = (1 << n) - 1
    rows = []
    start = 0
    for b, size in enumerate(sizes):
        block = ((1 << size) - 1) << start
        for v in range(size):
            row = full & ~block
            if b == 0:
                row |= inner.rows[v]
            rows.append(row)
        start += size
    return Graph(n, rows)


def burr_graph(chi: int, s: int, h_order: int) -> Graph:
    """Complete ``chi``-partite graph: ``chi-1`` parts of ``h_order-1`` and one of ``s-1``."""
    if chi < 2 or s < 1 or h_order < s:
        raise ValueError("need chi >= 2, s >= 1, h_order >= s")
    from .graph import complete_multipartite

    sizes = [h_order - 1] * (chi - 1) + ([s - 1] if s > 1 else [])
    return complete_multipartite(sizes)


def has_c4(g: Graph) -> bool:
    rows = g.rows
    return any((rows[u] & rows[v]).bit_count() >= 2 for u, v in combinations(range(g.n), 2))


def c4_free_almost_regular(m: int, a: int, seed: int = 0, max_tries: int = RETRY_BUDGET) -> Graph:
    """C4-free graph on ``m`` vertices, every degree ``a`` except vertex ``m-1`` at ``a-1`` when ``m*a`` is odd.

    ``a == 1`` is a deterministic maximum matching.  Otherwise the configuration
    model is sampled with whole-sample rejection of loops, multi-edges and
    4-cycles, seeded so the result is a function of ``(m, a, seed)``.
    """
    if a < 1 or m <= a:
        raise ValueError("need a >= 1 and m > a")
    if a == 1:
        return Graph.from_edges(m, ((i, i + 1) for i in range(0, m - 1, 2)))
    degrees = [a] * m
    if m * a % 2:
        degrees[-1] -= 1
    stubs = np.repeat(np.arange(m), degrees)
    rng = np.random.default_rng(seed)
    for _ in range(max_tries):
        pairs = rng.permutation(stubs).reshape(-1, 2)
        rows = [0] * m
        ok = True
        for u, v in pairs.tolist():
            if u == v or rows[u] >> v & 1:
                ok = False
                break
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        if ok:
            g = Graph(m, rows)
            if not has_c4(g):
                return g
    raise ConstructionError(
        f"no C4-free almost {a}-regular graph on {m} vertices after {max_tries} attempts"
    )


def book_only_if_graph(inst: GoodnessInstance) -> Graph:
    """Blow-up witnessing ``r(K_p(a), B_{k,n}) > (p-1)(n-1)+a_1`` when ``a_2 >= 2``.

    Vertices ``0..n+a_1-2`` form the first part, carrying a C4-free almost
    ``a_1``-regular graph; the remaining ``p-2`` parts of size ``n-1`` follow
    as consecutive independent blocks.
    """
    if len(inst.a) < 2 or inst.a[1] < 2:
        raise ValueError("construction needs a_2 >= 2")
    a1 = inst.a[0]
    inner = c4_free_almost_regular(inst.n + a1 - 1, a1, inst.seed)
    return _blowup(inner, [inst.n - 1] * (inst.p - 2))


def near_goodness_graph(inst: GoodnessInstance, gamma0: Graph) -> Graph:
    """Blow-up with ``gamma0`` (on ``n+d-1`` vertices) in the first part.

    ``gamma0`` must be ``K_{a_1,a_2}``-free with at most ``k-1`` vertices of
    degree below ``d``; both clauses are checked.
    """
    if len(inst.a) < 2:
        raise ValueError("need part sizes a_1, a_2")
    d = gamma0.n - inst.n + 1
    if d < 0:
        raise PreconditionError("order", f"gamma0 has {gamma0.n} < n-1 vertices")
    hit = find_multipartite(gamma0, inst.a[:2])
    if hit is not None:
        raise PreconditionError("bipartite-free", f"gamma0 contains K_{{a1,a2}} at {hit.parts}")
    low = [v for v in range(gamma0.n) if gamma0.degree(v) < d]
    if len(low) > inst.k - 1:
        raise PreconditionError("low-degree", f"{len(low)} vertices below degree {d} (allowed {inst.k - 1})")
    return _blowup(gamma0, [inst.n - 1] * (inst.p - 2))


# --- Dirac-type extremal function d_k(n, K_{a1,a2}) --------------------------


def _counting_excludes(n: int, k: int, a1: int, a2: int, d: int) -> bool:
    """Star double count rules out ``d``; once true it stays true for every larger ``d``."""
    v = n + d - 1
    high = v - k + 1
    if high <= 0:
        return False
    for s, t in ((a1, a2), (a2, a1)):
        if high * math.comb(d, s) > (t - 1) * math.comb(v, s):
            return True
    return False


def _creates_biclique(rows: list[int], u: int, w: int, s: int, t: int) -> bool:
    """Does the edge ``uw`` sit in a ``K_{s,t}`` with ``u`` on the ``s`` side?"""
    for extra in combinations(members(rows[w] & ~(1 << u)), s - 1):
        common = rows[u]
        for x in extra:
            common &= rows[x]
        if (common & ~(1 << w)).bit_count() >= t - 1:
            return True
    return False


def _dk_search(v: int, d: int, k: int, a1: int, a2: int) -> Graph | None:
    """Lexicographically least edge set on ``v`` vertices meeting the d_k constraints.

    Vertices ``0..v-k`` must reach degree ``d``; the last ``k-1`` are exempt.
    Edges are decided in lexicographic order, absent before present.
    """
    high = v - k + 1
    edges = list(combinations(range(v), 2))
    rows = [0] * v
    deg = [0] * v
    undecided = [v - 1] * v

    def feasible(x: int) -> bool:
        return x >= high or deg[x] + undecided[x] >= d

    def rec(i: int) -> bool:
        if i == len(edges):
            return all(deg[x] >= d for x in range(high))
        u, w = edges[i]
        undecided[u] -= 1
        undecided[w] -= 1
        if feasible(u) and feasible(w) and rec(i + 1):
            return True
        rows[u] |= 1 << w
        rows[w] |= 1 << u
        deg[u] += 1
        deg[w] += 1
        if not (_creates_biclique(rows, u, w, a1, a2) or _creates_biclique(rows, w, u, a1, a2)):
            if rec(i + 1):
                return True
        rows[u] &= ~(1 << w)
        rows[w] &= ~(1 << u)
        deg[u] -= 1
        deg[w] -= 1
        undecided[u] += 1
        undecided[w] += 1
        return False

    return Graph(v, list(rows)) if rec(0) else None


def dk_witness(n: int, k: int, a1: int, a2: int) -> tuple[int, Graph]:
    """``(d_k(n, K_{a1,a2}), witness graph)`` by exhaustive search on at most 10 vertices."""
    if n < 1 or k < 1 or a1 < 1 or a2 < 1:
        raise ValueError("need positive n, k, a1, a2")
    a1, a2 = min(a1, a2), max(a1, a2)
    top = 1
    while not _counting_excludes(n, k, a1, a2, top):
        top += 1
        if n + top - 1 > DK_VERTEX_CAP + 1:
            raise ValueError(f"d_k({n}, K_{a1},{a2}) may need more than {DK_VERTEX_CAP} vertices")
    for d in range(top - 1, 0, -1):
        if n + d - 1 > DK_VERTEX_CAP:
            raise ValueError(f"d_k({n}, K_{a1},{a2}) needs a search above {DK_VERTEX_CAP} vertices")
        if _counting_excludes(n, k, a1, a2, d):
            continue
        g = _dk_search(n + d - 1, d, k, a1, a2)
        if g is not None:
            return d, g
    return 0, Graph(max(n - 1, 0), [0] * max(n - 1, 0))


def dk_bruteforce(n: int, k: int, a1: int, a2: int) -> int:
    return dk_witness(n, k, a1, a2)[0]


# --- random threshold construction -------------------------------------------


@dataclass
class ThresholdSample:
    graph: Graph
    q: float
    n: int
    N: int
    clique: tuple[int, ...] | None
    book: object | None

    @property
    def is_lower_bound(self) -> bool:
        return self.clique is None and self.book is None

    def audit(self) -> dict:
        return {
            "q": self.q, "n": self.n, "N": self.N,
            "has_clique": self.clique is not None, "clique": self.clique and list(self.clique),
            "complement_has_book": self.book is not None,
        }


def random_threshold_graph(
    p: int, k: int, C: float, seed: int = 0, c: float | None = None, n: int | None = None
) -> ThresholdSample:
    """``G(N, q)`` with ``q = C log2(p) / k`` and ``N = (p-1)(n-1)+1``.

    ``n`` defaults to ``floor((k / log2 p)^(c p))``; pass ``n`` directly to
    pin the size.  The sample is audited with the exact searches for ``K_p``
    in the graph and ``B_{k,n}`` in its complement.
    """
    q = float(C) * math.log2(p) / k
    if not 0.0 <= q <= 1.0:
        raise ValueError(f"edge probability {q} outside [0, 1]")
    if n is None:
        if c is None:
            raise ValueError("give either n or the exponent constant c")
        n = math.floor((k / math.log2(p)) ** (c * p))
    if n < k:
        raise ValueError(f"n = {n} below spine size k = {k}")
    N = (p - 1) * (n - 1) + 1
    if N > MAX_VERTICES:
        raise ValueError(f"N = {N} exceeds cap {MAX_VERTICES}")
    rng = np.random.default_rng(seed)
    draws = rng.random(N * (N - 1) // 2)
    iu, ju = np.triu_indices(N, 1)
    rows = [0] * N
    for u, v in zip(iu[draws < q].tolist(), ju[draws < q].tolist()):
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    g = Graph(N, rows)
    return ThresholdSample(g, q, n, N, find_clique(g, p), find_book(complement(g), k, n))


def provenance(name: str, params: dict, seed: int | None, g: Graph, audit: dict | None = None) -> dict:
    return {
        "construction": name,
        "params": params,
        "seed": seed,
        "graph6": serialize_graph6(g),
        "audit": audit or {},
    }


def degree_profile(g: Graph) -> list[int]:
    return sorted(g.degrees())


def cycle_lengths(g: Graph) -> list[int]:
    """Component sizes of a 2-regular graph (each component is a cycle)."""
    if any(d != 2 for d in g.degrees()):
        raise ValueError("graph is not 2-regular")
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp, frontier = 1 << v, 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        out.append(comp.bit_count())
    return sorted(out)
