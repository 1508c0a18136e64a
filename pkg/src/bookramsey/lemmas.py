"""Executable constructive lemmas: each run returns a witness that can be re-checked.

The engines run "open-hypothesis": asymptotic size thresholds are never
enforced.  A run either produces a witness or reports, through
:class:`HypothesisViolated`, the exact step where the sizes ran out.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import NamedTuple, Sequence, Union

import numpy as np

from .constructions import PreconditionError, blowup_ladder
from .counting import _count_in, edge_loads, removal_threshold
from .graph import Graph, complement, iter_bits, mask_of, members
from .graph6 import parse_graph6, serialize_graph6
from .search import (
    BookWitness,
    MultipartiteWitness,
    check_book,
    check_multipartite,
    find_clique,
    find_independent_set,
    is_clique,
    is_independent,
    iter_cliques,
)

SPINE_EXHAUSTIVE_BUDGET = 10**6
SPINE_SAMPLES = 10**5


# --- outcomes -----------------------------------------------------------------


@dataclass
class BookFound:
    """Book in the complement of the source graph."""

    witness: BookWitness
    measurements: dict = field(default_factory=dict)
    branch = "book"


@dataclass
class MultipartiteFound:
    witness: MultipartiteWitness
    measurements: dict = field(default_factory=dict)
    branch = "multipartite"


@dataclass
class TargetFound:
    """Copy of a target pattern; ``embedding`` maps host vertex -> pattern part."""

    embedding: dict[int, int]
    measurements: dict = field(default_factory=dict)
    branch = "target"

    def as_multipartite(self) -> MultipartiteWitness:
        parts: dict[int, list[int]] = {}
        for v, i in sorted(self.embedding.items()):
            parts.setdefault(i, []).append(v)
        return MultipartiteWitness(tuple(tuple(parts[i]) for i in sorted(parts)), False)


@dataclass
class HypothesisViolated:
    clause: str
    witness: object = None
    detail: str = ""
    measurements: dict = field(default_factory=dict)
    branch = "hypothesis-violated"


LemmaOutcome = Union[BookFound, MultipartiteFound, TargetFound, HypothesisViolated]


def outcome_valid(g: Graph, out: LemmaOutcome) -> bool:
    """Re-check a carried witness against the source graph."""
    if isinstance(out, BookFound):
        return check_book(complement(g), out.witness)
    if isinstance(out, MultipartiteFound):
        return check_multipartite(g, out.witness)
    if isinstance(out, TargetFound):
        return check_multipartite(g, out.as_multipartite())
    if isinstance(out.witness, tuple) and out.witness and isinstance(out.witness[0], int):
        return is_clique(g, out.witness)
    return True


def _jsonable(x):
    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    if isinstance(x, (BookWitness, MultipartiteWitness)):
        return x.to_dict()
    return x


def trace(lemma: str, g: Graph, out: LemmaOutcome) -> dict:
    """JSON-ready record sufficient to re-validate ``out`` without searching again."""
    if isinstance(out, BookFound):
        witness = {"kind": "book", "host": "complement", **out.witness.to_dict()}
    elif isinstance(out, MultipartiteFound):
        witness = {"kind": "multipartite", **out.witness.to_dict()}
    elif isinstance(out, TargetFound):
        witness = {"kind": "target", **out.as_multipartite().to_dict()}
    else:
        witness = {"kind": "violation", "clause": out.clause, "detail": out.detail,
                   "data": _jsonable(out.witness)}
    return {
        "lemma": lemma,
        "branch": out.branch,
        "graph6": serialize_graph6(g),
        "witness": witness,
        "measurements": _jsonable(out.measurements),
    }


def validate_witness_record(g: Graph, w: dict) -> bool:
    """Check one serialized witness dict against ``g`` using only the graph checkers."""
    kind = w.get("kind")
    if kind == "book":
        host = complement(g) if w.get("host", "graph") == "complement" else g
        return check_book(host, BookWitness.from_dict(w))
    if kind in ("multipartite", "target"):
        return check_multipartite(g, MultipartiteWitness.from_dict(w))
    if kind == "books":
        return all(check_book(complement(g), BookWitness.from_dict(b)) for b in w["books"]) and (
            _books_partition(g.n, [BookWitness.from_dict(b) for b in w["books"]])
        )
    if kind == "clique":
        return is_clique(g, w["vertices"])
    if kind == "empty-pair":
        a, b = mask_of(w["A"]), mask_of(w["B"])
        return not a & b and g.edges_between(a, b) == 0
    if kind == "removal":
        removed = [tuple(e) for e in w["removed"]]
        result = parse_graph6(w["result_graph6"])
        return (all(g.has_edge(*e) for e in removed) and result == g.remove_edges(removed)
                and find_clique(result, w["p"]) is None)
    if kind == "partition":
        flat = sorted(v for part in w["parts"] for v in part)
        return flat == list(range(g.n))
    if kind == "violation":
        data = w.get("data")
        if isinstance(data, list) and data and all(isinstance(v, int) for v in data):
            return is_clique(g, data)
        return True
    raise ValueError(f"unknown witness kind {kind!r}")


def validate_trace(record: dict) -> bool:
    return validate_witness_record(parse_graph6(record["graph6"]), record["witness"])


def _books_partition(n: int, books: Sequence[BookWitness]) -> bool:
    seen = 0
    for b in books:
        m = mask_of(b.spine + b.pages)
        if seen & m:
            return False
        seen |= m
    return seen == (1 << n) - 1


# --- greedy embedding step ------------------------------------------------------


@dataclass(frozen=True)
class GreedyParams:
    k: int
    r: int
    s: int
    t: int
    N: int | None = None

    def __post_init__(self):
        if not (1 <= self.s <= self.t and 2 * self.k <= self.t and self.r >= 1 and self.k >= 1):
            raise ValueError("need 1 <= s <= t, 2k <= t, r >= 1")

    @property
    def eps(self) -> Fraction:
        return Fraction(self.s, self.t)


def _check_induced_blowup(g: Graph, parts: MultipartiteWitness, r: int | None, t: int | None) -> None:
    if r is not None and len(parts.parts) != r:
        raise PreconditionError("parts", f"expected {r} parts, got {len(parts.parts)}")
    if t is not None and any(len(p) != t for p in parts.parts):
        raise PreconditionError("parts", f"every part must have exactly {t} vertices")
    if not check_multipartite(g, MultipartiteWitness(parts.parts, True)):
        raise PreconditionError("parts", "parts do not form an induced complete multipartite subgraph")


def degree_classes(g: Graph, parts: Sequence[int], limit: int) -> list[int]:
    """Masks ``U_0..U_r``: ``U_i`` (least ``i``) holds vertices with at most ``limit`` neighbours in ``V_i``.

    Vertices of ``V_i`` are placed in ``U_i`` directly; ``U_0`` collects the
    rest, all of which have more than ``limit`` neighbours in every part.
    """
    r = len(parts)
    U = [0] * (r + 1)
    rows = g.rows
    owner = {v: i for i, m in enumerate(parts, 1) for v in iter_bits(m)}
    for v in range(g.n):
        if v in owner:
            U[owner[v]] |= 1 << v
            continue
        for i, m in enumerate(parts, 1):
            if (rows[v] & m).bit_count() <= limit:
                U[i] |= 1 << v
                break
        else:
            U[0] |= 1 << v
    return U


def _first_bits(mask: int, count: int) -> tuple[int, ...]:
    out = []
    for v in iter_bits(mask):
        if len(out) == count:
            break
        out.append(v)
    return tuple(out)


def greedy_step(g: Graph, parts: MultipartiteWitness, params: GreedyParams) -> LemmaOutcome:
    """Grow an induced ``K_r(t)`` into an induced ``K_{r+1}(s)``, or find a big book in the complement.

    Book branch: some class ``U_i`` is large; its spine comes from the
    low-degree half ``X`` of ``V_i``.  Otherwise vertices of ``U_0`` are
    bucketed by their first ``s`` neighbours in each part and an independent
    ``s``-set is sought inside the buckets, largest first.
    """
    _check_induced_blowup(g, parts, params.r, params.t)
    k, r, s = params.k, params.r, params.s
    eps = params.eps
    N = g.n if params.N is None else params.N
    V = parts.masks()
    U = degree_classes(g, V, s)
    rows = g.rows
    sizes = [u.bit_count() for u in U]
    threshold = (1 - 2 * k * eps) * N / r
    bound = (1 - 4 * k * eps) * N / r
    meas = {"U_sizes": sizes, "book_threshold": threshold, "book_bound": bound}

    for i in range(1, r + 1):
        if sizes[i] < threshold:
            continue
        outside = U[i] & ~V[i - 1]
        cap = 2 * eps * outside.bit_count()
        X = [v for v in iter_bits(V[i - 1]) if (rows[v] & outside).bit_count() <= cap]
        meas.update(index=i, X_size=len(X))
        if len(X) < k:
            return HypothesisViolated("markov-step", detail=f"|X| = {len(X)} < k", measurements=meas)
        Q = X[:k]
        spine = mask_of(Q)
        hit = 0
        for v in Q:
            hit |= rows[v]
        pages = U[i] & ~hit & ~spine
        w = BookWitness(tuple(Q), members(pages))
        best = w.order
        for combo in _limited_combinations(X, k, 10_000):
            h = 0
            for v in combo:
                h |= rows[v]
            best = max(best, k + (U[i] & ~h & ~mask_of(combo)).bit_count())
        meas.update(order=w.order, bound_met=w.order >= bound, best_order_in_X=best)
        return BookFound(w, meas)

    if not U[0]:
        return HypothesisViolated("pigeonhole", detail="U_0 is empty", measurements=meas)
    cells: dict[tuple, int] = {}
    for u in iter_bits(U[0]):
        key = tuple(_first_bits(rows[u] & m, s) for m in V)
        cells[key] = cells.get(key, 0) | 1 << u
    ordered = sorted(cells.items(), key=lambda kv: (-kv[1].bit_count(), kv[0]))
    meas.update(cells=len(ordered), largest_cell=ordered[0][1].bit_count())
    for key, T in ordered:
        W0 = find_independent_set(g, s, among=T)
        if W0 is not None:
            w = MultipartiteWitness((W0, *key), induced=True)
            meas.update(cell_size=T.bit_count())
            return MultipartiteFound(w, meas)
    return HypothesisViolated(
        "independent-set", detail=f"no independent {s}-set in any of {len(ordered)} cells",
        measurements=meas,
    )


def _limited_combinations(items: Sequence[int], k: int, limit: int):
    if math.comb(len(items), k) > limit:
        return iter(())
    return combinations(items, k)


# --- partition into complement books --------------------------------------------


def book_partition(g: Graph, spineparts: MultipartiteWitness) -> list[BookWitness] | HypothesisViolated:
    """Split ``V(g)`` into ``p-1`` books of the complement with spines ``V_1..V_{p-1}``.

    Each vertex joins the least ``i`` with no neighbour in ``V_i``.  A vertex
    with a neighbour in every part yields a ``K_p``, returned as the violation
    witness.
    """
    _check_induced_blowup(g, spineparts, None, None)
    if len({len(p) for p in spineparts.parts}) > 1:
        raise PreconditionError("parts", "spine parts must all have the same size")
    V = spineparts.masks()
    rows = g.rows
    U = [0] * len(V)
    for v in range(g.n):
        for i, m in enumerate(V):
            if not rows[v] & m:
                U[i] |= 1 << v
                break
        else:
            clique = [v] + [next(iter_bits(rows[v] & m)) for m in V]
            return HypothesisViolated("kp-free", witness=tuple(sorted(clique)),
                                      detail=f"vertex {v} has neighbours in every spine part")
    return [BookWitness(spineparts.parts[i], members(U[i] & ~V[i])) for i in range(len(V))]


# --- induced blow-up finder -------------------------------------------------------


def find_blowup(g: Graph, s_set, p: int, k: int, x: int, n: int) -> LemmaOutcome:
    """Book ``B_{k,n}`` in the complement, or induced ``K_{p-1}(x)`` whose first part lies in ``s_set``."""
    S = s_set if isinstance(s_set, int) else mask_of(s_set)
    eps_r, t_r = blowup_ladder(p, k, x)
    sizes = {r: math.ceil(v) for r, v in t_r.items()}
    meas: dict = {"t_ladder": sizes, "levels": []}
    seed = find_independent_set(g, sizes[1], among=S)
    if seed is None:
        return HypothesisViolated("level-1", detail=f"no independent {sizes[1]}-set inside S",
                                  measurements=meas)
    parts: tuple[tuple[int, ...], ...] = (seed,)
    for r in range(1, p - 1):
        params = GreedyParams(k=k, r=r, s=sizes[r + 1], t=sizes[r])
        out = greedy_step(g, MultipartiteWitness(parts, True), params)
        meas["levels"].append({"r": r, "branch": out.branch, **out.measurements})
        if isinstance(out, BookFound):
            out.measurements = {**meas, "level": r, "order": out.witness.order}
            if out.witness.order >= n:
                return out
            return HypothesisViolated(
                "book-size", witness=out.witness,
                detail=f"level {r} book has {out.witness.order} < n = {n} vertices",
                measurements=out.measurements,
            )
        if isinstance(out, HypothesisViolated):
            out.clause = f"level-{r + 1}:{out.clause}"
            out.measurements = meas
            return out
        W = out.witness.parts
        parts = (*W[1:], W[0])
    return MultipartiteFound(MultipartiteWitness(parts, True), meas)


# --- high-degree removal -----------------------------------------------------------


class RemovalResult(NamedTuple):
    graph: Graph
    removed: set
    threshold: int
    hypothesis_met: bool
    audit: dict


def min_degree_hypothesis(g: Graph, p: int, beta: Fraction) -> bool:
    """Minimum degree at least ``(1 - 2/(2p-3) + beta) m``."""
    m = g.n
    return g.min_degree() >= (1 - Fraction(2, 2 * p - 3) + Fraction(beta)) * m


def make_kp_free(g: Graph, p: int, beta) -> RemovalResult:
    """Delete every edge lying in at least ``ceil(beta (m/8p)^(p-2))`` copies of ``K_p``, in one shot."""
    if p < 3:
        raise ValueError("need p >= 3")
    beta = Fraction(beta)
    tau = removal_threshold(g.n, p, beta)
    loads = edge_loads(g, p)
    removed = {e for e, c in loads.items() if c >= tau}
    h = g.remove_edges(removed)
    copies = sum(loads.values()) // math.comb(p, 2)
    edge_bound = Fraction(math.comb(p, 2) * copies, tau)
    ok = min_degree_hypothesis(g, p, beta)
    leftover = find_clique(h, p)
    audit = {
        "threshold": tau, "removed": len(removed), "copies": copies,
        "edge_bound": edge_bound, "edge_bound_met": len(removed) <= edge_bound,
        "kp_free": leftover is None, "hypothesis_met": ok,
    }
    return RemovalResult(h, removed, tau, ok, audit)


def heavy_edge_for_clique(g: Graph, clique, beta) -> tuple[int, int] | None:
    """First edge of ``clique`` (lexicographic) whose ``K_p`` load reaches the removal threshold."""
    vs = sorted(clique) if not isinstance(clique, int) else list(members(clique))
    p = len(vs)
    if p < 3 or not is_clique(g, vs):
        raise ValueError("need a clique on at least 3 vertices")
    tau = removal_threshold(g.n, p, Fraction(beta))

    for u, v in combinations(vs, 2):
        if _count_in(g, g.rows[u] & g.rows[v], p - 2) >= tau:
            return (u, v)
    return None


# --- partitions ------------------------------------------------------------------


@dataclass(frozen=True)
class Partition:
    parts: tuple[tuple[int, ...], ...]

    def masks(self) -> list[int]:
        return [mask_of(p) for p in self.parts]

    def internal_edges(self, g: Graph) -> int:
        return sum(g.edges_within(m) for m in self.masks())

    def class_of(self) -> dict[int, int]:
        return {v: i for i, p in enumerate(self.parts) for v in p}


def min_internal_partition(g: Graph, q: int) -> Partition:
    """``q``-partition that no single vertex move improves (fewer internal edges).

    Starts from a greedy assignment in vertex order (fewest neighbours, then
    least class index) and moves vertices to strictly better classes until a
    full pass makes no move.
    """
    if q < 2:
        raise ValueError("need q >= 2")
    rows = g.rows
    masks = [0] * q
    cls = [0] * g.n
    for v in range(g.n):
        c = min(range(q), key=lambda i: ((rows[v] & masks[i]).bit_count(), i))
        cls[v] = c
        masks[c] |= 1 << v
    moved = True
    while moved:
        moved = False
        for v in range(g.n):
            counts = [(rows[v] & m).bit_count() for m in masks]
            own = cls[v]
            best = min(range(q), key=lambda i: (counts[i], i))
            if counts[best] < counts[own]:
                masks[own] &= ~(1 << v)
                masks[best] |= 1 << v
                cls[v] = best
                moved = True
    return Partition(tuple(members(m) for m in masks))


def is_move_stable(g: Graph, part: Partition) -> bool:
    masks = part.masks()
    for i, m in enumerate(masks):
        for v in iter_bits(m):
            own = (g.rows[v] & m).bit_count()
            if any((g.rows[v] & o).bit_count() < own for j, o in enumerate(masks) if j != i):
                return False
    return True


def stability_partition(g: Graph, p: int) -> tuple[Partition, int]:
    """Remove heavy ``K_p`` edges (``beta = 1/p^3``), partition the rest into ``p-1`` classes.

    Returns the partition and its internal edge count measured in ``g``.
    """
    if p < 3:
        raise ValueError("need p >= 3")
    res = make_kp_free(g, p, Fraction(1, p**3))
    part = min_internal_partition(res.graph, p - 1)
    return part, part.internal_edges(g)


@dataclass
class PartitionAudit:
    sizes: list[int]
    xi: Fraction
    size_deviation: list[Fraction]
    sizes_ok: bool
    min_density: Fraction | None
    min_density_at: tuple[int, int, int] | None
    densities_ok: bool

    def to_dict(self) -> dict:
        return _jsonable(self.__dict__)


def partition_audit(g: Graph, parts, alpha) -> PartitionAudit:
    """Size and cross-density measurements of ``T_1..T_{p-1}`` against ``xi = 4 p^2 alpha``.

    ``size_deviation[i]`` is ``(|T_i| - |T|/(p-1)) / (xi |T|)``, so the size
    clause holds iff every entry lies in ``[-1, 1]``.
    """
    masks = [p if isinstance(p, int) else mask_of(p) for p in parts]
    seen = 0
    for m in masks:
        if seen & m:
            raise ValueError("parts overlap")
        seen |= m
    r = len(masks)
    p = r + 1
    alpha = Fraction(alpha)
    xi = 4 * p * p * alpha
    T = seen.bit_count()
    sizes = [m.bit_count() for m in masks]
    mean = Fraction(T, r)
    scale = xi * T
    dev = [(s - mean) / scale if scale else Fraction(0) for s in sizes]
    best, at = None, None
    for i, mi in enumerate(masks):
        for j, mj in enumerate(masks):
            if i == j or not mj:
                continue
            for w in iter_bits(mi):
                dens = Fraction((g.rows[w] & mj).bit_count(), mj.bit_count())
                if best is None or dens < best:
                    best, at = dens, (w, i, j)
    return PartitionAudit(
        sizes=sizes, xi=xi, size_deviation=dev,
        sizes_ok=all(abs(x) <= 1 for x in dev) if scale else all(s == mean for s in sizes),
        min_density=best, min_density_at=at,
        densities_ok=best is None or best >= 1 - xi,
    )


def aes_greedy_chain(g: Graph, parts, edge: tuple[int, int], a: Sequence[int]) -> LemmaOutcome:
    """From an edge inside one part, greedily build ``K_p(1, 1, a_3, ..., a_p)``.

    The other parts are visited in ascending index; in each, the least
    ``a_j`` common neighbours of everything chosen so far are taken.
    """
    masks = [p if isinstance(p, int) else mask_of(p) for p in parts]
    v, w = edge
    if not g.has_edge(v, w):
        raise ValueError("chain must start from an edge")
    home = next((i for i, m in enumerate(masks) if m >> v & 1 and m >> w & 1), None)
    if home is None:
        raise ValueError("edge must lie inside a single part")
    if len(a) != len(masks) + 1 or a[0] != 1 or a[1] != 1:
        raise ValueError("need sizes (1, 1, a_3, ..., a_p) with p-1 parts")
    embedding = {v: 0, w: 1}
    common = g.rows[v] & g.rows[w]
    others = [m for i, m in enumerate(masks) if i != home]
    for j, (m, size) in enumerate(zip(others, a[2:]), start=2):
        pick = _first_bits(common & m, size)
        if len(pick) < size:
            return HypothesisViolated("common-neighbours", detail=f"only {len(pick)} < {size} in part {j}",
                                      measurements={"embedding": dict(embedding)})
        for u in pick:
            embedding[u] = j
            common &= g.rows[u]
    return TargetFound(embedding)


def low_degree_audit(n: int, k: int, p: int, t: int, alpha, u_sizes: Sequence[int]) -> dict:
    """Exact evaluation of the three class-size bounds and their summed contradiction.

    Uses ``eps = (alpha/10)^k / (10k)`` and the second ``delta`` branch, for
    which ``(e/eps)^(tp) * delta * n`` equals ``(alpha/10)^k 2^(tp) n`` exactly.
    """
    alpha = Fraction(alpha)
    eps = (alpha / 10) ** k / (10 * k)
    N = (p - 1) * (n - 1) + 1
    base = Fraction(n - k) / (1 - 2 * k * eps)
    slack = (alpha / 10) ** k * N
    u0_cap = (alpha / 10) ** k * 2 ** (t * p) * n
    caps = [u0_cap, base - slack] + [base] * (p - 2)
    holds = [s < c for s, c in zip(u_sizes, caps)]
    return {
        "eps": eps, "N": N, "caps": caps, "holds": holds,
        "cap_total": sum(caps), "contradiction": sum(caps) < N,
    }


# --- best spine and empty pairs ----------------------------------------------------


@dataclass
class SpineChoice:
    witness: BookWitness
    part_index: int
    extensions: int
    exhaustive: bool


def _extensions(g: Graph, spine: Sequence[int]) -> int:
    hit = 0
    for v in spine:
        hit |= g.rows[v]
    return g.full & ~hit


def best_spine_book(g: Graph, parts, k: int, seed: int = 0,
                    budget: int = SPINE_EXHAUSTIVE_BUDGET, samples: int = SPINE_SAMPLES) -> SpineChoice:
    """k-subset ``Q`` of a part maximising the vertices non-adjacent to all of ``Q``.

    ``Q`` itself counts as extending (each part is independent); the returned
    book's pages exclude ``Q``.  Exhaustive within ``budget`` candidates,
    otherwise seeded sampling followed by steepest-ascent swaps.
    """
    masks = [p if isinstance(p, int) else mask_of(p) for p in parts]
    for m in masks:
        if m.bit_count() < k:
            raise ValueError("every part needs at least k vertices")
        if not is_independent(g, m):
            raise ValueError("parts must be independent sets")
    total = sum(math.comb(m.bit_count(), k) for m in masks)
    best = None
    if total <= budget:
        for i, m in enumerate(masks):
            for Q in combinations(members(m), k):
                c = _extensions(g, Q).bit_count()
                if best is None or c > best[0]:
                    best = (c, i, Q)
        exhaustive = True
    else:
        rng = np.random.default_rng(seed)
        per_part = max(1, samples // len(masks))
        for i, m in enumerate(masks):
            pool = np.array(members(m))
            for _ in range(per_part):
                Q = tuple(sorted(rng.choice(pool, size=k, replace=False).tolist()))
                c = _extensions(g, Q).bit_count()
                if best is None or c > best[0]:
                    best = (c, i, Q)
        c, i, Q = best
        improved = True
        while improved:
            improved = False
            pool = members(masks[i])
            for out in Q:
                for inn in pool:
                    if inn in Q:
                        continue
                    cand = tuple(sorted(set(Q) - {out} | {inn}))
                    cc = _extensions(g, cand).bit_count()
                    if cc > c:
                        c, Q, improved = cc, cand, True
            best = (c, i, Q)
        exhaustive = False
    c, i, Q = best
    pages = _extensions(g, Q) & ~mask_of(Q)
    return SpineChoice(BookWitness(tuple(Q), members(pages)), i, c, exhaustive)


class TriangleFound(ValueError):
    def __init__(self, triangle: tuple[int, int, int]):
        super().__init__(f"graph has a triangle {triangle}")
        self.triangle = triangle


@dataclass
class EmptyPair:
    A: tuple[int, ...]
    B: tuple[int, ...]
    per_k: dict[int, tuple[tuple[int, ...], tuple[int, ...]]]
    method: dict[int, str]


def _best_empty_pair(g: Graph, k: int) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    best = None
    for Q in iter_cliques(complement(g), k):
        A = _extensions(g, Q) & ~mask_of(Q)
        if best is None or A.bit_count() > best[0]:
            best = (A.bit_count(), members(A), Q)
    return None if best is None else (best[1], best[2])


def empty_pair_extract(g: Graph, max_spine: int = 3, budget: int = SPINE_EXHAUSTIVE_BUDGET) -> EmptyPair:
    """Pages ``A`` and spine ``B`` of a large book in the complement of a triangle-free graph.

    ``A`` and ``B`` have no edges between them.  For each spine size ``k``
    up to ``max_spine`` the best book is found exhaustively when there are at
    most ``budget`` candidate spines; above that, the blow-up pipeline with
    ``p = 3`` supplies a book.  The pair with the largest ``|A| * |B|``
    (smallest ``k`` on ties) is returned.
    """
    tri = find_clique(g, 3)
    if tri is not None:
        raise TriangleFound(tri)
    per_k, method = {}, {}
    for k in range(1, max_spine + 1):
        if math.comb(g.n, k) <= budget:
            hit = _best_empty_pair(g, k)
            tag = "exhaustive"
        else:
            hit = _pipeline_pair(g, k)
            tag = "pipeline"
        if hit is not None:
            per_k[k], method[k] = hit, tag
    if not per_k:
        return EmptyPair((), (), {}, {})
    k = max(per_k, key=lambda j: (len(per_k[j][0]) * j, -j))
    A, B = per_k[k]
    return EmptyPair(A, B, per_k, method)


def _pipeline_pair(g: Graph, k: int):
    n = (g.n + 1) // 2
    out = find_blowup(g, g.full, 3, k, k, n)
    if isinstance(out, BookFound):
        return out.witness.pages, out.witness.spine
    if isinstance(out, HypothesisViolated) and isinstance(out.witness, BookWitness):
        return out.witness.pages, out.witness.spine
    if isinstance(out, MultipartiteFound):
        books = book_partition(g, out.witness)
        if isinstance(books, list):
            b = max(books, key=lambda b: len(b.pages))
            return b.pages, b.spine
    return None
