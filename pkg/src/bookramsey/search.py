"""Exact subgraph search over bitset graphs: cliques, books, complete multipartite copies.

All searches scan vertices in ascending id and return the first witness met in
that order, so results are reproducible and independent of scheduling.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .graph import Graph, above, iter_bits, mask_of, members


@dataclass(frozen=True)
class BookWitness:
    """Spine clique plus page vertices adjacent to the whole spine."""

    spine: tuple[int, ...]
    pages: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.spine) + len(self.pages)

    def to_dict(self) -> dict:
        return {"spine": list(self.spine), "pages": list(self.pages)}

    @classmethod
    def from_dict(cls, d: dict) -> "BookWitness":
        return cls(tuple(d["spine"]), tuple(d["pages"]))


@dataclass(frozen=True)
class MultipartiteWitness:
    parts: tuple[tuple[int, ...], ...]
    induced: bool = False

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def masks(self) -> list[int]:
        return [mask_of(p) for p in self.parts]

    def to_dict(self) -> dict:
        return {"parts": [list(p) for p in self.parts], "induced": self.induced}

    @classmethod
    def from_dict(cls, d: dict) -> "MultipartiteWitness":
        return cls(tuple(tuple(p) for p in d["parts"]), bool(d.get("induced", False)))


# --- witness checkers -------------------------------------------------------


def is_clique(g: Graph, vs) -> bool:
    m = vs if isinstance(vs, int) else mask_of(vs)
    return all((g.rows[v] | 1 << v) & m == m for v in iter_bits(m))


def is_independent(g: Graph, vs) -> bool:
    m = vs if isinstance(vs, int) else mask_of(vs)
    return all(not g.rows[v] & m for v in iter_bits(m))


def check_book(g: Graph, w: BookWitness, k: int | None = None, n: int | None = None) -> bool:
    """Validate a book witness in ``g`` (pass ``complement(g)`` for books in the complement)."""
    spine, pages = mask_of(w.spine), mask_of(w.pages)
    if len(set(w.spine)) != len(w.spine) or len(set(w.pages)) != len(w.pages):
        return False
    if spine & pages or any(not 0 <= v < g.n for v in w.spine + w.pages):
        return False
    if not is_clique(g, spine):
        return False
    if g.common_neighbors(w.spine) & pages != pages:
        return False
    if k is not None and len(w.spine) != k:
        return False
    return n is None or w.order >= n


def check_multipartite(g: Graph, w: MultipartiteWitness, sizes: Sequence[int] | None = None) -> bool:
    masks = w.masks()
    seen = 0
    for part, m in zip(w.parts, masks):
        if len(set(part)) != len(part) or any(not 0 <= v < g.n for v in part):
            return False
        if seen & m:
            return False
        seen |= m
    for i, mi in enumerate(masks):
        others = seen & ~mi
        for v in iter_bits(mi):
            if g.rows[v] & others != others:
                return False
        if w.induced and not is_independent(g, mi):
            return False
    return sizes is None or tuple(w.sizes) == tuple(sizes)


# --- cliques ----------------------------------------------------------------


def iter_cliques(g: Graph, p: int, among: int | None = None) -> Iterator[tuple[int, ...]]:
    """All ``p``-cliques inside ``among`` as sorted tuples, in lexicographic order."""
    cand0 = g.full if among is None else among & g.full
    if p == 0:
        yield ()
        return
    rows = g.rows
    stack: list[int] = []

    def rec(cand: int, need: int):
        if need == 1:
            for v in iter_bits(cand):
                yield (*stack, v)
            return
        for v in iter_bits(cand):
            cand &= above(v)
            nxt = cand & rows[v]
            if nxt.bit_count() >= need - 1:
                stack.append(v)
                yield from rec(nxt, need - 1)
                stack.pop()
            if cand.bit_count() < need:
                return

    yield from rec(cand0, p)


def find_clique(g: Graph, p: int, among: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least ``p``-clique (inside ``among`` if given), or None."""
    if p < 1:
        raise ValueError("clique size must be at least 1")
    return next(iter_cliques(g, p, among), None)


def find_independent_set(g: Graph, size: int, among: int | None = None) -> tuple[int, ...] | None:
    """Lexicographically least independent set of ``size`` vertices inside ``among``."""
    if size == 0:
        return ()
    cand0 = g.full if among is None else among & g.full
    rows = g.rows
    stack: list[int] = []

    def rec(cand: int, need: int):
        if need == 0:
            return tuple(stack)
        for v in iter_bits(cand):
            cand &= above(v)
            nxt = cand & ~rows[v]
            if nxt.bit_count() >= need - 1:
                stack.append(v)
                hit = rec(nxt, need - 1)
                if hit is not None:
                    return hit
                stack.pop()
            if cand.bit_count() < need:
                return None
        return None

    return rec(cand0, size)


# --- books --------------------------------------------------------------------


def iter_books(g: Graph, k: int, n: int) -> Iterator[BookWitness]:
    """Every spine (lexicographic order) whose common neighbourhood has at least ``n - k`` vertices."""
    rows = g.rows
    stack: list[int] = []

    def rec(cand: int, common: int, need: int):
        if need == 0:
            if common.bit_count() >= n - k:
                yield BookWitness(tuple(stack), members(common))
            return
        for v in iter_bits(cand):
            cand &= above(v)
            nxt_common = common & rows[v]
            # future spine vertices and all pages live in the common neighbourhood
            if nxt_common.bit_count() >= n - len(stack) - 1:
                stack.append(v)
                yield from rec(cand & rows[v], nxt_common, need - 1)
                stack.pop()

    yield from rec(g.full, g.full, k)


def find_book(g: Graph, k: int, n: int) -> BookWitness | None:
    """A copy of ``B_{k,n}`` in ``g``: k-clique spine with at least ``n - k`` common neighbours.

    Pages of the returned witness are the whole common neighbourhood of the spine.
    """
    if not n >= k >= 1:
        raise ValueError("book needs n >= k >= 1")
    return next(iter_books(g, k, n), None)


def max_book_order(g: Graph, k: int) -> int:
    """Largest ``|spine| + |common neighbourhood|`` over all k-cliques (0 if none)."""
    best = 0
    for spine in iter_cliques(g, k):
        best = max(best, k + g.common_neighbors(spine).bit_count())
    return best


# --- complete multipartite --------------------------------------------------


def find_multipartite(
    g: Graph, sizes: Sequence[int], induced: bool = False, among: int | None = None
) -> MultipartiteWitness | None:
    """Copy of the complete multipartite graph with the given part sizes.

    Parts are built in the given order; members of part ``j`` must lie in the
    common neighbourhood of every vertex already placed in earlier parts.  With
    ``induced`` the members of a part must also be pairwise non-adjacent.
    Failed sub-problems are memoised on (candidate mask, part index), which
    collapses the search on blow-up-like graphs where many vertices share a
    neighbourhood.
    """
    sizes = list(sizes)
    if not sizes or any(s < 1 for s in sizes):
        raise ValueError("sizes must be a nonempty list of positive counts")
    rows = g.rows
    tail = [sum(sizes[j:]) for j in range(len(sizes) + 1)]
    failed: set[tuple[int, int]] = set()

    def solve(j: int, cand: int) -> list[int] | None:
        if j == len(sizes):
            return []
        if cand.bit_count() < tail[j]:
            return None
        if (cand, j) in failed:
            return None
        hit = build(j, cand, 0, cand, sizes[j])
        if hit is None:
            failed.add((cand, j))
        return hit

    def build(j: int, avail: int, chosen: int, rest: int, left: int) -> list[int] | None:
        if left == 0:
            sub = solve(j + 1, rest)
            return None if sub is None else [chosen, *sub]
        after = tail[j + 1]
        for v in iter_bits(avail):
            avail &= above(v)
            new_rest = rest & rows[v]
            if new_rest.bit_count() >= after:
                nav = avail & ~rows[v] if induced else avail
                if nav.bit_count() >= left - 1:
                    hit = build(j, nav, chosen | 1 << v, new_rest, left - 1)
                    if hit is not None:
                        return hit
            if avail.bit_count() < left:
                return None
        return None

    start = g.full if among is None else among & g.full
    found = solve(0, start)
    if found is None:
        return None
    return MultipartiteWitness(tuple(members(m) for m in found), induced)


def degree_density(g: Graph, v: int, w) -> Fraction:
    """Fraction of the vertex set ``w`` adjacent to ``v``."""
    m = w if isinstance(w, int) else mask_of(w)
    if not m:
        raise ValueError("density to an empty vertex set is undefined")
    return Fraction((g.rows[v] & m).bit_count(), m.bit_count())
