"""Acceptance sweeps.  Each test is one numbered criterion; the summary prints PASS/FAIL per number."""

import time
from fractions import Fraction

import numpy as np
import pytest

from bookramsey.constructions import ConstructionError, GoodnessInstance, book_only_if_graph, burr_graph
from bookramsey.counting import (
    calc_inequality_holds, clique_count_report, count_cliques, ineq_two_holds, supersaturation_bound,
)
from bookramsey.graph import complement, petersen_graph
from bookramsey.lemmas import (
    BookFound, GreedyParams, MultipartiteFound, book_partition, empty_pair_extract, greedy_step,
    heavy_edge_for_clique, make_kp_free, outcome_valid,
)
from bookramsey.ramsey import ArrowingInstance, arrows, exact_ramsey
from bookramsey.search import (
    MultipartiteWitness, check_book, check_multipartite, find_independent_set, iter_cliques,
)

import oracles
from helpers import (
    bounded_independence, corpus, kp_free_with_planted, min_degree_graph, planted_blowup, triangle_free,
)


def report(n: int, line: str) -> None:
    print(f"criterion {n}: {line}")


# 1 -------------------------------------------------------------------------------------


@pytest.mark.criterion(1)
def test_exact_goodness_values():
    cases = [("book:1,2", 3), ("book:1,3", 5), ("book:1,4", 7), ("book:2,3", 6), ("book:2,4", 7)]
    t0 = time.perf_counter()
    got = {H: exact_ramsey("clique:3", H).r for H, _ in cases}
    elapsed = time.perf_counter() - t0
    report(1, f"{got} in {elapsed:.2f}s")
    assert got == dict(cases)
    assert cases[4][1] == (3 - 1) * (4 - 1) + 1
    assert elapsed < 60


# 2 -------------------------------------------------------------------------------------


def _only_if_vectors(p: int):
    for a1 in (1, 2):
        for a2 in (2, 3):
            if a2 < a1:
                continue
            if p == 2:
                yield (a1, a2)
            elif p == 3:
                for last in (a2, a2 + 1):
                    yield (a1, a2, last)
            else:
                yield (a1, a2, a2, a2 + 1)


@pytest.mark.criterion(2)
def test_lower_bound_constructions_never_arrow():
    burr = only_if = small = 0
    for p in (2, 3, 4):
        for n in range(1, 13):
            g = burr_graph(p, 1, n)
            for k in range(1, min(3, n) + 1):
                inst = ArrowingInstance(f"clique:{p}", f"book:{k},{n}", g.n)
                assert not arrows(g, inst).arrows, (p, k, n)
                if g.n <= 10:
                    assert oracles.clique_count(g, p) == 0 and not oracles.has_book(complement(g), k, n)
                burr += 1
    for p in (2, 3, 4):
        for a in _only_if_vectors(p):
            for k in (2, 3):
                for n in range(max(k, 2), 13):
                    if a[0] == 2 and n < 4:
                        continue  # no C4-free 2-regular graph on n + 1 <= 4 vertices
                    inst = GoodnessInstance(p=p, k=k, n=n, t=max(a[: p - 1]), a=a, seed=n, context="only_if")
                    try:
                        g = book_only_if_graph(inst)
                    except ConstructionError:
                        g = book_only_if_graph(GoodnessInstance(p=p, k=k, n=n, t=max(a[: p - 1]), a=a,
                                                                seed=n + 100, context="only_if"))
                    assert g.n == (p - 1) * (n - 1) + a[0]
                    target = ArrowingInstance("multipartite:" + ",".join(map(str, a)), f"book:{k},{n}", g.n)
                    assert not arrows(g, target).arrows, (p, a, k, n)
                    if g.n <= 10:
                        assert not oracles.has_multipartite(g, a)
                        assert not oracles.has_book(complement(g), k, n)
                        small += 1
                    only_if += 1
    report(2, f"{burr} Burr and {only_if} only-if instances fail to arrow ({small} only-if rechecked by brute force)")


# 3 -------------------------------------------------------------------------------------


@pytest.mark.criterion(3)
def test_book_partition_covers_vertex_set():
    rng = np.random.default_rng(2024)
    failures = 0
    for i in range(1000):
        p = int(rng.integers(2, 5))
        k = int(rng.integers(1, 4))
        extra = int(rng.integers(0, 40 - (p - 1) * k + 1))
        g, parts = kp_free_with_planted(p, k, extra, float(rng.uniform(0.1, 0.9)), rng)
        books = book_partition(g, MultipartiteWitness(parts, True))
        ok = isinstance(books, list) and len(books) == p - 1
        if ok:
            cg = complement(g)
            seen = [v for b in books for v in (*b.spine, *b.pages)]
            ok = sorted(seen) == list(range(g.n)) and all(check_book(cg, b) for b in books)
            ok = ok and all(b.spine == parts[j] for j, b in enumerate(books))
        failures += not ok
    report(3, f"1000 instances, {failures} failures")
    assert failures == 0


# 4 -------------------------------------------------------------------------------------


@pytest.mark.criterion(4)
def test_greedy_step_soundness():
    rng = np.random.default_rng(99)
    invalid = short = 0
    branches = {}
    for i in range(500):
        r = int(rng.integers(1, 4))
        k = int(rng.integers(1, 3))
        t = int(rng.integers(2 * k, 13))
        s = int(rng.integers(1, max(2, t // 4) + 1))
        g, parts = planted_blowup(r, t, int(rng.integers(0, 3 * t + 1)), float(rng.uniform(0.3, 0.99)), rng)
        out = greedy_step(g, MultipartiteWitness(parts, True), GreedyParams(k, r, s, t))
        branches[out.branch] = branches.get(out.branch, 0) + 1
        if isinstance(out, BookFound):
            if not check_book(complement(g), out.witness):
                invalid += 1
            if out.witness.order < (1 - Fraction(4 * k * s, t)) * g.n / r:
                short += 1
        elif isinstance(out, MultipartiteFound):
            w = out.witness
            ok = check_multipartite(g, w, [s] * (r + 1)) and w.induced
            ok = ok and all(set(W) <= set(parts[j]) for j, W in enumerate(w.parts[1:]))
            invalid += not ok
        else:
            invalid += not outcome_valid(g, out)
    report(4, f"500 instances {branches}, {invalid} invalid witnesses, {short} books under the bound")
    assert invalid == 0 and short == 0


# 5 -------------------------------------------------------------------------------------


@pytest.mark.criterion(5)
def test_removal_at_desk_scale():
    rng = np.random.default_rng(5)
    bad = 0
    taus = set()
    for i in range(200):
        m = int(rng.integers(30, 65))
        beta = (Fraction(1, 20), Fraction(1, 10))[i % 2]
        g = min_degree_graph(m, beta, rng, i % 3)
        res = make_kp_free(g, 3, beta)
        taus.add(res.threshold)
        ok = res.hypothesis_met and res.audit["kp_free"] and oracles.clique_count(res.graph, 3) == 0
        ok = ok and res.audit["edge_bound_met"]
        ok = ok and len(res.removed) * res.threshold <= 3 * count_cliques(g, 3)
        for tri in iter_cliques(g, 3):
            e = heavy_edge_for_clique(g, tri, beta)
            if e is None or e not in res.removed:
                ok = False
                break
        bad += not ok
    report(5, f"200 graphs, thresholds {sorted(taus)}, {bad} failures")
    assert bad == 0


# 6 -------------------------------------------------------------------------------------


@pytest.mark.criterion(6)
def test_arithmetic_lemmas():
    calc = [q for q in range(400, 10_001) if not calc_inequality_holds(Fraction(q, 100))]
    two = [(p, t) for p in range(4, 201) for t in range(0, p - 3) if not ineq_two_holds(p, t)]
    report(6, f"{len(calc)} calc-inequality and {len(two)} ineq-two violations")
    assert calc == [] and two == []


# 7 -------------------------------------------------------------------------------------


@pytest.mark.criterion(7)
def test_counting_identities():
    small = [g for _, g in corpus() if g.n <= 12]
    for g in small:
        for p in range(2, 6):
            rep = clique_count_report(g, p)
            assert rep.edge_sum_ok() and rep.extension_sum_ok()
            assert rep.total == oracles.clique_count(g, p)
            assert rep.per_edge == oracles.edge_triangle_loads(g, p)
    R = {(3, 3): exact_ramsey("clique:3", "clique:3").r, (3, 4): exact_ramsey("clique:3", "clique:4").r,
         (4, 3): exact_ramsey("clique:4", "clique:3").r}
    assert R == {(3, 3): 6, (3, 4): 9, (4, 3): 9}
    rng = np.random.default_rng(7)
    keys = sorted(R)
    for i in range(100):
        p, z = keys[i % 3]
        m = int(rng.integers(R[p, z], 13))
        g = bounded_independence(m, z, rng)
        assert not oracles.has_independent(g, z)
        assert count_cliques(g, p) >= supersaturation_bound(m, p, R[p, z])
    report(7, f"{len(small)} corpus graphs and 100 bounded-independence graphs checked")


# 8 -------------------------------------------------------------------------------------


def _empty_pair_ok(g, res) -> bool:
    for A, B in [(res.A, res.B), *res.per_k.values()]:
        if set(A) & set(B) or find_independent_set(g, len(B), among=sum(1 << v for v in B)) is None:
            return False
        if any(g.has_edge(a, b) for a in A for b in B):
            return False
    return True


@pytest.mark.criterion(8)
def test_empty_pair_extraction():
    rng = np.random.default_rng(8)
    graphs = [petersen_graph()]
    while len(graphs) < 101:
        n = int(rng.integers(5, 13)) if len(graphs) <= 50 else int(rng.integers(13, 65))
        graphs.append(triangle_free(n, rng))
    brute = 0
    for g in graphs:
        res = empty_pair_extract(g)
        assert _empty_pair_ok(g, res)
        if g.n <= 12:
            want = oracles.best_empty_pair_sizes(g, 3)
            assert {k: len(A) for k, (A, B) in res.per_k.items()} == want
            brute += 1
    report(8, f"{len(graphs)} graphs with empty cross pairs, {brute} matched the brute-force optimum")

