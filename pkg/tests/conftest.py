"""Shared brute-force oracles and hypothesis strategies.

The oracles work straight from the definitions on explicit face sets, so
they share no code with the bitmask kernels they check.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations, permutations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from glueyard import SimplicialComplex, from_facets, hypergraph

settings.register_profile("default", max_examples=60, deadline=None,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("default")


def subsets(ground):
    ground = sorted(ground)
    for r in range(len(ground) + 1):
        for c in combinations(ground, r):
            yield frozenset(c)


def maximal_sets(sets):
    sets = set(sets)
    return {s for s in sets if not any(s < t for t in sets)}


def brute_independence_facets(ground, edges):
    edges = [frozenset(map(str, e)) for e in edges]
    ind = [s for s in subsets(map(str, ground)) if not any(e <= s for e in edges)]
    return maximal_sets(ind)


def brute_faces(cx: SimplicialComplex) -> set:
    out = set()
    for f in cx.facets:
        out.update(subsets(f))
    return out


def rational_rank(rows: list[list]) -> int:
    m = [[Fraction(x) for x in r] for r in rows]
    rank, col = 0, 0
    ncols = len(m[0]) if m else 0
    while rank < len(m) and col < ncols:
        piv = next((i for i in range(rank, len(m)) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(len(m)):
            if i != rank and m[i][col] != 0:
                q = m[i][col] / m[rank][col]
                m[i] = [a - q * b for a, b in zip(m[i], m[rank])]
        rank += 1
        col += 1
    return rank


def brute_betti(cx: SimplicialComplex) -> list[int]:
    """Reduced rational Betti numbers indexed from degree -1 up to dim."""
    faces = brute_faces(cx)
    top = max(len(f) for f in faces)
    by = {k: sorted((sorted(f) for f in faces if len(f) == k)) for k in range(top + 1)}
    ranks = {}
    for k in range(1, top + 1):
        idx = {tuple(f): i for i, f in enumerate(by[k - 1])}
        rows = []
        for f in by[k]:
            row = [0] * len(by[k - 1])
            for pos in range(len(f)):
                row[idx[tuple(f[:pos] + f[pos + 1:])]] = (-1) ** pos
            rows.append(row)
        ranks[k] = rational_rank(rows) if rows and rows[0] else 0
    return [len(by[k]) - ranks.get(k, 0) - ranks.get(k + 1, 0) for k in range(top + 1)]


def brute_link(cx, f):
    return {g - f for g in cx.facets if f <= g}


def _cx(ground, facets):
    return from_facets(ground, facets)


def brute_cm(cx: SimplicialComplex) -> bool:
    for f in brute_faces(cx):
        lk = _cx(cx.ground, brute_link(cx, f))
        b = brute_betti(lk)
        top = max(len(g) for g in lk.facets)
        if any(b[s] for s in range(top)):
            return False
    return True


def brute_vd(facets: frozenset) -> bool:
    facets = maximal_sets(facets)
    if len(facets) == 1:
        return True
    for v in sorted(set().union(*facets)):
        dl = maximal_sets({f - {v} for f in facets})
        lk = {f - {v} for f in facets if v in f}
        if any(g not in facets for g in dl):
            continue
        if brute_vd(frozenset(lk)) and brute_vd(frozenset(dl)):
            return True
    return False


def brute_shellable(facets) -> bool:
    """Any order in which each new facet meets the earlier ones in a pure codim-one complex."""
    facets = list(maximal_sets(facets))
    for order in permutations(facets):
        ok = True
        for i in range(1, len(order)):
            f = order[i]
            meets = maximal_sets({f & g for g in order[:i]})
            if not all(len(m) == len(f) - 1 for m in meets):
                ok = False
                break
        if ok:
            return True
    return False


@st.composite
def complexes(draw, max_vertices=6, max_facets=6, allow_void=False):
    n = draw(st.integers(0 if allow_void else 1, max_vertices))
    ground = [str(i) for i in range(1, n + 1)]
    masks = draw(st.lists(st.integers(0, (1 << n) - 1), min_size=0 if allow_void else 1, max_size=max_facets))
    faces = [frozenset(ground[j] for j in range(n) if m >> j & 1) for m in masks]
    return from_facets(ground, faces)


@st.composite
def graphs(draw, max_vertices=6):
    n = draw(st.integers(1, max_vertices))
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return hypergraph(range(1, n + 1), chosen)


@st.composite
def hypergraphs(draw, max_vertices=6, max_edges=6):
    n = draw(st.integers(1, max_vertices))
    masks = draw(st.lists(st.integers(1, (1 << n) - 1), max_size=max_edges))
    edges = [[j + 1 for j in range(n) if m >> j & 1] for m in masks]
    return hypergraph(range(1, n + 1), edges)
