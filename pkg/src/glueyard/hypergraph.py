"""Hypergraphs, clutters, vertex deletions and independence complexes."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable, Mapping, Optional

from ._bits import bits
from .complex import (
    SimplicialComplex,
    face,
    label_key,
    sort_labels,
    sorted_faces,
)
from .errors import DomainError


@dataclass(frozen=True)
class Hypergraph:
    ground: frozenset
    edges: frozenset
    # An empty edge (left behind by weak deletion) makes every set dependent.
    has_empty_edge: bool = False

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise DomainError("edges must be nonempty; use has_empty_edge")
            if not e <= self.ground:
                raise DomainError(f"edge {sort_labels(e)} not contained in ground set")

    def vertices(self) -> list[str]:
        return sort_labels(self.ground)

    def sorted_edges(self) -> list[list[str]]:
        return sorted_faces(self.edges)

    def sizes(self) -> set[int]:
        return {len(e) for e in self.edges}

    def is_independent(self, s: Iterable) -> bool:
        s = face(s)
        return not self.has_empty_edge and not any(e <= s for e in self.edges)

    def to_masks(self) -> tuple[list[str], list[int]]:
        labels = self.vertices()
        index = {v: i for i, v in enumerate(labels)}
        masks = []
        for e in self.edges:
            m = 0
            for v in e:
                m |= 1 << index[v]
            masks.append(m)
        return labels, sorted(masks)

    def to_json(self) -> dict:
        out = {"ground": self.vertices(), "edges": self.sorted_edges()}
        if self.has_empty_edge:
            out["has_empty_edge"] = True
        return out

    def __repr__(self) -> str:
        body = ",".join("".join(e) if all(len(v) == 1 for v in e) else "{" + ",".join(e) + "}"
                        for e in self.sorted_edges())
        flag = ", ∅" if self.has_empty_edge else ""
        return f"{type(self).__name__}([{body}{flag}] on {self.vertices()})"


@dataclass(frozen=True, repr=False)
class Clutter(Hypergraph):
    """A hypergraph whose edges (circuits) form an antichain."""

    def __post_init__(self):
        super().__post_init__()
        for a, b in combinations(list(self.edges), 2):
            if a <= b or b <= a:
                raise DomainError(
                    f"circuits {sort_labels(a)} and {sort_labels(b)} are comparable; not a clutter")


def hypergraph(ground: Iterable, edges: Iterable[Iterable]) -> Hypergraph:
    return Hypergraph(face(ground), frozenset(face(e) for e in edges))


def clutter(ground: Iterable, edges: Iterable[Iterable]) -> Clutter:
    return Clutter(face(ground), frozenset(face(e) for e in edges))


def graph_of(*edges: Iterable, ground: Iterable | None = None) -> Hypergraph:
    """Shorthand ``graph_of("12", "23")``; ground defaults to the union of edges."""
    es = [face(e) for e in edges]
    if ground is None:
        ground = frozenset().union(*es) if es else frozenset()
    return hypergraph(ground, es)


def as_clutter(h: Hypergraph) -> Clutter:
    if h.has_empty_edge:
        raise DomainError("a hypergraph with an empty edge is not a clutter")
    return Clutter(h.ground, h.edges)


def check_covering_clutter(c: Hypergraph) -> None:
    """Strict mode: every ground vertex lies in some circuit."""
    covered = frozenset().union(*c.edges) if c.edges else frozenset()
    if covered != c.ground:
        raise DomainError(f"vertices {sort_labels(c.ground - covered)} lie in no circuit")


def clutter_min(h: Hypergraph) -> Hypergraph:
    """Keep only inclusion-minimal edges (same edge ideal)."""
    if h.has_empty_edge:
        return Hypergraph(h.ground, frozenset(), True)
    kept = [e for e in h.edges if not any(f < e for f in h.edges)]
    return Clutter(h.ground, frozenset(kept))


# ---------------------------------------------------------------- independence


def _search(n: int, edges: list[int], best_only: bool = False) -> list[int]:
    """Maximal independent sets of a hypergraph on vertices 0..n-1.

    Branches include/exclude per vertex. An excluded vertex must end up
    blocked by an edge whose other vertices are all chosen, so exclusion
    is pruned when every edge through the vertex already meets another
    excluded vertex. With ``best_only`` only a maximum set is returned.
    """
    through = [[e for e in edges if e >> v & 1] for v in range(n)]
    out: list[int] = []
    best = [-1]

    def blocked(x: int, chosen: int) -> bool:
        bit = 1 << x
        return any((e & ~bit) & ~chosen == 0 for e in through[x])

    def rec(v: int, chosen: int, excluded: int, size: int) -> None:
        if best_only and size + (n - v) <= best[0]:
            return
        if v == n:
            if all(blocked(x, chosen) for x in bits(excluded)):
                if best_only:
                    best[0] = size
                    out[:] = [chosen]
                else:
                    out.append(chosen)
            return
        bit = 1 << v
        with_v = chosen | bit
        if all(e & ~with_v for e in through[v]):
            rec(v + 1, with_v, excluded, size + 1)
        ex = excluded | bit
        if any(e & ex == bit for e in through[v]):
            rec(v + 1, chosen, ex, size)

    rec(0, 0, 0, 0)
    return out


def independence_complex(h: Hypergraph) -> SimplicialComplex:
    """Complex of independent sets; facets are the maximal independent sets."""
    if h.has_empty_edge:
        return SimplicialComplex(h.ground, frozenset())
    labels, masks = h.to_masks()
    found = _search(len(labels), masks)
    return SimplicialComplex(h.ground, frozenset(frozenset(labels[i] for i in bits(m)) for m in found))


def maximal_independent_sets(h: Hypergraph) -> list[frozenset]:
    """Maximal independent sets in canonical order (size desc, then labels)."""
    cx = independence_complex(h)
    fs = list(cx.facets)
    fs.sort(key=lambda f: [label_key(v) for v in sort_labels(f)])
    return fs


def alpha(h: Hypergraph) -> int:
    """Independence number; 0 for a hypergraph carrying an empty edge."""
    if h.has_empty_edge:
        return 0
    labels, masks = h.to_masks()
    found = _search(len(labels), masks, best_only=True)
    return found[0].bit_count() if found else 0


# ---------------------------------------------------------------- deletions


def _require_vertex(h: Hypergraph, v: str) -> None:
    if v not in h.ground:
        raise DomainError(f"vertex {v!r} not in ground set")


def strong_delete(h: Hypergraph, v) -> Hypergraph:
    v = str(v)
    _require_vertex(h, v)
    return Hypergraph(h.ground - {v}, frozenset(e for e in h.edges if v not in e), h.has_empty_edge)


def weak_delete(h: Hypergraph, v) -> Hypergraph:
    v = str(v)
    _require_vertex(h, v)
    shrunk = {e - {v} for e in h.edges}
    empty = frozenset() in shrunk
    shrunk.discard(frozenset())
    return Hypergraph(h.ground - {v}, frozenset(shrunk), h.has_empty_edge or empty)


def _check_marking(h: Hypergraph, marking: Mapping) -> dict[str, int]:
    m = {str(k): int(val) for k, val in marking.items()}
    for k, val in m.items():
        _require_vertex(h, k)
        if val not in (0, 1):
            raise DomainError(f"marking value for {k!r} must be 0 or 1")
    return m


def wf_deletion(h: Hypergraph, marking: Mapping) -> tuple[Hypergraph, int]:
    """Strongly delete vertices marked 0, weakly delete those marked 1."""
    m = _check_marking(h, marking)
    for w in sort_labels(m):
        h = weak_delete(h, w) if m[w] else strong_delete(h, w)
    return h, sum(m.values())


def deletion_separation(u: Hypergraph, marking: Mapping) -> Hypergraph:
    """Like ``wf_deletion`` but weakly deleted vertices stay as isolated vertices."""
    m = _check_marking(u, marking)
    reduced, _ = wf_deletion(u, m)
    separated = {w for w, val in m.items() if val}
    return Hypergraph(reduced.ground | separated, reduced.edges, reduced.has_empty_edge)


def reduce_by(h: Hypergraph, d: Iterable) -> Hypergraph:
    """The hypergraph ``H/D`` with edges ``e - D`` (no minimalization)."""
    d = face(d)
    shrunk = {e - d for e in h.edges}
    empty = frozenset() in shrunk
    shrunk.discard(frozenset())
    return Hypergraph(h.ground - d, frozenset(shrunk), h.has_empty_edge or empty)


def is_strong_dominating(h: Hypergraph, d: Iterable) -> bool:
    d = face(d)
    if not d <= h.ground:
        raise DomainError("dominating set must lie in the ground set")
    r = reduce_by(h, d)
    if r.has_empty_edge:
        return True
    return all(frozenset([v]) in r.edges for v in r.ground)


def ds_alpha_profile(u: Hypergraph, w: Iterable) -> set[int]:
    """Independence numbers of all deletion-separations over markings of ``w``."""
    w = sort_labels(face(w))
    if not u.is_independent(w) or not is_strong_dominating(u, w):
        raise DomainError(f"{w} is not a strong dominating independent set")
    return {alpha(deletion_separation(u, dict(zip(w, f))))
            for f in product((0, 1), repeat=len(w))}


def ds_family(u: Hypergraph, w: Iterable) -> list[tuple[dict, Hypergraph]]:
    """Every deletion-separation of ``u`` over ``w`` with its marking."""
    w = sort_labels(face(w))
    return [(dict(zip(w, f)), deletion_separation(u, dict(zip(w, f))))
            for f in product((0, 1), repeat=len(w))]


def induced(h: Hypergraph, w: Iterable) -> Hypergraph:
    w = face(w)
    if not w <= h.ground:
        raise DomainError("induced vertex set must lie in the ground set")
    cls = Clutter if isinstance(h, Clutter) else Hypergraph
    return cls(w, frozenset(e for e in h.edges if e <= w))


def minkowski_shift(d: Iterable[int], i: int) -> set[int]:
    """``D - [0, i]``."""
    return {x - j for x in d for j in range(i + 1)}


def size_restrict(h: Hypergraph, sizes: Iterable[int]) -> Hypergraph:
    """Spanning subhypergraph keeping edges whose size lies in ``sizes``."""
    sizes = set(sizes)
    return Hypergraph(h.ground, frozenset(e for e in h.edges if len(e) in sizes))


# ---------------------------------------------------------------- clutters


def _uniformity(c: Hypergraph, d: int) -> None:
    bad = [sort_labels(e) for e in c.edges if len(e) != d]
    if bad:
        raise DomainError(f"not {d}-uniform: {bad[0]}")


def complement_uniform(c: Hypergraph, d: int) -> Clutter:
    _uniformity(c, d)
    every = {frozenset(x) for x in combinations(sort_labels(c.ground), d)}
    return Clutter(c.ground, frozenset(every - set(c.edges)))


def clique_complex(c: Hypergraph, d: int) -> SimplicialComplex:
    """Sets that are smaller than ``d`` or whose ``d``-subsets are all circuits."""
    _uniformity(c, d)
    labels = sort_labels(c.ground)
    idx = {v: i for i, v in enumerate(labels)}
    circuits = {sum(1 << idx[v] for v in e) for e in c.edges}
    n = len(labels)

    def extends(cur: int, v: int) -> bool:
        # cur is a clique; cur + v is one iff every new d-subset through v is a circuit
        members = list(bits(cur))
        if len(members) + 1 < d:
            return True
        return all(sum(1 << x for x in sub) | (1 << v) in circuits
                   for sub in combinations(members, d - 1))

    cliques: list[int] = []

    def rec(v: int, cur: int) -> None:
        if v == n:
            cliques.append(cur)
            return
        if extends(cur, v):
            rec(v + 1, cur | (1 << v))
        rec(v + 1, cur)

    rec(0, 0)
    return SimplicialComplex.from_masks(labels, cliques)


def heights(h: Hypergraph) -> tuple[int, int]:
    """Height and big height of the edge ideal from the independence facets."""
    cx = independence_complex(h)
    if cx.is_void:
        raise DomainError("independence complex is void")
    sizes = [len(f) for f in cx.facets]
    n = len(h.ground)
    return n - max(sizes), n - min(sizes)


def depth_if_sequentially_cm(h: Hypergraph) -> int:
    """``dim S - bight``; meaningful when the complex is sequentially CM."""
    return len(h.ground) - heights(h)[1]

