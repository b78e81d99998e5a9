"""Gluing constructions on hypergraphs and clutters, plus the PIP checker."""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping, Optional

from .complex import SimplicialComplex, face, minimal_nonfaces, sort_labels, sorted_faces
from .errors import DomainError
from .hypergraph import (
    Clutter,
    Hypergraph,
    clutter_min,
    hypergraph,
    independence_complex,
    induced,
    minkowski_shift,
    size_restrict,
)


@dataclass(frozen=True)
class GluingTriple:
    """A component hypergraph glued onto the vertex block ``attach_to``.

    A mixed edge ``e | e'`` with ``e`` inside ``attach_to`` and ``e'`` an edge
    of ``component`` is created whenever its size lies in ``sizes``.
    """

    attach_to: frozenset
    sizes: frozenset
    component: Hypergraph

    @classmethod
    def of(cls, attach_to: Iterable, sizes: Iterable[int], component: Hypergraph) -> "GluingTriple":
        sizes = frozenset(int(s) for s in sizes)
        if any(s < 0 for s in sizes):
            raise DomainError("gluing sizes must be non-negative")
        return cls(face(attach_to), sizes, component)


def _rename(h: Hypergraph, prefix: str) -> Hypergraph:
    m = {v: f"{prefix}/{v}" for v in h.ground}
    return Hypergraph(frozenset(m.values()), frozenset(frozenset(m[v] for v in e) for e in h.edges),
                      h.has_empty_edge)


def _rename_clutter(c: Clutter, prefix: str) -> Clutter:
    r = _rename(c, prefix)
    return Clutter(r.ground, r.edges)


def _disjoint_components(taken: set, comps: list, prefixes: list[str], rename) -> list:
    """Rename components whose labels collide with ``taken`` or with each other."""
    out = []
    for comp, prefix in zip(comps, prefixes):
        if comp.ground & taken:
            comp = rename(comp, prefix)
            if comp.ground & taken:
                raise DomainError(f"cannot make component {prefix} disjoint by namespacing")
        taken |= comp.ground
        out.append(comp)
    return out


def hybrid(central: Hypergraph, triples: list[GluingTriple], rest: Optional[Iterable] = None,
           normalize: bool = False) -> Hypergraph:
    """Glue each triple's component onto its block of ``central``.

    The blocks must be pairwise disjoint subsets of the central ground; the
    remaining vertices form ``rest`` (checked when given). Components whose
    labels collide are renamed ``component_i/label``. With ``normalize`` the
    result is reduced to its minimal edges.
    """
    if central.has_empty_edge:
        raise DomainError("central hypergraph carries an empty edge")
    seen: set = set()
    for i, t in enumerate(triples, 1):
        if not t.attach_to <= central.ground:
            raise DomainError(f"block {i} leaves the central ground set: {sort_labels(t.attach_to - central.ground)}")
        if t.attach_to & seen:
            raise DomainError(f"block {i} overlaps an earlier block on {sort_labels(t.attach_to & seen)}")
        seen |= t.attach_to
    if rest is not None:
        rest = face(rest)
        if rest & seen or (rest | seen) != central.ground:
            raise DomainError("blocks and rest do not partition the central ground set")
    comps = _disjoint_components(set(central.ground), [t.component for t in triples],
                                 [f"component_{i}" for i in range(1, len(triples) + 1)], _rename)
    ground = set(central.ground)
    edges = set(central.edges)
    for t, comp in zip(triples, comps):
        if comp.has_empty_edge:
            raise DomainError("glued components must have nonempty edges")
        ground |= comp.ground
        block = sort_labels(t.attach_to)
        for e2 in comp.edges:
            for size in t.sizes:
                k = size - len(e2)
                if 0 <= k <= len(block):
                    edges.update(e2 | frozenset(e) for e in combinations(block, k))
    out = Hypergraph(frozenset(ground), frozenset(edges))
    return clutter_min(out) if normalize else out


# ---------------------------------------------------------------- PIP


@dataclass
class PipReport:
    holds: bool
    alpha: int
    level: Optional[int] = None
    side: Optional[str] = None
    witness: Optional[list[str]] = None
    shallow_facets: list = field(default_factory=list)
    deep_facets: list = field(default_factory=list)
    necessary_condition: bool = True

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "alpha": self.alpha,
            "level": self.level,
            "side": self.side,
            "witness": self.witness,
            "shallow_facets": self.shallow_facets,
            "deep_facets": self.deep_facets,
            "necessary_condition": self.necessary_condition,
        }


def level_complex(h: Hypergraph, sizes: Iterable[int], depth: int) -> SimplicialComplex:
    """Independence complex of ``h`` restricted to edge sizes ``sizes - [0, depth]``."""
    return independence_complex(size_restrict(h, minkowski_shift(sizes, depth)))


def pip_check(alpha: int, sizes: Iterable[int], h: Hypergraph) -> PipReport:
    """Check the proper independence property level by level.

    At each level ``i < alpha`` every deeper facet must sit properly inside a
    shallower one (side ``a``) and every shallower facet must properly
    contain a deeper one (side ``b``). The first failure is reported.
    """
    if alpha < 1:
        raise DomainError("alpha must be at least 1")
    sizes = set(sizes)
    diffs = {x - s for x in sizes for s in h.sizes()}
    report = PipReport(True, alpha, necessary_condition=set(range(1, alpha + 1)) <= diffs)
    deep = level_complex(h, sizes, 0)
    for i in range(alpha):
        shallow, deep = deep, level_complex(h, sizes, i + 1)
        shallow_f = [face(f) for f in shallow.sorted_facets()]
        deep_f = [face(f) for f in deep.sorted_facets()]
        bad_a = next((g for g in deep_f if not any(g < s for s in shallow_f)), None)
        bad_b = next((s for s in shallow_f if not any(g < s for g in deep_f)), None)
        if bad_a is not None or bad_b is not None:
            report.holds = False
            report.level = i
            report.side = "a" if bad_a is not None else "b"
            report.witness = sort_labels(bad_a if bad_a is not None else bad_b)
            report.shallow_facets = sorted_faces(shallow_f)
            report.deep_facets = sorted_faces(deep_f)
            return report
    return report


def pip_padding(c: Hypergraph, d: int, exclude: Iterable[Iterable] = (), alpha: Optional[int] = None) -> Hypergraph:
    """``c`` plus every nonempty vertex set of size below ``d`` outside ``exclude``.

    ``c`` must be ``d``-uniform. When ``alpha`` is given, members of
    ``exclude`` are limited to size ``d - alpha - 1``.
    """
    bad = [sort_labels(e) for e in c.edges if len(e) != d]
    if bad:
        raise DomainError(f"padding needs a {d}-uniform clutter; found {bad[0]}")
    skip = {face(x) for x in exclude}
    if alpha is not None:
        big = [sort_labels(x) for x in skip if len(x) > d - alpha - 1]
        if big:
            raise DomainError(f"excluded set {big[0]} too large for alpha={alpha}")
    labels = sort_labels(c.ground)
    edges = set(c.edges)
    for k in range(1, d):
        edges.update(frozenset(x) for x in combinations(labels, k) if frozenset(x) not in skip)
    return Hypergraph(c.ground, frozenset(edges))


# ---------------------------------------------------------------- clutter gluing


def _prepare_attach(c: Clutter, attach: Mapping) -> list[tuple[str, Clutter]]:
    items = []
    for u in sort_labels(str(k) for k in attach):
        comp = attach[u] if u in attach else attach[int(u)]
        if u not in c.ground:
            raise DomainError(f"attachment vertex {u!r} not in the central ground set")
        if not comp.edges:
            raise DomainError(f"clutter attached at {u!r} has no circuits")
        items.append((u, comp))
    comps = _disjoint_components(set(c.ground), [comp for _, comp in items],
                                 [f"component_{i}" for i in range(1, len(items) + 1)], _rename_clutter)
    return [(u, comp) for (u, _), comp in zip(items, comps)]


def glue(c: Clutter, attach: Mapping) -> Clutter:
    """``C`` together with ``e + u`` for every circuit ``e`` of the clutter attached at ``u``."""
    ground = set(c.ground)
    edges = set(c.edges)
    for u, comp in _prepare_attach(c, attach):
        ground |= comp.ground
        edges.update(e | {u} for e in comp.edges)
    return Clutter(frozenset(ground), frozenset(edges))


def star_reduction(cu: Clutter) -> Clutter:
    """Minimal sets among circuits with one vertex removed."""
    if not cu.edges:
        raise DomainError("star reduction needs at least one circuit")
    if any(len(e) == 1 for e in cu.edges):
        raise DomainError("a singleton circuit would reduce to the empty set")
    shrunk = {e - {x} for e in cu.edges for x in e}
    kept = [e for e in shrunk if not any(f < e for f in shrunk)]
    return Clutter(cu.ground, frozenset(kept))


def glue_star(c: Clutter, attach: Mapping) -> Clutter:
    """``C``, every attached clutter, and ``u + e`` for ``e`` in each star reduction."""
    ground = set(c.ground)
    edges = set(c.edges)
    for u, comp in _prepare_attach(c, attach):
        ground |= comp.ground
        edges |= comp.edges
        edges.update(e | {u} for e in star_reduction(comp).edges)
    return Clutter(frozenset(ground), frozenset(edges))


def is_independently_embedded(c: Hypergraph, removed: Iterable) -> bool:
    """Whether the subclutter induced off ``removed`` is independently embedded.

    Every facet of the whole independence complex, cut down to the kept
    vertices, has to be a facet of the kept part's independence complex.
    """
    removed = face(removed)
    if not removed <= c.ground:
        raise DomainError("removed vertices must lie in the ground set")
    kept = c.ground - removed
    sub = independence_complex(induced(c, kept)).facets
    return all((f & kept) in sub for f in independence_complex(c).facets)


# ---------------------------------------------------------------- named constructions


def _pendant(label: str) -> Hypergraph:
    return hypergraph([label], [[label]])


def coloring_complex(cx: SimplicialComplex, parts: list[Iterable]) -> SimplicialComplex:
    """Add one new vertex per colour class, free to join faces missing that class.

    Built by gluing a single-vertex component onto each class of the
    Stanley-Reisner clutter with mixed edges of size two.
    """
    parts = _check_coloring(cx, parts)
    central = Hypergraph(cx.ground, frozenset(minimal_nonfaces(cx)))
    triples = [GluingTriple.of(p, [2], _pendant(f"w{i}")) for i, p in enumerate(parts, 1)]
    return independence_complex(hybrid(central, triples))


def coloring_complex_direct(cx: SimplicialComplex, parts: list[Iterable]) -> SimplicialComplex:
    """Same complex by expanding faces ``s + t`` directly."""
    parts = _check_coloring(cx, parts)
    taken = set(cx.ground)
    names = []
    for i in range(1, len(parts) + 1):
        w = f"w{i}"
        names.append(w if w not in taken else f"component_{i}/{w}")
    faces = []
    for s in cx.faces():
        faces.append(s | {w for w, p in zip(names, parts) if not s & p})
    ground = set(cx.ground) | set(names)
    kept = {f for f in faces if not any(f < g for g in faces)}
    return SimplicialComplex(frozenset(ground), frozenset(kept))


def _check_coloring(cx: SimplicialComplex, parts: list[Iterable]) -> list[frozenset]:
    parts = [face(p) for p in parts]
    union: set = set()
    for p in parts:
        if p & union:
            raise DomainError("colour classes overlap")
        union |= p
    if union != cx.ground:
        raise DomainError("colour classes must partition the ground set")
    for f in cx.facets:
        for p in parts:
            if len(f & p) > 1:
                raise DomainError(f"face {sort_labels(f)} meets a colour class twice")
    return parts


def corona(g: Hypergraph) -> Hypergraph:
    """Attach a pendant vertex ``w<v>`` to every vertex ``v``."""
    triples = [GluingTriple.of([v], [2], _pendant(f"w{v}")) for v in g.vertices()]
    return hybrid(g, triples)


def clique_whiskers(g: Hypergraph, sizes: Mapping) -> Clutter:
    """Attach a complete graph with ``sizes[v]`` new vertices at each vertex ``v``.

    Each attached graph together with its vertex forms a clique.
    """
    attach = {}
    for v in g.vertices():
        k = int(sizes.get(v, 1))
        if k < 2:
            raise DomainError("attached complete graphs need at least two vertices")
        new = [f"{v}.{j}" for j in range(1, k + 1)]
        attach[v] = Clutter(frozenset(new), frozenset(frozenset(p) for p in combinations(new, 2)))
    return glue_star(Clutter(g.ground, g.edges), attach)


def cycle_with_ear(r: int) -> Hypergraph:
    """An ``r``-cycle on ``1..r`` plus vertex ``r+1`` adjacent to ``1`` and ``2``."""
    if r < 3:
        raise DomainError("cycle length must be at least 3")
    edges = [[str(i), str(i % r + 1)] for i in range(1, r + 1)]
    x = str(r + 1)
    edges += [["1", x], ["2", x]]
    return hypergraph([str(i) for i in range(1, r + 2)], edges)
