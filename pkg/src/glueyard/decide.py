"""Vertex-decomposability and shellability searches with certificates."""
from __future__ import annotations

import os
from typing import Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from ._bits import bits, compress, union
from .complex import DEFAULT_VERTEX_BUDGET, SimplicialComplex, face, sort_labels
from .errors import DomainError, ResourceLimitError

DEFAULT_SHELL_BUDGET = 10**7
DEFAULT_VD_BUDGET = 10**6
VD_UNLIMITED_BELOW = 20


def budget_from_env(default: int) -> int:
    raw = os.environ.get("GLUEYARD_BUDGET")
    if raw:
        try:
            return int(raw)
        except ValueError:
            raise DomainError(f"GLUEYARD_BUDGET must be an integer, got {raw!r}")
    return default


def _check_vertices(cx: SimplicialComplex, budget: int) -> None:
    if cx.is_void:
        raise DomainError("decision procedures need a nonvoid complex")
    n = len(cx.used_vertices())
    if n > budget:
        raise ResourceLimitError(f"{n} vertices exceed the vertex budget {budget}")


# ---------------------------------------------------------------- vertex decomposability


def _invariant(facets: tuple[int, ...]) -> tuple:
    """Colour-refinement fingerprint of the facet/vertex incidence."""
    verts = list(bits(union(facets)))
    vcol = {v: sum(1 for f in facets if f >> v & 1) for v in verts}
    fcol = {f: f.bit_count() for f in facets}
    for _ in range(3):
        fcol = {f: hash((fcol[f], tuple(sorted(vcol[v] for v in bits(f))))) for f in facets}
        vcol = {v: hash((vcol[v], tuple(sorted(fcol[f] for f in facets if f >> v & 1)))) for v in verts}
    return len(verts), len(facets), tuple(sorted(fcol.values())), tuple(sorted(vcol.values()))


def _incidence_graph(facets: tuple[int, ...]) -> nx.Graph:
    g = nx.Graph()
    for i, f in enumerate(facets):
        g.add_node(("f", i), kind="f")
        for v in bits(f):
            g.add_node(("v", v), kind="v")
            g.add_edge(("f", i), ("v", v))
    return g


def _same_kind(a: dict, b: dict) -> bool:
    return a["kind"] == b["kind"]


class _VDSearch:
    """Recursive shedding search memoized up to isomorphism.

    Exact repeats hit a dict keyed by the compressed facet tuple; other
    lookups go through a fingerprint bucket and an explicit isomorphism test.
    """

    ISO_MIN_VERTICES = 6

    def __init__(self, node_budget: Optional[int]):
        self.node_budget = node_budget
        self.nodes = 0
        self.exact: dict[tuple, bool] = {}
        self.buckets: dict[tuple, list[tuple[nx.Graph, bool]]] = {}

    def candidates(self, facets: tuple[int, ...]) -> list[int]:
        deg: dict[int, int] = {}
        for f in facets:
            for v in bits(f):
                deg[v] = deg.get(v, 0) + 1
        return sorted(deg, key=lambda v: (-deg[v], v))

    @staticmethod
    def split(facets: tuple[int, ...], v: int) -> Optional[tuple[tuple, tuple]]:
        """(link, deletion) when ``v`` is a shedding vertex, else None."""
        bit = 1 << v
        with_v = [f for f in facets if f & bit]
        without = [f for f in facets if not f & bit]
        for f in with_v:
            rest = f & ~bit
            if not any(rest & ~g == 0 for g in without):
                return None
        return tuple(f & ~bit for f in with_v), tuple(without)

    def lookup(self, key: tuple) -> Optional[bool]:
        if key in self.exact:
            return self.exact[key]
        if len(list(bits(union(key)))) < self.ISO_MIN_VERTICES:
            return None
        bucket = self.buckets.get(_invariant(key))
        if not bucket:
            return None
        g = _incidence_graph(key)
        for other, verdict in bucket:
            if GraphMatcher(g, other, node_match=_same_kind).is_isomorphic():
                self.exact[key] = verdict
                return verdict
        return None

    def store(self, key: tuple, verdict: bool) -> None:
        self.exact[key] = verdict
        if len(list(bits(union(key)))) >= self.ISO_MIN_VERTICES:
            self.buckets.setdefault(_invariant(key), []).append((_incidence_graph(key), verdict))

    def decide(self, facets: tuple[int, ...]) -> bool:
        if len(facets) == 1:
            return True
        key = compress(facets)
        hit = self.lookup(key)
        if hit is not None:
            return hit
        self.nodes += 1
        if self.node_budget is not None and self.nodes > self.node_budget:
            raise ResourceLimitError(f"vertex-decomposability search exceeded {self.node_budget} nodes")
        verdict = False
        for v in self.candidates(facets):
            parts = self.split(facets, v)
            if parts and self.decide(parts[0]) and self.decide(parts[1]):
                verdict = True
                break
        self.store(key, verdict)
        return verdict

    def certificate(self, facets: tuple[int, ...], labels: list[str], path: str, out: list) -> None:
        if len(facets) == 1:
            out.append({"branch": path, "simplex": sort_labels(labels[i] for i in bits(facets[0]))})
            return
        for v in self.candidates(facets):
            parts = self.split(facets, v)
            if parts and self.decide(parts[0]) and self.decide(parts[1]):
                out.append({"branch": path, "vertex": labels[v]})
                self.certificate(parts[0], labels, path + "L", out)
                self.certificate(parts[1], labels, path + "D", out)
                return
        raise AssertionError("certificate requested for a non-decomposable complex")


def is_vertex_decomposable(cx: SimplicialComplex, vertex_budget: int = DEFAULT_VERTEX_BUDGET,
                           node_budget: Optional[int] = None) -> tuple[bool, Optional[list[dict]]]:
    """Decide vertex-decomposability; on success also return a shedding certificate.

    The certificate lists records in preorder. ``branch`` is the path from
    the root: ``L`` steps into the link, ``D`` into the deletion. Each
    record names either the shedding vertex used there or the simplex that
    ends the branch. ``{∅}`` counts as a simplex.
    """
    _check_vertices(cx, vertex_budget)
    if node_budget is None and len(cx.used_vertices()) >= VD_UNLIMITED_BELOW:
        node_budget = budget_from_env(DEFAULT_VD_BUDGET)
    labels, masks = cx.to_masks()
    search = _VDSearch(node_budget)
    facets = tuple(masks)
    if not search.decide(facets):
        return False, None
    cert: list[dict] = []
    search.certificate(facets, labels, "", cert)
    return True, cert


def replay_vd_certificate(cx: SimplicialComplex, cert: list[dict]) -> bool:
    """Check a certificate against the complex using set operations only."""
    records = {r["branch"]: r for r in cert}

    def walk(facets: frozenset, path: str) -> bool:
        rec = records.get(path)
        if rec is None:
            return False
        if "simplex" in rec:
            return len(facets) == 1 and face(rec["simplex"]) in facets
        v = rec["vertex"]
        deletion = {f - {v} for f in facets}
        deletion = {f for f in deletion if not any(f < g for g in deletion)}
        if not deletion <= facets:
            return False
        lk = frozenset(f - {v} for f in facets if v in f)
        if not lk:
            return False
        return walk(lk, path + "L") and walk(frozenset(deletion), path + "D")

    return not cx.is_void and walk(cx.facets, "")


# ---------------------------------------------------------------- shellability


class _Exhausted(Exception):
    pass


def _extends(placed: list[int], f: int) -> bool:
    """``<placed> ∩ <f>`` is generated by a nonempty set of codimension-one faces of ``f``."""
    inter = [g & f for g in placed]
    target = f.bit_count() - 1
    codim1 = [i for i in inter if i.bit_count() == target]
    if not codim1:
        return False
    return all(any(i & ~c == 0 for c in codim1) for i in inter)


def _shell_masks(facets: list[int], budget: int) -> Optional[list[int]]:
    facets = sorted(facets, key=lambda f: (-f.bit_count(), f))
    m = len(facets)
    dead: set[int] = set()
    order: list[int] = []
    nodes = 0

    def dfs(placed: int) -> bool:
        nonlocal nodes
        if len(order) == m:
            return True
        if placed in dead:
            return False
        nodes += 1
        if nodes > budget:
            raise _Exhausted
        remaining = [i for i in range(m) if not placed >> i & 1]
        top = facets[remaining[0]].bit_count()
        for i in remaining:
            f = facets[i]
            if f.bit_count() != top:
                break
            if not order or _extends([facets[j] for j in order], f):
                order.append(i)
                if dfs(placed | (1 << i)):
                    return True
                order.pop()
        dead.add(placed)
        return False

    if dfs(0):
        return [facets[i] for i in order]
    return None


def is_shellable(cx: SimplicialComplex, budget: Optional[int] = None) -> tuple[str, Optional[list[list[str]]]]:
    """Search for a (nonpure) shelling; verdict is ``yes``, ``no`` or ``unknown``.

    Only orders with weakly decreasing facet dimension are explored, which
    loses nothing since any shelling can be rearranged into one.
    """
    if cx.is_void:
        raise DomainError("shellability of the void complex is undefined")
    if budget is None:
        budget = budget_from_env(DEFAULT_SHELL_BUDGET)
    labels, masks = cx.to_masks()
    try:
        order = _shell_masks(masks, budget)
    except _Exhausted:
        return "unknown", None
    if order is None:
        return "no", None
    return "yes", [sort_labels(labels[i] for i in bits(f)) for f in order]


def is_shelling_order(cx: SimplicialComplex, order: list) -> bool:
    """Check that ``order`` lists every facet once and satisfies the shelling condition."""
    fs = [face(f) for f in order]
    if len(fs) != len(cx.facets) or set(fs) != set(cx.facets):
        return False
    labels, _ = cx.to_masks()
    index = {v: i for i, v in enumerate(labels)}
    masks = [sum(1 << index[v] for v in f) for f in fs]
    return all(_extends(masks[:i], masks[i]) for i in range(1, len(masks)))
