"""Seeded instance generators and brute-force checks of the gluing theorems.

Every check compares a value computed directly on the glued object (the
left-hand side) with the value predicted from the pieces (the right-hand
side) and emits a ``VerdictRecord``.
"""
from __future__ import annotations

import hashlib
import json
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Any, Iterable, Optional

from .complex import SimplicialComplex, from_facets, is_pure, sort_labels
from .decide import is_shellable, is_vertex_decomposable
from .errors import DomainError
from .glue import (
    GluingTriple,
    corona,
    glue,
    glue_star,
    hybrid,
    is_independently_embedded,
    level_complex,
    pip_check,
    pip_padding,
    star_reduction,
)
from .homology import GF2, RATIONALS, Field, is_cohen_macaulay, is_sequentially_cm
from .hypergraph import (
    Clutter,
    Hypergraph,
    alpha,
    ds_alpha_profile,
    hypergraph,
    independence_complex,
    induced,
    is_strong_dominating,
    maximal_independent_sets,
    size_restrict,
)

FAMILIES = ("hybrid", "glue", "glue-star", "ds-profile", "chain")
KINDS = ("graph", "corona", "chordal", "complex", "hybrid", "glue", "glue_star", "ds")
SHELL_SEARCH_BUDGET = 200_000  # search nodes per complex before "undecided"


def default_properties(fields: Iterable[Field] = (RATIONALS, GF2)) -> list[str]:
    return ["vd"] + [f"scm:{k}" for k in fields] + ["shell"]


# ---------------------------------------------------------------- records


@dataclass
class VerdictRecord:
    check: str
    digest: str
    lhs: Any
    rhs: Any
    status: str  # agree | disagree | skip
    prop: Optional[str] = None
    witness: Optional[dict] = None
    repro: dict = field(default_factory=dict)

    @property
    def agree(self) -> bool:
        return self.status == "agree"

    def to_json(self) -> dict:
        out = {"check": self.check, "digest": self.digest, "lhs": self.lhs, "rhs": self.rhs,
               "status": self.status, "agree": self.status != "disagree"}
        if self.prop is not None:
            out["property"] = self.prop
        if self.witness:
            out["witness"] = self.witness
        if self.repro:
            out["repro"] = self.repro
        return out


def digest_of(instance_json: Any) -> str:
    text = json.dumps(instance_json, sort_keys=True, separators=(",", ":"))
    return hashlib.sha256(text.encode()).hexdigest()[:16]


def _record(check: str, digest: str, lhs, rhs, prop=None, witness=None) -> VerdictRecord:
    if lhs is None or rhs is None:
        status = "skip"
    else:
        status = "agree" if lhs == rhs else "disagree"
    return VerdictRecord(check, digest, lhs, rhs, status, prop, witness)


def _skip(check: str, digest: str, reason: str, prop=None) -> VerdictRecord:
    return VerdictRecord(check, digest, None, None, "skip", prop, {"reason": reason})


class Evaluator:
    """Cached property evaluation; ``None`` means undecided (shellability budget)."""

    def __init__(self, shell_budget: Optional[int] = None):
        self.shell_budget = shell_budget
        self.cache: dict = {}

    def __call__(self, prop: str, cx: SimplicialComplex) -> Optional[bool]:
        key = (prop, cx.facets)
        if key not in self.cache:
            self.cache[key] = self._eval(prop, cx)
        return self.cache[key]

    def _eval(self, prop: str, cx: SimplicialComplex) -> Optional[bool]:
        if prop == "vd":
            return is_vertex_decomposable(cx)[0]
        if prop == "shell":
            # decomposable => shellable => sequentially CM, so only the gap needs a search
            if self("vd", cx):
                return True
            if not self("scm:q", cx):
                return False
            budget = SHELL_SEARCH_BUDGET if self.shell_budget is None else self.shell_budget
            verdict = is_shellable(cx, budget)[0]
            return None if verdict == "unknown" else verdict == "yes"
        kind, _, fld = prop.partition(":")
        if kind == "scm":
            return is_sequentially_cm(cx, Field.parse(fld))
        if kind == "cm":
            return is_cohen_macaulay(cx, Field.parse(fld))
        raise DomainError(f"unknown property {prop!r}")

    def all_of(self, prop: str, complexes: Iterable[SimplicialComplex]) -> Optional[bool]:
        """Conjunction that stays undecided only when no member is false."""
        undecided = False
        for cx in complexes:
            v = self(prop, cx)
            if v is False:
                return False
            if v is None:
                undecided = True
        return None if undecided else True


# ---------------------------------------------------------------- generators


@dataclass(frozen=True)
class InstanceSpec:
    kind: str
    seed: int
    index: int = 0
    max_vertices: int = 12
    n: Optional[int] = None

    def rng(self) -> random.Random:
        return random.Random(f"{self.kind}:{self.seed}:{self.index}")


def _labels(prefix: str, n: int) -> list[str]:
    return [f"{prefix}{i}" for i in range(1, n + 1)]


def random_graph(rng: random.Random, labels: list[str], p: float = 0.5) -> Hypergraph:
    return hypergraph(labels, [pair for pair in combinations(labels, 2) if rng.random() < p])


def random_chordal(rng: random.Random, n: int) -> Hypergraph:
    """Add vertices one at a time, each joined to a clique of the current graph."""
    labels = _labels("", n)
    adj: dict[str, set] = {}
    for v in labels:
        clique: list[str] = []
        if adj and rng.random() < 0.85:
            start = rng.choice(sorted(adj))
            clique = [start]
            for x in rng.sample(sorted(adj[start]), len(adj[start])):
                if all(x in adj[y] for y in clique) and rng.random() < 0.6:
                    clique.append(x)
        adj[v] = set(clique)
        for x in clique:
            adj[x].add(v)
    edges = {frozenset((a, b)) for a in adj for b in adj[a]}
    return hypergraph(labels, edges)


def random_complex(rng: random.Random, n: int) -> SimplicialComplex:
    labels = _labels("", n)
    faces = []
    for _ in range(rng.randint(1, 5)):
        k = rng.randint(0, n)
        faces.append(rng.sample(labels, k))
    return from_facets(labels, faces)


def _random_uniform_clutter(rng: random.Random, labels: list[str], d: int, nonempty: bool = True) -> Clutter:
    every = list(combinations(labels, d))
    chosen = [e for e in every if rng.random() < 0.5]
    if nonempty and not chosen and every:
        chosen = [rng.choice(every)]
    return Clutter(frozenset(labels), frozenset(frozenset(e) for e in chosen))


def _random_clutter(rng: random.Random, labels: list[str], min_size: int, max_size: int,
                    covering: bool, most: int = 4) -> Clutter:
    """Random antichain of at most ``most`` sets with sizes in ``[min_size, max_size]``."""
    max_size = min(max_size, len(labels))
    for _ in range(200):
        sets = set()
        for _ in range(rng.randint(1, most)):
            k = rng.randint(min_size, max_size)
            sets.add(frozenset(rng.sample(labels, k)))
        kept = [s for s in sets if not any(t < s for t in sets)]
        if covering and frozenset().union(*kept) != frozenset(labels):
            continue
        return Clutter(frozenset(labels), frozenset(kept))
    return Clutter(frozenset(labels), frozenset([frozenset(labels)]))


def _gen_hybrid(spec: InstanceSpec, rng: random.Random) -> dict:
    for _ in range(200):
        k = rng.randint(1, 5)
        us = _labels("u", k)
        edges = [p for p in combinations(us, 2) if rng.random() < 0.45]
        if k >= 3 and rng.random() < 0.3:
            edges.append(tuple(rng.sample(us, 3)))
        central = hypergraph(us, edges)
        order = us[:]
        rng.shuffle(order)
        m = rng.randint(1, k)
        cuts = sorted(rng.sample(range(1, k), m - 1))
        blocks = [order[a:b] for a, b in zip([0] + cuts, cuts + [k])]
        rest = _labels("v", rng.choice([0, 0, 2, 3, 4]))
        if rest:
            # no edges between the blocks and the rest
            rest_edges = [p for p in combinations(rest, 2) if rng.random() < 0.5]
            central = hypergraph(us + rest, list(central.edges) + rest_edges)
        triples = []
        total = k + len(rest)
        for i, block in enumerate(blocks, 1):
            a = alpha(induced(central, block))
            d = a + rng.randint(1, 2)
            size = d + rng.randint(0, 2)
            labels = _labels(f"c{i}.", size)
            comp = _random_uniform_clutter(rng, labels, d)
            small = [frozenset(x) for j in range(1, d - a) for x in combinations(labels, j)]
            exclude = [x for x in small if rng.random() < 0.3]
            triples.append(GluingTriple.of(block, [d], pip_padding(comp, d, exclude, alpha=a)))
            total += size
        if total <= spec.max_vertices:
            return {"central": central, "triples": triples, "rest": rest}
    raise DomainError(f"no hybrid instance fits within {spec.max_vertices} vertices")


def _gen_glue(spec: InstanceSpec, rng: random.Random, star: bool) -> dict:
    for _ in range(200):
        n = rng.randint(3, min(6, spec.max_vertices))
        xs = _labels("x", n)
        central = _random_clutter(rng, xs, 2, 2 if rng.random() < 0.6 else 3, covering=False, most=n + 2)
        u_count = rng.randint(0, min(3, n - 3))
        us = sort_labels(rng.sample(xs, u_count))
        vs = [x for x in xs if x not in us]
        if len(vs) >= 4 and rng.random() < 0.35:
            # plant a 4-cycle on the rest so its complex is two disjoint edges
            a, b, c, d = rng.sample(vs, 4)
            cycle = {frozenset(p) for p in ((a, b), (b, c), (c, d), (d, a))}
            quad = frozenset((a, b, c, d))
            sets = {e for e in central.edges if not e <= quad} | cycle
            central = Clutter(central.ground, frozenset(e for e in sets if not any(f < e for f in sets)))
        attach = {}
        total = n
        for u in us:
            size = rng.randint(2 if star else 1, 3)
            labels = [f"{u}.{j}" for j in range(1, size + 1)]
            attach[u] = _random_clutter(rng, labels, 2 if star else 1, size, covering=True)
            total += size
        if total <= spec.max_vertices:
            return {"central": central, "attach": attach}
    raise DomainError(f"no glue instance fits within {spec.max_vertices} vertices")


def _random_pip_hypergraph(rng: random.Random, labels: list[str], a: int, d: int) -> Optional[Hypergraph]:
    """A random hypergraph with edge sizes up to ``d`` passing PIP at ``a``, if one turns up."""
    pool = [frozenset(x) for k in range(1, d + 1) for x in combinations(labels, k)]
    for _ in range(30):
        h = Hypergraph(frozenset(labels), frozenset(e for e in pool if rng.random() < 0.4))
        if h.edges and pip_check(a, [d], h).holds:
            return h
    return None


def _gen_ds(spec: InstanceSpec, rng: random.Random) -> dict:
    for _ in range(200):
        k = rng.randint(2, 5)
        us = _labels("u", k)
        edges = [p for p in combinations(us, 2) if rng.random() < 0.4]
        if k >= 3 and rng.random() < 0.5:
            edges.append(tuple(rng.sample(us, 3)))
        u = hypergraph(us, edges)
        mis = maximal_independent_sets(u)
        w1 = mis[0]
        w2 = mis[rng.randrange(len(mis))]
        a = alpha(u)
        d = a + rng.randint(1, 2)
        size = d + rng.randint(0, 2)
        if size > spec.max_vertices:
            continue
        labels = _labels("h", size)
        h = _random_pip_hypergraph(rng, labels, a, d) if rng.random() < 0.5 else None
        if h is None:
            h = pip_padding(_random_uniform_clutter(rng, labels, d), d)
        return {"U": u, "W1": sort_labels(w1), "W2": sort_labels(w2), "D": [d], "H": h}
    raise DomainError("no deletion-separation instance fits the bounds")


def gen_instance(spec: InstanceSpec) -> Any:
    """Deterministic instance of the requested kind for ``(seed, index)``."""
    rng = spec.rng()
    cap = spec.max_vertices
    if cap < 1:
        raise DomainError("max_vertices must be positive")
    if spec.kind == "graph":
        return random_graph(rng, _labels("", spec.n or rng.randint(1, cap)))
    if spec.kind == "corona":
        n = spec.n or rng.randint(1, min(6, cap // 2 or 1))
        if 2 * n > cap:
            raise DomainError(f"a corona on {n} vertices needs {2 * n} vertices")
        g = random_graph(rng, _labels("", n))
        return {"graph": g, "corona": corona(g)}
    if spec.kind == "chordal":
        return random_chordal(rng, spec.n or rng.randint(1, min(8, cap)))
    if spec.kind == "complex":
        return random_complex(rng, spec.n or rng.randint(0, min(8, cap)))
    if spec.kind == "hybrid":
        return _gen_hybrid(spec, rng)
    if spec.kind in ("glue", "glue_star"):
        return _gen_glue(spec, rng, spec.kind == "glue_star")
    if spec.kind == "ds":
        return _gen_ds(spec, rng)
    raise DomainError(f"unknown instance kind {spec.kind!r}")


def instance_json(inst: Any) -> Any:
    if hasattr(inst, "to_json"):
        return inst.to_json()
    if isinstance(inst, GluingTriple):
        return {"U": sort_labels(inst.attach_to), "D": sorted(inst.sizes), "component": inst.component.to_json()}
    if isinstance(inst, dict):
        return {str(k): instance_json(v) for k, v in inst.items()}
    if isinstance(inst, (list, tuple)):
        return [instance_json(v) for v in inst]
    if isinstance(inst, (set, frozenset)):
        return sort_labels(inst)
    return inst


# ---------------------------------------------------------------- hybrid gluing


def _dim(cx: SimplicialComplex) -> Optional[int]:
    return cx.dim


def _w_choices(h: Hypergraph) -> list[frozenset]:
    mis = maximal_independent_sets(h)
    return mis[:2]


def verify_hybrid(central: Hypergraph, triples: list[GluingTriple], props: Iterable[str] = ("vd",),
                  rest: Optional[Iterable] = None, shell_budget: Optional[int] = None,
                  evaluator: Optional[Evaluator] = None) -> list[VerdictRecord]:
    """Dimension, purity and property transfer for a hybrid gluing."""
    props = list(props)
    ev = evaluator or Evaluator(shell_budget)
    dg = digest_of({"central": central.to_json(), "triples": instance_json(triples)})
    blocks = [t.attach_to for t in triples]
    rest_set = central.ground.difference(*blocks) if blocks else central.ground
    alphas = [alpha(induced(central, b)) for b in blocks]
    for i, (a, t) in enumerate(zip(alphas, triples), 1):
        if a >= 1:
            rep = pip_check(a, t.sizes, t.component)
            if not rep.holds:
                why = f"block {i} fails PIP at level {rep.level} side {rep.side}"
                return [_skip(c, dg, why) for c in ("hybrid:dim", "hybrid:pure")] + \
                       [_skip("hybrid:property", dg, why, p) for p in props]
    glued = hybrid(central, triples, rest)
    whole = independence_complex(glued)
    base = independence_complex(induced(central, rest_set))
    out = []

    top = [independence_complex(size_restrict(t.component, t.sizes)) for t in triples]
    formula = sum(_dim(c) for c in top) + _dim(base) + len(triples)
    out.append(_record("hybrid:dim", dg, _dim(whole), formula))

    predicted = is_pure(base)
    for a, t in zip(alphas, triples):
        levels = [level_complex(t.component, t.sizes, s) for s in range(a + 1)]
        if not all(is_pure(c) for c in levels):
            predicted = False
        for s in range(a + 1):
            for u in range(s, a + 1):
                if _dim(levels[s]) - _dim(levels[u]) != u - s:
                    predicted = False
    out.append(_record("hybrid:pure", dg, is_pure(whole), predicted))

    choices = [_w_choices(induced(central, b)) for b in blocks]
    variants = max((len(c) for c in choices), default=1)
    for variant in range(variants):
        pieces = [base]
        profiles = []
        for b, t, ch in zip(blocks, triples, choices):
            w = ch[min(variant, len(ch) - 1)] if ch else frozenset()
            prof = sorted(ds_alpha_profile(induced(central, b), w))
            profiles.append({"W": sort_labels(w), "profile": prof})
            pieces.extend(level_complex(t.component, t.sizes, x) for x in prof)
        for p in props:
            out.append(_record("hybrid:property", dg, ev(p, whole), ev.all_of(p, pieces), p,
                               {"choice": variant, "profiles": profiles}))
    return out


# ---------------------------------------------------------------- clutter gluing


def verify_glue(central: Clutter, attach: dict, props: Iterable[str] = ("vd",),
                fields: Iterable[Field] = (RATIONALS,), shell_budget: Optional[int] = None,
                evaluator: Optional[Evaluator] = None) -> list[VerdictRecord]:
    """Dimension, purity, property transfer and CM criterion for pendant-style gluing."""
    props = list(props)
    ev = evaluator or Evaluator(shell_budget)
    dg = digest_of({"family": "glue", "central": central.to_json(), "attach": instance_json(attach)})
    glued = glue(central, attach)
    whole = independence_complex(glued)
    rest = central.ground - set(attach)
    base = independence_complex(induced(central, rest))
    parts = [independence_complex(c) for _, c in sorted(attach.items())]
    out = [_record("glue:dim", dg, _dim(whole), sum(len(c.ground) for c in attach.values()) + _dim(base))]
    predicted = (all(len(c.edges) == 1 for c in attach.values()) and is_pure(base)
                 and is_independently_embedded(central, attach.keys()))
    out.append(_record("glue:pure", dg, is_pure(whole), predicted))
    for p in props:
        out.append(_record("glue:property", dg, ev(p, whole), ev.all_of(p, [base] + parts), p))
    for k in fields:
        out.append(_record("glue:cm", dg, is_cohen_macaulay(whole, k),
                           is_pure(whole) and is_cohen_macaulay(base, k), f"cm:{k}"))
    return out


def verify_glue_star(central: Clutter, attach: dict, props: Iterable[str] = ("vd",),
                     shell_budget: Optional[int] = None,
                     evaluator: Optional[Evaluator] = None) -> list[VerdictRecord]:
    """Dimension, purity and property transfer for the reduced-star gluing.

    The reduced clutter of each component lives on that component's ground.
    """
    props = list(props)
    ev = evaluator or Evaluator(shell_budget)
    dg = digest_of({"family": "glue-star", "central": central.to_json(), "attach": instance_json(attach)})
    glued = glue_star(central, attach)
    whole = independence_complex(glued)
    rest = central.ground - set(attach)
    base = independence_complex(induced(central, rest))
    comps = [attach[u] for u in sort_labels(attach)]
    full = [independence_complex(c) for c in comps]
    reduced = [independence_complex(star_reduction(c)) for c in comps]
    out = [_record("glue-star:dim", dg, _dim(whole),
                   len(comps) + sum(_dim(c) for c in full) + _dim(base))]
    predicted = is_pure(base) and is_independently_embedded(central, attach.keys())
    for f, r in zip(full, reduced):
        if not (is_pure(f) and is_pure(r) and _dim(r) == _dim(f) - 1):
            predicted = False
    out.append(_record("glue-star:pure", dg, is_pure(whole), predicted))
    shared = sum(len(f.facets & r.facets) for f, r in zip(full, reduced))
    out.append(_record("glue-star:disjoint-facets", dg, shared, 0))
    for p in props:
        out.append(_record("glue-star:property", dg, ev(p, whole), ev.all_of(p, [base] + full + reduced), p))
    return out


# ---------------------------------------------------------------- profiles and chain


def verify_proposition_ds(u: Hypergraph, w1: Iterable, w2: Iterable, sizes: Iterable[int], h: Hypergraph,
                          props: Iterable[str] = ("vd",), shell_budget: Optional[int] = None,
                          evaluator: Optional[Evaluator] = None) -> list[VerdictRecord]:
    """Property of all levels over one profile versus over the other."""
    props = list(props)
    sizes = sorted(sizes)
    ev = evaluator or Evaluator(shell_budget)
    dg = digest_of({"U": u.to_json(), "W1": sort_labels(w1), "W2": sort_labels(w2), "D": sizes, "H": h.to_json()})
    a = alpha(u)
    reason = None
    if a < 1:
        reason = "independence number of U is zero"
    elif not pip_check(a, sizes, h).holds:
        reason = "H fails PIP at the independence number of U"
    else:
        for w in (w1, w2):
            if not (u.is_independent(w) and is_strong_dominating(u, w)):
                reason = f"{sort_labels(w)} is not a strong dominating independent set"
    if reason:
        return [_skip("ds-profile:equivalence", dg, reason, p) for p in props]
    x1 = sorted(ds_alpha_profile(u, w1))
    x2 = sorted(ds_alpha_profile(u, w2))
    out = []
    for p in props:
        lhs = ev.all_of(p, [level_complex(h, sizes, x) for x in x1])
        rhs = ev.all_of(p, [level_complex(h, sizes, x) for x in x2])
        out.append(_record("ds-profile:equivalence", dg, lhs, rhs, p, {"profile1": x1, "profile2": x2}))
    return out


def verify_implication_chain(cx: SimplicialComplex, fields: Iterable[Field] = (RATIONALS,),
                             shell_budget: Optional[int] = None) -> list[VerdictRecord]:
    """Decomposable implies shellable implies sequentially CM."""
    dg = digest_of(cx.to_json())
    vd = is_vertex_decomposable(cx)[0]
    verdict = is_shellable(cx, shell_budget)[0]
    shell = None if verdict == "unknown" else verdict == "yes"
    out = []
    if vd and shell is None:
        out.append(_skip("chain:vd-shell", dg, "shellability undecided within budget"))
    else:
        ok = not vd or bool(shell)
        out.append(VerdictRecord("chain:vd-shell", dg, vd, shell, "agree" if ok else "disagree",
                                 witness={"strict": bool(shell and not vd)}))
    for k in fields:
        scm = is_sequentially_cm(cx, k)
        if shell is None:
            out.append(_skip("chain:shell-scm", dg, "shellability undecided within budget", f"scm:{k}"))
            continue
        ok = not shell or scm
        out.append(VerdictRecord("chain:shell-scm", dg, shell, scm, "agree" if ok else "disagree", f"scm:{k}",
                                 witness={"strict": bool(scm and not shell)}))
    return out


# ---------------------------------------------------------------- runner


def all_complexes(n: int) -> list[SimplicialComplex]:
    """Every nonvoid complex on the labelled ground ``1..n`` (all facet antichains)."""
    labels = _labels("", n)
    subsets = list(range(1 << n))
    out = []

    def rec(i: int, chosen: list[int]) -> None:
        if i == len(subsets):
            if chosen:
                facets = [frozenset(labels[j] for j in range(n) if m >> j & 1) for m in chosen]
                out.append(SimplicialComplex(frozenset(labels), frozenset(facets)))
            return
        s = subsets[i]
        if all(s & c != s and s & c != c for c in chosen):
            rec(i + 1, chosen + [s])
        rec(i + 1, chosen)

    rec(0, [])
    return out


def _run_one(args: tuple) -> list[dict]:
    family, seed, index, max_vertices, props, fields, shell_budget = args
    fields = [Field.parse(f) for f in fields]
    repro = {"family": family, "seed": seed, "index": index, "max_vertices": max_vertices}
    if family == "hybrid":
        inst = gen_instance(InstanceSpec("hybrid", seed, index, max_vertices))
        recs = verify_hybrid(inst["central"], inst["triples"], props, inst["rest"], shell_budget)
    elif family in ("glue", "glue-star"):
        kind = "glue" if family == "glue" else "glue_star"
        inst = gen_instance(InstanceSpec(kind, seed, index, max_vertices))
        if family == "glue":
            recs = verify_glue(inst["central"], inst["attach"], props, fields, shell_budget)
        else:
            recs = verify_glue_star(inst["central"], inst["attach"], props, shell_budget)
    elif family == "ds-profile":
        inst = gen_instance(InstanceSpec("ds", seed, index, max_vertices))
        recs = verify_proposition_ds(inst["U"], inst["W1"], inst["W2"], inst["D"], inst["H"], props, shell_budget)
    elif family == "chain":
        inst = gen_instance(InstanceSpec("complex", seed, index, max_vertices))
        if inst.is_void:
            return []
        recs = verify_implication_chain(inst, fields, shell_budget)
    else:
        raise DomainError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    out = []
    for r in recs:
        r.repro = dict(repro)
        if r.status == "disagree":
            r.repro["instance"] = instance_json(inst)
        out.append(r.to_json())
    return out


def run_family(family: str, count: int, seed: int, max_vertices: int = 12,
               fields: Iterable[Field] = (RATIONALS, GF2), props: Optional[list[str]] = None,
               shell_budget: Optional[int] = None, jobs: int = 1) -> list[dict]:
    """Verify ``count`` seeded instances; records come back sorted by digest."""
    if family not in FAMILIES:
        raise DomainError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if count < 0:
        raise DomainError("count must be non-negative")
    fields = list(fields)
    props = props if props is not None else default_properties(fields)
    tasks = [(family, seed, i, max_vertices, props, [str(k) for k in fields], shell_budget) for i in range(count)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            batches = list(pool.map(_run_one, tasks))
    else:
        batches = [_run_one(t) for t in tasks]
    records = [r for batch in batches for r in batch]
    records.sort(key=lambda r: (r["digest"], r["check"], r.get("property") or "",
                                json.dumps(r.get("witness"), sort_keys=True)))
    return records
