"""Finite simplicial complexes stored by an explicit ground set and facets.

Vertices are strings. Faces are ``frozenset`` of vertices. A complex with
no facets is the *void* complex; the complex whose only facet is the empty
face is written ``{∅}`` below and has dimension -1.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from ._bits import all_faces, bits, maximal
from .errors import DomainError

Face = frozenset

DEFAULT_VERTEX_BUDGET = 64


def label_key(label: str):
    """Natural order: decimal labels numerically, then the rest lexicographically."""
    if label.isascii() and label.isdigit():
        return (0, int(label), label)
    return (1, 0, label)


def face(members: Iterable) -> frozenset:
    return frozenset(str(m) for m in members)


def sort_labels(labels: Iterable[str]) -> list[str]:
    return sorted(labels, key=label_key)


def face_key(f: Iterable[str]):
    return [label_key(v) for v in sort_labels(f)]


def sorted_faces(faces: Iterable[frozenset]) -> list[list[str]]:
    """Faces as sorted label lists, ordered by size then lexicographically."""
    out = [sort_labels(f) for f in faces]
    out.sort(key=lambda f: (len(f), [label_key(v) for v in f]))
    return out


@dataclass(frozen=True)
class SimplicialComplex:
    ground: frozenset
    facets: frozenset

    def __post_init__(self):
        for f in self.facets:
            if not f <= self.ground:
                raise DomainError(f"facet {sort_labels(f)} not contained in ground set")
        flist = list(self.facets)
        for a, b in combinations(flist, 2):
            if a <= b or b <= a:
                raise DomainError("facets must form an antichain")

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def dim(self) -> Optional[int]:
        """Dimension; ``None`` for the void complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1

    def vertices(self) -> list[str]:
        return sort_labels(self.ground)

    def used_vertices(self) -> frozenset:
        return frozenset().union(*self.facets) if self.facets else frozenset()

    def sorted_facets(self) -> list[list[str]]:
        return sorted_faces(self.facets)

    def contains(self, f: Iterable) -> bool:
        f = face(f)
        return any(f <= g for g in self.facets)

    def faces(self) -> set[frozenset]:
        labels, masks = self.to_masks()
        return {frozenset(labels[i] for i in bits(m)) for m in all_faces(masks)}

    def to_masks(self) -> tuple[list[str], list[int]]:
        labels = self.vertices()
        index = {v: i for i, v in enumerate(labels)}
        masks = []
        for f in self.facets:
            m = 0
            for v in f:
                m |= 1 << index[v]
            masks.append(m)
        masks.sort(key=lambda m: (-m.bit_count(), m))
        return labels, masks

    @classmethod
    def from_masks(cls, labels: list[str], masks: Iterable[int], ground=None) -> "SimplicialComplex":
        facets = frozenset(frozenset(labels[i] for i in bits(m)) for m in maximal(masks))
        return cls(frozenset(labels) if ground is None else frozenset(ground), facets)

    def to_json(self) -> dict:
        return {"ground": self.vertices(), "facets": self.sorted_facets()}

    def __repr__(self) -> str:
        if self.is_void:
            return "SimplicialComplex(void)"
        body = ",".join("{" + ",".join(f) + "}" for f in self.sorted_facets())
        return f"SimplicialComplex(<{body}> on {len(self.ground)} vertices)"


def from_facets(ground: Iterable, faces: Iterable[Iterable]) -> SimplicialComplex:
    """Complex generated by ``faces``; dominated faces are dropped."""
    ground = face(ground)
    fs = {face(f) for f in faces}
    for f in fs:
        if not f <= ground:
            extra = sort_labels(f - ground)
            raise DomainError(f"face uses vertices {extra} outside the ground set")
    kept = [f for f in fs if not any(f < g for g in fs)]
    return SimplicialComplex(ground, frozenset(kept))


def complex_of(*faces: Iterable, ground: Iterable | None = None) -> SimplicialComplex:
    """Shorthand ``complex_of("12", "23")``; ground defaults to the union."""
    fs = [face(f) for f in faces]
    if ground is None:
        ground = frozenset().union(*fs) if fs else frozenset()
    return from_facets(ground, fs)


def void_complex(ground: Iterable = ()) -> SimplicialComplex:
    return SimplicialComplex(face(ground), frozenset())


def empty_face_complex(ground: Iterable = ()) -> SimplicialComplex:
    return SimplicialComplex(face(ground), frozenset([frozenset()]))


def simplex(vertices: Iterable) -> SimplicialComplex:
    f = face(vertices)
    return SimplicialComplex(f, frozenset([f]))


def face_census(cx: SimplicialComplex) -> tuple[Optional[int], list[int]]:
    """Dimension (``None`` when void) and f-vector for dimensions 0..dim."""
    if cx.is_void:
        return None, []
    _, masks = cx.to_masks()
    dim = cx.dim
    counts = [0] * (dim + 1)
    for m in all_faces(masks):
        if m:
            counts[m.bit_count() - 1] += 1
    return dim, counts


def is_pure(cx: SimplicialComplex) -> bool:
    return len({len(f) for f in cx.facets}) <= 1


def _require_face(cx: SimplicialComplex, f: frozenset) -> None:
    if not cx.contains(f):
        raise DomainError(f"{sort_labels(f)} is not a face of the complex")


def link(cx: SimplicialComplex, f: Iterable) -> SimplicialComplex:
    f = face(f)
    _require_face(cx, f)
    return SimplicialComplex(cx.ground - f, frozenset(g - f for g in cx.facets if f <= g))


def delete_face(cx: SimplicialComplex, f: Iterable) -> SimplicialComplex:
    """Faces disjoint from ``f``."""
    f = face(f)
    reduced = {g - f for g in cx.facets}
    kept = [g for g in reduced if not any(g < h for h in reduced)]
    return SimplicialComplex(cx.ground - f, frozenset(kept))


def join(a: SimplicialComplex, b: SimplicialComplex) -> SimplicialComplex:
    if a.ground & b.ground:
        raise DomainError(f"join needs disjoint ground sets; shared {sort_labels(a.ground & b.ground)}")
    facets = frozenset(x | y for x in a.facets for y in b.facets)
    return SimplicialComplex(a.ground | b.ground, facets)


def pure_skeleton(cx: SimplicialComplex, i: int) -> SimplicialComplex:
    """The complex generated by all ``i``-dimensional faces."""
    if cx.is_void or not -1 <= i <= cx.dim:
        raise DomainError(f"skeleton index {i} outside [-1, dim]")
    size = i + 1
    facets = set()
    for g in cx.facets:
        if len(g) >= size:
            facets.update(frozenset(c) for c in combinations(sorted(g), size))
    return SimplicialComplex(cx.ground, frozenset(facets))


def is_shedding_vertex(cx: SimplicialComplex, v) -> bool:
    v = str(v)
    if v not in cx.ground:
        raise DomainError(f"vertex {v!r} not in ground set")
    return delete_face(cx, [v]).facets <= cx.facets


def minimal_nonfaces(cx: SimplicialComplex) -> set[frozenset]:
    """Inclusion-minimal subsets of the ground set that are not faces."""
    if cx.is_void:
        return {frozenset()}
    labels, masks = cx.to_masks()
    faces = all_faces(masks)
    n = len(labels)
    found: set[int] = set()
    for fm in faces:
        for v in range(n):
            bit = 1 << v
            if fm & bit:
                continue
            cand = fm | bit
            if cand in faces or cand in found:
                continue
            if all((cand & ~(1 << w)) in faces for w in bits(cand)):
                found.add(cand)
    return {frozenset(labels[i] for i in bits(m)) for m in found}


def is_w_maximal(cx: SimplicialComplex, f: Iterable, w: Iterable) -> bool:
    f = face(f)
    _require_face(cx, f)
    return not any(cx.contains(f | {x}) for x in face(w) - f)


def relabel(cx: SimplicialComplex, mapping: dict) -> SimplicialComplex:
    m = lambda x: str(mapping.get(x, x))
    return SimplicialComplex(
        frozenset(m(v) for v in cx.ground),
        frozenset(frozenset(m(v) for v in f) for f in cx.facets),
    )
