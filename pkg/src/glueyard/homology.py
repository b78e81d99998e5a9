"""Reduced simplicial homology over exact fields and the Cohen-Macaulay tests.

Ranks are computed exactly: bit-row elimination over GF(2), sparse
modular elimination over GF(p), and fraction-free integer elimination
over the rationals.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Optional

from ._bits import all_faces, bits, compress
from .complex import SimplicialComplex, pure_skeleton, sort_labels
from .errors import DomainError

# Mersenne prime used to certify vanishing rational homology cheaply:
# rank mod p <= rank over Q, so a zero Betti number mod p is zero over Q.
_CERT_PRIME = 2**31 - 1


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    i = 2
    while i * i <= p:
        if p % i == 0:
            return False
        i += 1
    return True


@dataclass(frozen=True)
class Field:
    """Coefficient field: ``p == 0`` means the rationals."""

    p: int = 0

    def __post_init__(self):
        if self.p and not _is_prime(self.p):
            raise DomainError(f"gf:{self.p} is not a prime field")

    @classmethod
    def parse(cls, text: str) -> "Field":
        t = text.strip().lower()
        if t in ("q", "qq", "rationals"):
            return cls(0)
        if t.startswith("gf:"):
            try:
                return cls(int(t[3:]))
            except ValueError:
                pass
        raise DomainError(f"unknown field {text!r}; use q or gf:p")

    def __str__(self) -> str:
        return "q" if self.p == 0 else f"gf:{self.p}"


RATIONALS = Field(0)
GF2 = Field(2)


@dataclass(frozen=True)
class BettiVector:
    """Reduced Betti numbers; ``ranks[i]`` is degree ``i`` for 0 <= i <= dim."""

    ranks: tuple
    degree_minus_one: int = 0

    def rank(self, i: int) -> int:
        if i == -1:
            return self.degree_minus_one
        if 0 <= i < len(self.ranks):
            return self.ranks[i]
        return 0

    def to_json(self) -> dict:
        return {"ranks": list(self.ranks), "degree_minus_one": self.degree_minus_one}


# ---------------------------------------------------------------- rank kernels


def _rank_gf2(rows: list[int]) -> int:
    pivots: dict[int, int] = {}
    for row in rows:
        while row:
            lead = row.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = row
                break
            row ^= piv
    return len(pivots)


def _rank_mod_p(rows: list[dict], p: int) -> int:
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: v % p for c, v in raw.items() if v % p}
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                inv = pow(row[lead], -1, p)
                pivots[lead] = {c: v * inv % p for c, v in row.items()}
                break
            f = row[lead]
            for c, v in piv.items():
                nv = (row.get(c, 0) - f * v) % p
                if nv:
                    row[c] = nv
                else:
                    row.pop(c, None)
    return len(pivots)


def _rank_rational(rows: list[dict]) -> int:
    pivots: dict[int, dict] = {}
    for raw in rows:
        row = {c: v for c, v in raw.items() if v}
        while row:
            lead = max(row)
            piv = pivots.get(lead)
            if piv is None:
                g = 0
                for v in row.values():
                    g = gcd(g, v)
                if row[lead] < 0:
                    g = -g
                pivots[lead] = {c: v // g for c, v in row.items()}
                break
            a, b = row[lead], piv[lead]
            new = {c: v * b for c, v in row.items()}
            for c, v in piv.items():
                nv = new.get(c, 0) - v * a
                if nv:
                    new[c] = nv
                else:
                    new.pop(c, None)
            g = 0
            for v in new.values():
                g = gcd(g, v)
            row = {c: v // g for c, v in new.items()} if g > 1 else new
    return len(pivots)


def _boundary_ranks(faces_by_size: list[list[int]], p: int) -> list[int]:
    """``ranks[k]`` = rank of the boundary map from size-k faces to size-(k-1) faces."""
    top = len(faces_by_size) - 1
    ranks = [0] * (top + 2)
    index_prev = {faces_by_size[0][0]: 0} if faces_by_size[0] else {}
    for k in range(1, top + 1):
        faces = faces_by_size[k]
        if not faces or not index_prev:
            ranks[k] = 0
        elif p == 2:
            rows = []
            for f in faces:
                r = 0
                for v in bits(f):
                    r |= 1 << index_prev[f & ~(1 << v)]
                rows.append(r)
            ranks[k] = _rank_gf2(rows)
        else:
            rows = []
            for f in faces:
                r = {}
                for pos, v in enumerate(bits(f)):
                    r[index_prev[f & ~(1 << v)]] = -1 if pos & 1 else 1
                rows.append(r)
            ranks[k] = _rank_mod_p(rows, p) if p else _rank_rational(rows)
        index_prev = {f: i for i, f in enumerate(faces)}
    return ranks


def _faces_by_size(facets: list[int]) -> list[list[int]]:
    faces = all_faces(facets)
    top = max((f.bit_count() for f in facets), default=-1)
    out: list[list[int]] = [[] for _ in range(top + 1)]
    for f in faces:
        out[f.bit_count()].append(f)
    for lst in out:
        lst.sort()
    return out


def _betti_masks(facets: list[int], p: int) -> list[int]:
    """Reduced Betti numbers indexed by size (degree + 1) for a nonvoid complex."""
    by_size = _faces_by_size(facets)
    ranks = _boundary_ranks(by_size, p)
    return [len(by_size[k]) - ranks[k] - ranks[k + 1] for k in range(len(by_size))]


def betti_reduced(cx: SimplicialComplex, k: Field = RATIONALS) -> BettiVector:
    if cx.is_void:
        raise DomainError("reduced homology of the void complex is undefined")
    _, masks = cx.to_masks()
    b = _betti_masks(masks, k.p)
    return BettiVector(tuple(b[1:]), b[0])


# ---------------------------------------------------------------- Reisner


class _LinkHomology:
    """Memoized test "reduced homology vanishes below the top dimension"."""

    def __init__(self, p: int):
        self.p = p
        self.memo: dict[tuple, Optional[int]] = {}

    def first_nonvanishing(self, facets: list[int]) -> Optional[int]:
        """Smallest degree below dim with nonzero reduced homology, else None."""
        if len(facets) == 1:
            return None
        common = facets[0]
        for f in facets[1:]:
            common &= f
        if common:
            return None  # a cone is acyclic
        key = compress(facets)
        if key in self.memo:
            return self.memo[key]
        top = max(f.bit_count() for f in facets)
        result = None
        if self.p == 0:
            cert = _betti_masks(facets, _CERT_PRIME)
            if any(cert[s] for s in range(top)):
                b = _betti_masks(facets, 0)
                result = next((s - 1 for s in range(top) if b[s]), None)
        else:
            b = _betti_masks(facets, self.p)
            result = next((s - 1 for s in range(top) if b[s]), None)
        self.memo[key] = result
        return result


def _cm_witness_masks(facets: list[int], hom: _LinkHomology) -> Optional[tuple[int, int]]:
    faces = sorted(all_faces(facets), key=lambda f: (f.bit_count(), f))
    for f in faces:
        lk = [g & ~f for g in facets if g & f == f]
        deg = hom.first_nonvanishing(lk)
        if deg is not None:
            return f, deg
    return None


def cohen_macaulay_witness(cx: SimplicialComplex, k: Field = RATIONALS) -> Optional[tuple[list[str], int]]:
    """First ``(face, degree)`` violating Reisner's criterion, or ``None`` if CM.

    Faces are visited by increasing dimension; the degree is the lowest one
    below the link's dimension carrying nonzero reduced homology.
    """
    if cx.is_void:
        raise DomainError("Cohen-Macaulayness of the void complex is undefined")
    labels, masks = cx.to_masks()
    w = _cm_witness_masks(masks, _LinkHomology(k.p))
    if w is None:
        return None
    return sort_labels(labels[i] for i in bits(w[0])), w[1]


def is_cohen_macaulay(cx: SimplicialComplex, k: Field = RATIONALS) -> bool:
    return cohen_macaulay_witness(cx, k) is None


def sequential_cm_witness(cx: SimplicialComplex, k: Field = RATIONALS) -> Optional[dict]:
    """First pure skeleton failing Reisner's criterion, with its witness."""
    if cx.is_void:
        raise DomainError("sequential Cohen-Macaulayness of the void complex is undefined")
    hom = _LinkHomology(k.p)
    for i in range(0, cx.dim + 1):
        skel = pure_skeleton(cx, i)
        labels, masks = skel.to_masks()
        w = _cm_witness_masks(masks, hom)
        if w is not None:
            return {"skeleton": i, "face": sort_labels(labels[j] for j in bits(w[0])), "degree": w[1]}
    return None


def is_sequentially_cm(cx: SimplicialComplex, k: Field = RATIONALS) -> bool:
    return sequential_cm_witness(cx, k) is None


def reduced_euler_characteristic(cx: SimplicialComplex) -> int:
    """``sum (-1)^i f_i`` over i >= -1."""
    _, masks = cx.to_masks()
    return sum(-1 if f.bit_count() % 2 == 0 else 1 for f in all_faces(masks))
