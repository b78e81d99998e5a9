"""Bitmask helpers shared by the search and homology code.

A face is an ``int`` whose set bits are vertex indices.
"""
from __future__ import annotations

from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def submasks(mask: int) -> Iterator[int]:
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def maximal(masks: Iterable[int]) -> list[int]:
    """Inclusion-maximal members, sorted by (size desc, value)."""
    ordered = sorted(set(masks), key=lambda m: (-m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return kept


def minimal(masks: Iterable[int]) -> list[int]:
    ordered = sorted(set(masks), key=lambda m: (m.bit_count(), m))
    kept: list[int] = []
    for m in ordered:
        if not any(k & ~m == 0 for k in kept):
            kept.append(m)
    return kept


def union(masks: Iterable[int]) -> int:
    out = 0
    for m in masks:
        out |= m
    return out


def compress(facets: Iterable[int]) -> tuple[int, ...]:
    """Relabel the support onto 0..k-1 preserving order; sorted tuple."""
    facets = list(facets)
    support = list(bits(union(facets)))
    if support and support[-1] == len(support) - 1:
        return tuple(sorted(facets))
    pos = {v: i for i, v in enumerate(support)}
    out = []
    for f in facets:
        m = 0
        for v in bits(f):
            m |= 1 << pos[v]
        out.append(m)
    return tuple(sorted(out))


def all_faces(facets: Iterable[int]) -> set[int]:
    faces: set[int] = set()
    for f in facets:
        if f in faces:
            continue
        faces.update(submasks(f))
    return faces
