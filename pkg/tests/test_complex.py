import pytest
from hypothesis import given

from glueyard import (
    DomainError,
    complex_of,
    delete_face,
    empty_face_complex,
    face,
    face_census,
    from_facets,
    is_pure,
    is_shedding_vertex,
    is_w_maximal,
    join,
    link,
    minimal_nonfaces,
    pure_skeleton,
    simplex,
    void_complex,
)
from glueyard.complex import relabel

from conftest import brute_faces, complexes, maximal_sets, subsets


def facets(cx):
    return {frozenset(f) for f in cx.sorted_facets()}


def F(*xs):
    return {face(x) for x in xs}


def test_dominated_faces_dropped():
    cx = from_facets([1, 2, 3], [[1, 2], [2], [2, 3]])
    assert facets(cx) == F("12", "23")


def test_void_and_empty_face_are_different():
    void = from_facets([1], [])
    empty = from_facets([1], [[]])
    assert void.is_void and void.dim is None
    assert not empty.is_void and empty.dim == -1
    assert void != empty
    assert void_complex([1]) == void and empty_face_complex([1]) == empty


def test_face_outside_ground_rejected():
    with pytest.raises(DomainError):
        from_facets([1, 2], [[1, 3]])


@pytest.mark.parametrize("cx, dim, fv", [
    (complex_of([1, 2], [2, 3]), 1, [3, 2]),
    (simplex([1, 2, 3]), 2, [3, 3, 1]),
    (void_complex([1]), None, []),
])
def test_face_census(cx, dim, fv):
    assert face_census(cx) == (dim, fv)


def test_purity():
    assert is_pure(complex_of([1, 2], [2, 3]))
    assert not is_pure(complex_of([1, 2], [3]))
    assert is_pure(complex_of([1, 3], [2, 4]))


def test_link_and_deletion():
    path = complex_of([1, 2], [2, 3])
    assert facets(link(path, [2])) == F("1", "3")
    assert facets(link(path, [1])) == F("2")
    assert link(simplex([1, 2, 3]), []) == simplex([1, 2, 3])
    assert facets(delete_face(path, [2])) == F("1", "3")
    assert facets(delete_face(path, [1])) == F("23")
    assert delete_face(simplex([1, 2, 3]), []) == simplex([1, 2, 3])
    with pytest.raises(DomainError):
        link(path, [1, 3])


def test_join():
    assert facets(join(complex_of([1]), complex_of([2], [3]))) == F("12", "13")
    assert facets(join(empty_face_complex(), complex_of([2, 3]))) == F("23")
    assert join(void_complex(), complex_of([2])).is_void
    with pytest.raises(DomainError):
        join(complex_of([1]), complex_of([1, 2]))


def test_pure_skeleton():
    cx = complex_of([1, 2, 3], [4, 5])
    assert facets(pure_skeleton(cx, 1)) == F("12", "13", "23", "45")
    assert facets(pure_skeleton(complex_of([1, 2]), 0)) == F("1", "2")
    assert pure_skeleton(complex_of([1, 2]), 1) == complex_of([1, 2])
    with pytest.raises(DomainError):
        pure_skeleton(cx, 3)


def test_shedding_vertex():
    path = complex_of([1, 2], [2, 3])
    assert is_shedding_vertex(path, 1)
    assert not is_shedding_vertex(path, 2)
    assert not is_shedding_vertex(simplex([1, 2, 3]), 1)
    with pytest.raises(DomainError):
        is_shedding_vertex(path, 9)


def test_minimal_nonfaces():
    assert minimal_nonfaces(from_facets([1, 2, 3], [[1, 2], [1, 3]])) == F("23")
    assert minimal_nonfaces(simplex([1, 2, 3])) == set()
    square = from_facets([1, 2, 3, 4], [[1, 3], [2, 4]])
    assert minimal_nonfaces(square) == F("12", "23", "34", "14")


def test_w_maximal():
    path = complex_of([1, 2], [2, 3])
    assert not is_w_maximal(path, [2], [1, 3])
    assert is_w_maximal(path, [1, 2], [3])
    for f in path.facets:
        assert is_w_maximal(path, f, path.ground)
    with pytest.raises(DomainError):
        is_w_maximal(path, [1, 3], [2])


@given(complexes())
def test_faces_match_brute_downward_closure(cx):
    assert cx.faces() == brute_faces(cx)


@given(complexes())
def test_minimal_nonfaces_round_trip(cx):
    # the faces are exactly the subsets of the ground that contain no minimal nonface
    non = minimal_nonfaces(cx)
    rebuilt = maximal_sets(s for s in subsets(cx.ground) if not any(n <= s for n in non))
    assert rebuilt == set(cx.facets)


@given(complexes(max_vertices=5))
def test_link_is_brute_link(cx):
    for f in brute_faces(cx):
        expect = maximal_sets(g - f for g in brute_faces(cx) if f <= g)
        assert set(link(cx, f).facets) == expect


@given(complexes(max_vertices=3), complexes(max_vertices=3))
def test_join_dimension_adds(a, b):
    b = relabel(b, {v: f"b{v}" for v in b.ground})
    j = join(a, b)
    assert j.dim == a.dim + b.dim + 1
    assert is_pure(j) == (is_pure(a) and is_pure(b))
