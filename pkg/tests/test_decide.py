import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from glueyard import (
    DomainError,
    ResourceLimitError,
    complex_of,
    independence_complex,
    is_sequentially_cm,
    is_shellable,
    is_shelling_order,
    is_vertex_decomposable,
    join,
    link,
    replay_vd_certificate,
    simplex,
    void_complex,
)
from glueyard.complex import relabel
from glueyard.glue import corona, cycle_with_ear
from glueyard.hypergraph import graph_of
from glueyard.verify import InstanceSpec, gen_instance

from conftest import brute_faces, brute_shellable, brute_vd, complexes

PATH_CORONA_FACETS = {frozenset(f) for f in (
    ("w1", "w2", "w3"), ("1", "w2", "w3"), ("3", "w1", "w2"), ("1", "3", "w2"), ("2", "w1", "w3"))}


def test_vd_examples():
    ok, cert = is_vertex_decomposable(simplex("123"))
    assert ok and cert == [{"branch": "", "simplex": ["1", "2", "3"]}]
    assert is_vertex_decomposable(complex_of("12", "34")) == (False, None)


def test_path_corona_is_vd_with_replayable_certificate():
    cx = independence_complex(corona(graph_of("12", "23")))
    assert set(cx.facets) == PATH_CORONA_FACETS
    ok, cert = is_vertex_decomposable(cx)
    assert ok and replay_vd_certificate(cx, cert)


def test_tampered_certificate_is_rejected():
    cx = independence_complex(corona(graph_of("12", "23")))
    _, cert = is_vertex_decomposable(cx)
    bad = [dict(r) for r in cert]
    first = next(r for r in bad if "vertex" in r)
    first["vertex"] = "2" if first["vertex"] != "2" else "1"
    assert not replay_vd_certificate(cx, bad)
    assert not replay_vd_certificate(cx, [])


def test_vertex_budget():
    with pytest.raises(ResourceLimitError):
        is_vertex_decomposable(simplex(range(10)), vertex_budget=5)
    with pytest.raises(DomainError):
        is_vertex_decomposable(void_complex())


def test_shellable_examples():
    verdict, order = is_shellable(complex_of("12", "23"))
    assert verdict == "yes" and order == [["1", "2"], ["2", "3"]]
    assert is_shellable(complex_of("12", "34")) == ("no", None)
    assert is_shellable(simplex("1234"))[0] == "yes"
    assert is_shellable(complex_of([]))[0] == "yes"


def test_shell_budget_gives_unknown(monkeypatch):
    cx = complex_of("12", "34", "56", "78")
    assert is_shellable(cx, budget=1)[0] == "unknown"
    monkeypatch.setenv("GLUEYARD_BUDGET", "1")
    assert is_shellable(cx)[0] == "unknown"
    monkeypatch.setenv("GLUEYARD_BUDGET", "lots")
    with pytest.raises(DomainError):
        is_shellable(cx)


def test_shelling_order_checker():
    cx = complex_of("12", "23", "34")
    assert is_shelling_order(cx, ["12", "23", "34"])
    assert not is_shelling_order(cx, ["12", "34", "23"])
    assert not is_shelling_order(cx, ["12", "23"])


@pytest.mark.parametrize("r", range(3, 9))
def test_cycle_with_ear_is_vd(r):
    ok, cert = is_vertex_decomposable(independence_complex(cycle_with_ear(r)))
    assert ok


@pytest.mark.parametrize("seed", range(10))
def test_chordal_graphs_are_vd(seed):
    g = gen_instance(InstanceSpec("chordal", seed, n=7))
    nxg = nx.Graph()
    nxg.add_nodes_from(g.ground)
    nxg.add_edges_from(tuple(e) for e in g.edges)
    assert nx.is_chordal(nxg)
    assert is_vertex_decomposable(independence_complex(g))[0]


@given(complexes(max_vertices=5))
def test_vd_matches_brute_recursion(cx):
    assert is_vertex_decomposable(cx)[0] == brute_vd(cx.facets)


@given(complexes(max_vertices=5, max_facets=5))
def test_shellable_matches_all_orders(cx):
    verdict, order = is_shellable(cx)
    assert verdict == ("yes" if brute_shellable(cx.facets) else "no")
    if order is not None:
        assert is_shelling_order(cx, order)


@given(complexes(max_vertices=6))
def test_vd_certificates_replay_and_are_deterministic(cx):
    ok, cert = is_vertex_decomposable(cx)
    assert (ok, cert) == is_vertex_decomposable(cx)
    if ok:
        assert replay_vd_certificate(cx, cert)


@given(complexes(max_vertices=6), st.data())
def test_links_inherit_decomposability_and_shellability(cx, data):
    f = data.draw(st.sampled_from(sorted(brute_faces(cx), key=sorted)))
    lk = link(cx, f)
    if is_vertex_decomposable(cx)[0]:
        assert is_vertex_decomposable(lk)[0]
    if is_shellable(cx)[0] == "yes":
        assert is_shellable(lk)[0] == "yes"


@given(complexes(max_vertices=3, max_facets=3), complexes(max_vertices=3, max_facets=3))
def test_join_is_decomposable_iff_both_factors_are(a, b):
    b = relabel(b, {v: f"b{v}" for v in b.ground})
    j = join(a, b)
    assert is_vertex_decomposable(j)[0] == (is_vertex_decomposable(a)[0] and is_vertex_decomposable(b)[0])
    assert (is_shellable(j)[0] == "yes") == (is_shellable(a)[0] == "yes" and is_shellable(b)[0] == "yes")


@given(complexes(max_vertices=6))
def test_vd_then_shellable_then_sequentially_cm(cx):
    shell = is_shellable(cx)[0]
    if is_vertex_decomposable(cx)[0]:
        assert shell == "yes"
    if shell == "yes":
        assert is_sequentially_cm(cx)
