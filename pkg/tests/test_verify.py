import json

import networkx as nx
import pytest

from glueyard import DomainError, complex_of, pip_check, simplex
from glueyard.glue import pip_padding
from glueyard.hypergraph import alpha, clutter, hypergraph, induced
from glueyard.jsonio import (
    InputError,
    complex_from_json,
    hybrid_spec_from_json,
    hypergraph_from_json,
    parse_json_text,
)
from glueyard.verify import (
    FAMILIES,
    InstanceSpec,
    all_complexes,
    gen_instance,
    instance_json,
    run_family,
    verify_implication_chain,
    verify_proposition_ds,
)


def test_generators_are_deterministic():
    for kind in ("graph", "corona", "chordal", "complex", "hybrid", "glue", "glue_star", "ds"):
        a = instance_json(gen_instance(InstanceSpec(kind, 5, 2)))
        b = instance_json(gen_instance(InstanceSpec(kind, 5, 2)))
        assert a == b


def test_chordal_generator_replays_a_perfect_elimination():
    g = gen_instance(InstanceSpec("chordal", 7, n=6))
    assert len(g.ground) == 6
    nxg = nx.Graph()
    nxg.add_nodes_from(g.ground)
    nxg.add_edges_from(tuple(e) for e in g.edges)
    assert nx.is_chordal(nxg)


def test_infeasible_bounds_raise():
    with pytest.raises(DomainError):
        gen_instance(InstanceSpec("corona", 1, n=4, max_vertices=6))
    with pytest.raises(DomainError):
        gen_instance(InstanceSpec("bogus", 1))


def test_complex_generator_respects_size():
    cx = gen_instance(InstanceSpec("complex", 3, max_vertices=4))
    assert len(cx.ground) <= 4


def test_hybrid_generator_satisfies_pip():
    for i in range(20):
        inst = gen_instance(InstanceSpec("hybrid", 0, i))
        assert len(instance_json(inst)["central"]["ground"]) <= 12
        for t in inst["triples"]:
            a = alpha(induced(inst["central"], t.attach_to))
            assert pip_check(a, t.sizes, t.component).holds


def test_all_complexes_counts():
    # nonvoid antichains on n labelled points, Dedekind numbers minus one
    assert [len(all_complexes(n)) for n in range(4)] == [1, 2, 5, 19]


def test_chain_examples():
    for cx in (complex_of("12", "23"), simplex("123")):
        recs = verify_implication_chain(cx)
        assert all(r.lhs is True and r.rhs is True for r in recs)
    recs = verify_implication_chain(complex_of("12", "34"))
    assert all(r.lhs is False and r.status == "agree" for r in recs)


def test_ds_with_equal_sets_agrees():
    u = hypergraph([1, 2, 3, 4], ["123", "14"])
    h = pip_padding(clutter("abcde", ["abcd", "bcde"]), 4)
    recs = verify_proposition_ds(u, "12", "12", [4], h, ["vd", "scm:q"])
    assert all(r.status == "agree" for r in recs)


@pytest.mark.parametrize("family", FAMILIES)
def test_run_family_is_reproducible(family):
    a = run_family(family, 4, 11, max_vertices=9)
    b = run_family(family, 4, 11, max_vertices=9)
    assert json.dumps(a) == json.dumps(b)
    assert all(r["status"] != "disagree" for r in a)


def test_parallel_run_matches_serial():
    assert run_family("glue-star", 6, 2, jobs=2) == run_family("glue-star", 6, 2)


def test_json_readers():
    cx = complex_from_json({"facets": [[1, 2], [2, 3]]})
    assert cx.sorted_facets() == [["1", "2"], ["2", "3"]]
    h = hypergraph_from_json({"ground": [1, 2, 3], "edges": [[1, 2]]})
    assert h.vertices() == ["1", "2", "3"]
    with pytest.raises(DomainError):
        hypergraph_from_json({"kind": "clutter", "edges": [[1], [1, 2]]})
    with pytest.raises(InputError):
        complex_from_json({"facets": [[True]]})
    with pytest.raises(InputError) as exc:
        parse_json_text('{"facets": [1,\n ]}')
    assert "line 2" in str(exc.value)


def test_covering_mode_requires_covered_vertices():
    obj = {"kind": "clutter", "ground": [1, 2, 3], "edges": [[1, 2]]}
    hypergraph_from_json(obj)
    with pytest.raises(DomainError):
        hypergraph_from_json(obj, covering=True)


def test_hybrid_spec_reader():
    spec = {"central": {"edges": [["u", "v"]]},
            "partition": {"U": [["u"]], "V": ["v"]},
            "triples": [{"D": [2], "component": {"edges": [["w"]]}}]}
    central, triples, rest = hybrid_spec_from_json(spec)
    assert rest == ["v"] and len(triples) == 1
    spec["triples"] = []
    with pytest.raises(InputError):
        hybrid_spec_from_json(spec)
