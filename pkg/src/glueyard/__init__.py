"""Gluing hypergraphs and deciding combinatorial properties of their independence complexes."""
from .complex import (
    SimplicialComplex,
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
from .decide import is_shellable, is_shelling_order, is_vertex_decomposable, replay_vd_certificate
from .errors import DomainError, ResourceLimitError
from .glue import GluingTriple, glue, glue_star, hybrid, pip_check, pip_padding
from .homology import (
    GF2,
    RATIONALS,
    BettiVector,
    Field,
    betti_reduced,
    cohen_macaulay_witness,
    is_cohen_macaulay,
    is_sequentially_cm,
    reduced_euler_characteristic,
    sequential_cm_witness,
)
from .hypergraph import (
    Clutter,
    Hypergraph,
    alpha,
    clutter,
    graph_of,
    hypergraph,
    independence_complex,
    induced,
    size_restrict,
)

__version__ = "0.1.0"
