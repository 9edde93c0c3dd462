"""Star-graph fault tolerance at exact order.

Construct vertex-stable supergraphs by the Bruck-Cypher-Ho spare-vertex
method, decide stability exhaustively, evaluate the exact minimum size of a
stable graph on the smallest possible vertex count, generate the extremal
graphs, and certify minimality and extremal uniqueness by complete
isomorph-free enumeration at desk scale.
"""

from .canon import CanonicalCode, canonical_form, is_isomorphic, support
from .certify import (
    Certificate,
    certify,
    enumerate_graphs_by_edges,
    graphs_of_order_and_size,
    read_certificate,
    write_certificate,
)
from .construct import (
    Embedding,
    IsolatedPatternWarning,
    LabeledInstance,
    Labelling,
    bch_construct,
    recovery_embedding,
    star_stable,
)
from .errors import (
    CapacityExceededError,
    Graph6ParseError,
    InvalidParameterError,
    SchemaMismatchError,
    StarstabError,
)
from .graph import (
    Graph,
    VertexSet,
    complement,
    complete,
    conjunction,
    decode_graph6,
    empty,
    encode_graph6,
    export_dot,
    from_edges,
    induced_delete,
    near_complete_regular,
    pad,
    permute,
    star,
    with_edge,
)
from .stability import (
    StabilityVerdict,
    classify_low_degree,
    contains_subgraph,
    is_stable_general,
    is_star_stable,
)
from .theorem import (
    StabCase,
    StabResult,
    extremal_family,
    k0,
    k1,
    stab_case,
    stab_result,
    stab_value,
)

__all__ = [
    "CanonicalCode",
    "CapacityExceededError",
    "Certificate",
    "Embedding",
    "Graph",
    "Graph6ParseError",
    "InvalidParameterError",
    "IsolatedPatternWarning",
    "LabeledInstance",
    "Labelling",
    "SchemaMismatchError",
    "StabCase",
    "StabResult",
    "StabilityVerdict",
    "StarstabError",
    "VertexSet",
    "bch_construct",
    "canonical_form",
    "certify",
    "classify_low_degree",
    "complement",
    "complete",
    "conjunction",
    "contains_subgraph",
    "decode_graph6",
    "empty",
    "encode_graph6",
    "enumerate_graphs_by_edges",
    "export_dot",
    "extremal_family",
    "from_edges",
    "graphs_of_order_and_size",
    "induced_delete",
    "is_isomorphic",
    "is_stable_general",
    "is_star_stable",
    "k0",
    "k1",
    "near_complete_regular",
    "pad",
    "permute",
    "read_certificate",
    "recovery_embedding",
    "stab_case",
    "stab_result",
    "stab_value",
    "star",
    "star_stable",
    "support",
    "with_edge",
    "write_certificate",
]
