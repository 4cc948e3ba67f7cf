"""Witness constructions and feasibility tables for induced-subgraph-free
graph families.

For a forbidden graph G outside the four trivially non-feasible shapes
(clique, clique minus an edge, and their complements), `witness` builds a
graph with any requested vertex and edge count containing no induced copy
of G. `feasible_pairs` checks such claims exhaustively at small orders.
"""

from .catalog import parse_edge_list, parse_graph
from .classifier import (
    ClassTag,
    Construction,
    ForbiddenClass,
    TnfKind,
    Verdict,
    WitnessCertificate,
    classify,
    feasibility_verdict,
    recognize_h,
    recognize_tnf,
    tnf_infeasible_region,
    turan_max_edges,
    witness,
)
from .constructions import (
    HParams,
    QParams,
    SplitParams,
    h_graph,
    k3k2_decompose,
    k3k2_witness,
    matching_witness,
    q_graph,
    s_graph,
    split_pack_witness,
    uep_witness,
)
from .enumeration import (
    ENUMERATION_CAP,
    FamilySpec,
    PairTable,
    enumerate_nonisomorphic,
    extremal_stats,
    feasible_pairs,
    interval_check_p3k1,
    table_to_csv,
    table_to_json,
)
from .errors import (
    CapacityError,
    DegenerateForbiddenError,
    IndfreeError,
    InfeasibleFamilyError,
    InternalInvariantError,
    ParameterError,
    ParseError,
    RangeError,
    ValidationError,
)
from .graph6 import (
    decode_graph6,
    decode_graph6_list,
    encode_graph6,
    encode_graph6_list,
)
from .graphs import (
    MAX_ORDER,
    Graph,
    complement,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    induced_subgraph,
    join,
    make_graph,
    matching_graph,
    path_graph,
    relabel,
    star_graph,
)
from .iso import Embedding, canonical_form, contains_induced, is_isomorphic, wl_colors

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "ClassTag",
    "Construction",
    "DegenerateForbiddenError",
    "ENUMERATION_CAP",
    "Embedding",
    "FamilySpec",
    "ForbiddenClass",
    "Graph",
    "HParams",
    "IndfreeError",
    "InfeasibleFamilyError",
    "InternalInvariantError",
    "MAX_ORDER",
    "PairTable",
    "ParameterError",
    "ParseError",
    "QParams",
    "RangeError",
    "SplitParams",
    "TnfKind",
    "ValidationError",
    "Verdict",
    "WitnessCertificate",
    "canonical_form",
    "classify",
    "complement",
    "complete_graph",
    "contains_induced",
    "cycle_graph",
    "decode_graph6",
    "decode_graph6_list",
    "disjoint_union",
    "empty_graph",
    "encode_graph6",
    "encode_graph6_list",
    "enumerate_nonisomorphic",
    "extremal_stats",
    "feasibility_verdict",
    "feasible_pairs",
    "h_graph",
    "induced_subgraph",
    "interval_check_p3k1",
    "is_isomorphic",
    "join",
    "k3k2_decompose",
    "k3k2_witness",
    "make_graph",
    "matching_graph",
    "matching_witness",
    "parse_edge_list",
    "parse_graph",
    "path_graph",
    "q_graph",
    "recognize_h",
    "recognize_tnf",
    "relabel",
    "s_graph",
    "split_pack_witness",
    "star_graph",
    "table_to_csv",
    "table_to_json",
    "tnf_infeasible_region",
    "turan_max_edges",
    "uep_witness",
    "witness",
    "wl_colors",
]
