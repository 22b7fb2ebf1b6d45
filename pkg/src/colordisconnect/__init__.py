"""Proper disconnection and rainbow vertex-disconnection of graphs:
exact solvers, two-color constructions for maximum degree three, and
hardness reductions cross-checked against brute-force SAT."""

from .constructive import (
    ConstructionTrace,
    HGadget,
    MatchingCutConstruction,
    classify_indep_deg3,
    color_3regular,
    color_3regular_bridgeless,
    color_max_deg3,
    h_gadget,
    in_indep_deg3_class,
    matching_cut_indep_deg3,
)
from .cuts import (
    EdgeColoring,
    EdgeCutCertificate,
    VertexColoring,
    VertexCutCertificate,
    find_matching_cut,
    find_proper_edge_cut,
    find_rainbow_vertex_cut,
    verify_matching_cut,
    verify_proper_edge_cut,
    verify_rainbow_vertex_cut,
)
from .graph import (
    GraphBuilder,
    GraphError,
    Multigraph,
    block_decomposition,
    bridges,
    build_graph,
    components,
    find_pattern,
    from_edges,
    perfect_matching,
    strip_pendants,
)
from .reductions import (
    Assignment,
    CnfFormula,
    ReductionArtifact,
    apply_operation_O,
    build_Gphi_nae,
    build_Gphi_rvd,
    build_Hphi_prime,
    decode_assignment,
    desimplify,
    edge_to_4cycle,
    lift_matching_cut,
    pad_with_path,
    project_matching_cut,
    rvd_variant_bipartite,
    rvd_variant_deg3,
)
from .sat import nae_sat_bruteforce, sat_bruteforce
from .solvers import (
    BudgetExceeded,
    VerificationError,
    chromatic_index,
    is_proper_disconnected,
    is_rainbow_vertex_disconnected,
    pd_exact,
    pd_is_one,
    pd_via_blocks,
    rvd_exact,
)
from .xcheck import CrossCheckReport, RunConfig, xcheck_nae, xcheck_pad, xcheck_sat_rvd

__version__ = "0.1.0"
