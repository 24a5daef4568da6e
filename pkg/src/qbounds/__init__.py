"""Signless Laplacian spectral radius of digraphs: exact-ish computation,
a catalog of upper bounds, dominance verification, and row reconstruction.

The signless Laplacian of a digraph is Q = D + A where D is the diagonal
outdegree matrix and A the (0,1) adjacency matrix. Its spectral radius q
is real and nonnegative; every bound in `bounds` is an upper estimate of
q computable from degree data alone.
"""

from .bounds import (
    ArcWeightFunction,
    BoundId,
    BoundValue,
    DESCRIPTIONS,
    ROW_ORDER,
    TABLE_ORDER,
    all_bounds,
    bound_arc_deg_sum,
    bound_deg_extremes,
    bound_deg_plus_avg,
    bound_generic_f,
    bound_hong_you,
    bound_indeg_sqrt,
    bound_maxdeg_plus_2,
    bound_oval_avg,
    bound_oval_geomean,
    bound_weight_deg_sum,
    bound_weight_sqrt_prod,
    bound_weight_sqrt_sum,
    bound_weight_sum_sqrt,
    witness_value,
)
from .digraph import (
    Classification,
    DegreeProfile,
    Digraph,
    SccDecomposition,
    adjacency,
    classify,
    degree_profile,
    from_arc_list,
    gen_bidirectional_complete,
    gen_bidirectional_star,
    gen_bipartite_semiregular,
    gen_directed_cycle,
    gen_random_strongly_connected,
    is_strongly_connected,
    scc,
)
from .edgelist import EdgeListParseError, parse_edge_list, serialize_edge_list
from .spectral import (
    ConvergenceError,
    OvalCheck,
    OvalRegion,
    SignlessLaplacian,
    SpectralResult,
    build_q,
    oval_containment,
    row_sum_bracket,
    similarity_row_sums,
    spectral_radius,
)
from .verify import (
    INVARIANTS,
    PRESETS,
    RandomCorpusSpec,
    ReconstructionMatch,
    ReconstructionReport,
    ReconstructionTarget,
    RemarkReport,
    SweepFailure,
    SweepReport,
    canonical_form,
    random_corpus,
    reconstruct,
    remark_check,
    sweep,
)

__version__ = "0.1.0"

__all__ = [
    "ArcWeightFunction",
    "BoundId",
    "BoundValue",
    "Classification",
    "ConvergenceError",
    "DegreeProfile",
    "DESCRIPTIONS",
    "Digraph",
    "EdgeListParseError",
    "INVARIANTS",
    "OvalCheck",
    "OvalRegion",
    "PRESETS",
    "RandomCorpusSpec",
    "ReconstructionMatch",
    "ReconstructionReport",
    "ReconstructionTarget",
    "RemarkReport",
    "ROW_ORDER",
    "SignlessLaplacian",
    "SccDecomposition",
    "SpectralResult",
    "SweepFailure",
    "SweepReport",
    "TABLE_ORDER",
    "adjacency",
    "all_bounds",
    "bound_arc_deg_sum",
    "bound_deg_extremes",
    "bound_deg_plus_avg",
    "bound_generic_f",
    "bound_hong_you",
    "bound_indeg_sqrt",
    "bound_maxdeg_plus_2",
    "bound_oval_avg",
    "bound_oval_geomean",
    "bound_weight_deg_sum",
    "bound_weight_sqrt_prod",
    "bound_weight_sqrt_sum",
    "bound_weight_sum_sqrt",
    "build_q",
    "canonical_form",
    "classify",
    "degree_profile",
    "from_arc_list",
    "gen_bidirectional_complete",
    "gen_bidirectional_star",
    "gen_bipartite_semiregular",
    "gen_directed_cycle",
    "gen_random_strongly_connected",
    "is_strongly_connected",
    "oval_containment",
    "parse_edge_list",
    "random_corpus",
    "reconstruct",
    "remark_check",
    "row_sum_bracket",
    "scc",
    "serialize_edge_list",
    "similarity_row_sums",
    "spectral_radius",
    "sweep",
    "witness_value",
    "__version__",
]
