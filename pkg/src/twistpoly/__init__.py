"""Delta-matroids, twist polynomials and partial duality of ribbon graphs."""

from .errors import GuardError, HypothesisError, ImproperError, LabelError, TwistPolyError
from .gf2 import (
    SymMatGF2,
    delta_matroid_of_matrix,
    is_binary,
    principal_nonsingular,
    reconstruct_matrix,
)
from .ribbon import (
    Edge,
    GraphCounts,
    RibbonGraph,
    boundary_count,
    delta_matroid_of_graph,
    graph_counts,
    make_ribbon_graph,
    partial_dual_genus,
    partial_dual_polynomial,
    random_ribbon_graph,
)
from .setsys import (
    ElementFlags,
    SetSystem,
    TypePair,
    WidthProfile,
    delete,
    element_flags,
    element_type,
    is_delta_matroid,
    is_even,
    make_set_system,
    strata,
    twist,
    twist_width_data,
    width_profile,
)
from .widthpoly import (
    PolyReport,
    WidthPolynomial,
    check_theorem3,
    check_theorem5,
    classify,
    gaps,
    twist_polynomial,
)

__version__ = "0.1.0"
