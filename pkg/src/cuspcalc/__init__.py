"""Exact combinatorial calculus of surface cusp singularities.

Cusp cycles, their duals and charges, SL2(Z) monodromy and link torsion,
blow-up calculus with toric-model search, lci classification, one-vertex
covers and cyclic lattice quotients, trace families, and validation of
triangulated integral-affine spheres.
"""

from .blowups import (
    Move,
    MoveScript,
    apply_script,
    corner_blow_down,
    corner_blow_up,
    has_rational_dual,
    internal_blow_down,
    internal_blow_up,
    is_toric,
    reduce_ones,
    toric_model_search,
)
from .covers import (
    NWCoverResult,
    chart_action_matrix,
    cover_compatible,
    dual_class_of_matrix,
    enumerate_cycles_with_trace,
    matrix_to_cycle,
    nw_cover,
    quotient_cycle,
    subgroup_order,
)
from .cycles import (
    AnticanSeq,
    BlockForm,
    CuspCycle,
    blocks,
    canonical_form,
    charge,
    dual_cycle,
    embdim,
    is_hyperbolic,
    lambda_rank,
    minimal_period,
    monodromy,
    multiplicity,
    same_cycle,
    torsion_group,
    trace,
)
from .errors import CuspError
from .exact_arith import (
    AbelianInvariants,
    IntMat2,
    QuadModule,
    QuadSurd,
    eigen_unit,
    hj_expansion,
    mult_matrix,
    smith_normal_form,
    snf_diagonal,
    surd_from_cycle,
)
from .iasurface import (
    IAComplex,
    PseudoFan,
    boundary_internal_blow_up,
    boundary_node_smoothing,
    cyclic_symmetry,
    pseudo_fan,
    total_charge,
    validate_type_iii,
    vertex_is_toric,
)
from .lci import (
    COMPLETE_INTERSECTION,
    HYPERSURFACE,
    NOT_LCI,
    LciClass,
    LciEquation,
    Pi,
    T,
    classify,
    is_lci,
    pi_cycle,
    t_cycle,
)

__version__ = "0.1.0"
