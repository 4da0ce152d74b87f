"""Exact hull/LCD analysis for linear codes defined by q-polynomial
operators over finite field towers GF(p) < GF(q) < GF(q^m)."""

from .errors import (
    ConsistencyError,
    DegenerateInput,
    DependentGenerators,
    NotADivisor,
    NotApplicable,
    NotNormalBasis,
    NotPrime,
    ParseError,
    PreconditionFailed,
    QPolyHullError,
    SizeCapExceeded,
    TowerMismatch,
)
from .field import (
    DEFAULT_SIZE_CAP,
    Basis,
    FieldTower,
    SubfieldView,
    build_tower,
    find_normal_element,
    frobenius_pow,
    trace_rel,
)
from .matrix import FqMatrix
from .linops import (
    QPoly,
    op_image_basis,
    op_kernel_basis,
    op_matrix,
    op_rank,
    qpoly_adjoint,
    qpoly_compose,
    qpoly_eval,
)
from .gram import (
    HullReport,
    canonical_orbit_rep,
    gram_from_structure,
    gram_of_operator,
    hull_dim,
    structure_matrices,
    universal_null_space,
)
from .rdhull import (
    RdCode,
    RdHullReport,
    common_kernel,
    delsarte_pair,
    generator_gram,
    is_degenerate,
    rd_hull,
)
from .pencil import (
    Char2Reduction,
    PencilData,
    build_pencil,
    char2_reduction,
    discriminant_poly,
    family_operator,
    gram_at,
    gram_tilde,
    is_self_adjoint,
)
from .frob import (
    FrobHullReport,
    FrobParams,
    circulant_structure,
    eps_indicators,
    frequency_multiplicity,
    frob_adjoint,
    frob_kernel_dim,
    hull_frob,
    isotropy_check,
    nu_at_root,
    stratum_hull_at_root,
)
from .oracle import (
    ENUM_CAP,
    ORACLE_CAP,
    SubspaceFq,
    adjoint_route_hull,
    delsarte_full_system_hull,
    hull_by_definition,
    intersect,
    operator_image,
    operator_kernel,
    trace_dual,
    trace_dual_enumerated,
)
from .sweep import (
    DEFAULT_SWEEP_CAP,
    EbitReport,
    PointRecord,
    StrataTable,
    ebit_report,
    spectrum_affine,
    sweep_p1,
)

__version__ = "0.1.0"
