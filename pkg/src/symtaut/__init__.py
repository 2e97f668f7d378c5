"""Exact-arithmetic tautological ring, theta filtration and Abel-Jacobi face
computations on symmetric products of curves."""

from .classes import (
    GonalityBounds,
    admits_series,
    bn_canonical_class,
    bn_face_generator,
    bn_locus_class,
    castelnuovo_count,
    contractibility_index,
    diagonal_dual_divisor,
    gonality_index,
    hyperelliptic_bn_class,
    hyperelliptic_face_generator,
    pushed_subordinate_class,
    rho,
    subordinate_class,
    subordinate_face_generator,
)
from .faces import (
    Certificate,
    FaceChain,
    FaceDescriptor,
    NoRegimeError,
    Nontriviality,
    Regime,
    RegionCell,
    aj_span,
    bn_ray,
    bn_ray_perfect,
    dim_bounds,
    expected_face_dim,
    face_chain,
    nontriviality,
    region_map,
    regime,
)
from .filtration import (
    PerpComparison,
    ThetaPiece,
    perp_equality_case,
    theta_basis,
    theta_codim,
    theta_dim,
    theta_perp,
    theta_piece,
    theta_subspace,
)
from .linalg import RatMatrix, SingularMatrixError, Subspace, kernel_basis, rank, solve
from .ring import (
    ClassSyntaxError,
    CurveKind,
    CurveParams,
    NormalForm,
    ParameterError,
    TautClass,
    binom,
    equals,
    eval_top,
    generic_gonality,
    gram_matrix,
    intersection_number,
    is_positive_multiple,
    is_zero,
    monomial,
    multiply,
    normal_form,
    orthogonal_in_complement,
    pairing,
    parse_class,
    piece_dim,
    piece_rank,
    pretty,
    standard_basis,
    theta_class,
    unit,
    x_class,
    zero_class,
)

__version__ = "0.1.0"
