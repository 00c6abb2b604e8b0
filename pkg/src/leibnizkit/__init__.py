"""Exact computations with finite-dimensional left Leibniz algebras."""

from .algebra import (
    Algebra,
    Classification,
    SubalgebraHandle,
    Verdict,
    analyze_action,
    annihilators,
    bracket,
    central_series,
    centers,
    check_left_leibniz,
    classify_subalgebra,
    direct_sum,
    generated_subalgebra,
    idealizer,
    is_ideal,
    is_left_ideal,
    is_lie,
    is_nilpotent,
    leibniz_kernel,
    left_idealizer,
    quotient,
    right_idealizer,
    subalgebra,
    upper_idealizer_series,
)
from .derivations import DerivationSpace, check_center_invariance, derivation_space, is_derivation
from .exactlinalg import Matrix, Subspace, contains, nullspace, rref, span, subspace_intersect, subspace_sum
from .latticescan import (
    PropertyReport,
    ScanBudget,
    check_property_IorSI,
    enumerate_ideals,
    enumerate_subalgebras,
    enumerate_subspaces,
    nilpotent_radical,
    verify_declared_radical,
)
from .report import Check, Report, Status
from .scalars import GF, QQ, Answer, FieldSpec, Scalar, function_field, is_2_closed, is_square, quadratic_has_root

__version__ = "0.1.0"
