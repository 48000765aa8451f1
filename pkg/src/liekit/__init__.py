"""Exact invariants of finite-dimensional Lie algebras given by structure constants."""

from .algebra import (
    JacobiViolation,
    LieAlgebra,
    NotAnIdealError,
    InvariantReport,
    ad,
    center,
    change_basis,
    check_jacobi,
    invariants,
    is_ideal,
    is_nilpotent,
    lower_central_series,
    quotient,
)
from .coadjoint import IndexEstimate, bform, dual_basis, flat_orbit, generic_index, radical
from .derivations import (
    EngelVerdict,
    MatrixSpace,
    characteristic_nilpotency,
    derivation_space,
    engel_all_nilpotent,
    is_characteristically_nilpotent,
    is_derivation,
)
from .expr import ParseError, parse_coefficient
from .families import LieFamily, abelian, filiform_model, heisenberg, specialize, standard
from .fileformat import AlgebraFileError, load_algebra, parse_algebra, render_algebra
from .gab import gab, gab_family, gab_quotient, quotient_derivation_basis
from .gradings import (
    Dilations,
    NoDilations,
    Unknown,
    dilation_matrix,
    dilation_status,
    search_positive_diagonal_grading,
    verify_automorphism,
    verify_grading,
)
from .linalg import DimensionError, Matrix, Subspace, kernel_basis
from .polynomial import Polynomial
from .repro import ReproReport, repro_paper

__version__ = "0.1.0"
