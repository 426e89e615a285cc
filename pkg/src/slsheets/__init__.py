"""Invariant factors, sheets and orbit closures for the adjoint action of SL(n)."""
from .centralizer import (
    MatrixSubspace,
    centralizer,
    coadjoint_invariant_dim,
    derived_subalgebra,
    is_abelian,
    killing_orthogonality_check,
    lemma_basis_check,
)
from .closure import (
    GuardLimitError,
    IdealGenerators,
    closure_contains,
    evaluate_generators,
    symbolic_char_matrix,
    weyman_generators,
)
from .matrices import (
    InvariantFactorProfile,
    RationalMatrix,
    all_minors,
    char_matrix,
    gcd_minor_profile,
    kernel_dim,
    nilpotent_matrix,
)
from .multipoly import MultiPoly
from .partitions import Partition, conjugate, partitions
from .poly import Poly, monic, poly_add, poly_div_rem, poly_gcd, poly_mul, poly_rescale, root_sum
from .quotient import (
    QuotientPoint,
    fiber_contains,
    quotient_point,
    reconstruct_Q,
    scale_quotient_point,
    section,
)
from .sheets import SheetDescriptor, classify_sheet, enumerate_sheets, nilpotent_representative

__version__ = "0.1.0"
