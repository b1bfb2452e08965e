"""Polynomial representations of GL_n restricted to monomial matrices and S_n."""

from .glrestrict import gay_check, restrict_gl_irrep, restriction_table, symmetrized_weight_invariants
from .kernels import BACKEND
from .labels import (
    AlgebraicIrrepLabel,
    WeightedPermLabel,
    decompose_perm_module,
    dimension,
    format_sequence,
    parse_sequence,
    restrict_to_symmetric_group,
    sequence,
    tensor_power_multiplicity,
    tensor_with_defining,
)
from .multisets import Multiset, MultisetPartition, enumerate_multiset_partitions
from .partitions import ParseError, kostka, littlewood_richardson, parse_partition
from .schur_weyl import BudgetExceeded, balanced_dimension, endomorphism_dimension, schur_weyl_check
from .symprod import (
    decompose_sym_product_to_irreps,
    decompose_sym_product_to_perm,
    invariant_dimension,
    invariant_dimension_in_weight,
    sym_product_specht_multiplicities,
    tensor_weighted_perm,
    weak_foulkes_scan,
)
from .verify import oracle_compare

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
