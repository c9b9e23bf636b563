"""Exact-arithmetic toolkit for quasi-filiform Leibniz algebras.

Everything runs over the Gaussian rationals, so each verified identity is an
exact equality.  The package provides the structure-constant catalog of the
classified nilpotent and solvable families, derivation-space computations
with nil-independence certificates, a staged polynomial constraint solver
for extension problems, and isomorphism-invariant fingerprints.
"""

__version__ = "0.1.0"

from .errors import CheckFailure, DomainError, InputError
from .scalars import Scalar, as_scalar, rational
from .linalg import (
    Matrix,
    Subspace,
    is_nilpotent_matrix,
    jordan_block_sizes,
    kernel,
    rref,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from .tensor import (
    StructureTensor,
    annihilators,
    apply_basis_change,
    bracket,
    is_ideal,
    is_isomorphism,
    is_lie,
    is_nilpotent_algebra,
    is_solvable_algebra,
    leibniz_check,
    natural_grading,
    nilindex,
    series,
    squares_ideal,
    tensor_from_json,
    tensor_to_json,
)
from .catalog import build, default_grid, get_spec, list_families, lnr_derivation_table, resolve_name
from .derivations import (
    check_prop31,
    check_prop32,
    derivation_space,
    flag_blocks,
    inner_derivations,
    is_derivation,
    max_nil_independent,
    table1,
)
from .sympoly import ConstraintSystem, PolyExpr, branch_on_factored, linear_eliminate
from .extensions import (
    build_skeleton,
    check_invariance,
    generate_constraints,
    lie_probe,
    probe_codim1_L,
    remark39_split,
    solve_extension,
    verify_catalog_extension,
)
from .invariants import characteristic_sequence, fingerprint, pairwise_distinguish

__all__ = [name for name in dir() if not name.startswith("_")]
