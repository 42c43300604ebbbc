"""Exact verification of derivation-algebra and holomorph constructions
on finite-dimensional Lie algebras over the rationals."""

from .linalg import Matrix, Subspace, nullspace, rank, rref, solve, subspace_ops
from .algebra import (AntisymmetryConflict, CompletenessEvidence, DependentBasis,
                      Derivation, DerivationAlgebra, IndexOutOfRange,
                      InternalConsistencyError, JacobiViolation, LieAlgebra,
                      LieError, NotClosed, abelian, center, derivation_algebra,
                      derived_subalgebra, induced_lie_structure,
                      inner_derivations, is_complete, lie_algebra_from_table,
                      make_lie_algebra)
from .dtheory import (DCompletenessEvidence, DDerivation, DDerivationSpace,
                      SemidirectSum, build_h, d_algebra, d_bracket, d_center,
                      d_derivations, der_action, inner_d_derivation,
                      is_d_complete)
from .fullgraph import (FullGraph, VerificationReport, build_full_graph,
                        h_derivation, verify, verify_center_lemma,
                        verify_theorem1, verify_theorem2)
from .catalog import (AlgebraFileError, CatalogEntry, CatalogError, catalog,
                      lookup, parse_algebra_file, serialize_algebra)

__version__ = "0.1.0"
