"""Exact mutation of skew-symmetric integer matrices and the mod-4 delta invariant."""

__version__ = "0.1.0"

from .linalg import (
    DimensionError,
    IntMatrix,
    InvariantViolation,
    NotSkewError,
    PermutationMatrix,
    SkewMatrix,
    SmithReport,
    conjugate,
    det_exact,
    elementary,
    smith_report,
)
from .mutation import (
    MutationSequence,
    ReplicatingMatrix,
    mutate,
    mutate_entrywise,
    mutate_sequence,
    permute,
    replicating_matrix,
)
from .delta import Companion, companion, delta, delta_parity_class, upper_part
from .congruence import (
    CongruenceWitness,
    RngConfig,
    chain_matrix,
    counterexample_pair,
    random_skew,
    random_unimodular,
    search_delta_discrepancy,
    shear_matrix,
    verify_witness,
)
from .orbit import bounded_equivalence, canonical_form, invariant_report, orbit_bfs
from .markov import c_invariant, is_cyclic_3, markov_constant, markov_delta_identity
from .arf import arf_invariant, q_value, rank_mod2, refinement, symplectic_basis

__all__ = [
    "DimensionError",
    "IntMatrix",
    "InvariantViolation",
    "NotSkewError",
    "PermutationMatrix",
    "SkewMatrix",
    "SmithReport",
    "conjugate",
    "det_exact",
    "elementary",
    "smith_report",
    "MutationSequence",
    "ReplicatingMatrix",
    "mutate",
    "mutate_entrywise",
    "mutate_sequence",
    "permute",
    "replicating_matrix",
    "Companion",
    "companion",
    "delta",
    "delta_parity_class",
    "upper_part",
    "CongruenceWitness",
    "RngConfig",
    "chain_matrix",
    "counterexample_pair",
    "random_skew",
    "random_unimodular",
    "search_delta_discrepancy",
    "shear_matrix",
    "verify_witness",
    "bounded_equivalence",
    "canonical_form",
    "invariant_report",
    "orbit_bfs",
    "c_invariant",
    "is_cyclic_3",
    "markov_constant",
    "markov_delta_identity",
    "arf_invariant",
    "q_value",
    "rank_mod2",
    "refinement",
    "symplectic_basis",
]
