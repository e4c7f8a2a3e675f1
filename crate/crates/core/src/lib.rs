//! Diagrams, permutations and candidate Casimir invariants for quotients of
//! the strictly lower-triangular nilpotent matrix algebra by regular root
//! ideals.
//!
//! The pipeline for one quotient: validate the ideal ([`roots`]), run the
//! greedy symbol-filling procedure ([`diagram`]) whose cross count is the
//! index and whose pair count is the maximal coadjoint orbit dimension,
//! factor the associated permutation through the cross reflections
//! ([`perm`]), extract candidate invariants from minors of the
//! characteristic matrix ([`invariants`]), and cross-validate everything
//! against the Poisson structure, both symbolically and by rank of the
//! structure matrix at random points of a large prime field ([`poisson`],
//! [`verify`]).

pub mod diagram;
pub mod invariants;
pub mod modp;
pub mod perm;
pub mod poisson;
pub mod poly;
pub mod roots;
pub mod verify;

pub use diagram::{Diagram, DiagramStats, StepRecord, Symbol};
pub use invariants::{
    all_candidates, candidate, characteristic_matrix, factor_by_earlier, index_sets, CaseTag,
    IndexSets, InvariantCandidate,
};
pub use perm::{
    associated_permutation, classify_by_signs, column_prefix_product, partial_products,
    reflection, reflection_product, Permutation, SignClassifier, SymbolClass,
};
pub use poisson::{
    basis_bracket, check_invariant, generic_rank_oracle, jacobian_rank, poisson_bracket,
    BasisBracket, BracketTable, Invariance, OracleConfig, OracleReport, PoissonError,
};
pub use poly::{Monomial, SparsePoly, SymbolicMatrix, Var};
pub use roots::{
    enumerate_regular_ideals, is_regular, positive_roots_desc, positive_roots_rowmajor,
    precedence, IdealError, RegularIdeal, Root,
};
pub use verify::{
    conjecture_checks, oracle_check, parity_check, structural_checks, CandidateVerdict,
    CheckOutcome, ConjectureAnomaly, ConjectureOutcome, OracleCheck,
};
