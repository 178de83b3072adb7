//! Congruences of finite additively idempotent semirings and of their
//! matrix semirings.
//!
//! A semiring is stored as a pair of operation tables ([`FiniteSemiring`]).
//! On top of that the crate computes principal congruences, decides
//! congruence-simplicity and subdirect irreducibility, builds matrix
//! semirings `M_n(S)`, generates the standard families (lattices,
//! Lukasiewicz chains, join-endomorphism semirings, extensions by a unity or
//! a least non-zero element) and checks the structural conditions that
//! characterize simple and subdirectly irreducible matrix semirings against
//! brute force.
//!
//! ```
//! use idemring::{gen_lukasiewicz, monolith, MatrixSemiring};
//!
//! let luk3 = gen_lukasiewicz(2).unwrap();
//! let m = monolith(&luk3).unwrap().expect("subdirectly irreducible");
//! assert_eq!(m.partition.labeled_blocks(&luk3), [vec!["0", "1"], vec!["2"]]);
//!
//! let m2 = MatrixSemiring::materialized(&luk3, 2).unwrap();
//! assert_eq!(m2.semiring().unwrap().size(), 81);
//! ```

pub mod checkers;
pub mod cli;
pub mod congruence;
pub mod constructions;
pub mod error;
pub mod matrix;
pub mod semiring;

pub use congruence::{
    generated_congruence, hat_congruence, is_congruence, is_congruence_simple, is_subdirectly_irreducible, lambda_rho,
    monolith, principal_congruence, tilde_congruence, Monolith, Partition, Translation, Violation,
};
pub use constructions::{
    adjoin_least, adjoin_unity, apply_transform, chain, corner, gen_boolean, gen_end0, gen_l2, gen_lukasiewicz, gen_xl,
    generate, lattice_from_order, FiniteLattice, LexGroupElement,
};
pub use error::{Error, Result};
pub use matrix::{extract_constant_pair, ConstantPair, Matrix, MatrixSemiring, Mode, WitnessChain};
pub use semiring::{
    classify, element_profile, is_isomorphic, natural_order, verify_axioms, ClassFlags, ElementProfile, FiniteSemiring,
    NaturalOrder, Tables,
};
