//! Generators for the concrete semiring families and the extensions
//! between them.

mod end0;
mod generators;
mod lattice;
mod lex;
mod spec;

pub use end0::{end0, gen_end0, gen_xl, End0, JoinEndomorphism, MAX_END0_LATTICE};
pub use generators::{adjoin_least, adjoin_unity, corner, gen_boolean, gen_l2, gen_lukasiewicz};
pub use lattice::{chain, lattice_from_order, small_lattices, FiniteLattice, LatticeFile};
pub use lex::{lex_cmp, lex_inv, lex_join, lex_meet, lex_mul, mv_product, sample_interval, LexGroupElement};
pub use spec::{apply_transform, generate};
