//! Lie-algebra generators inside Clifford algebras and a numerical
//! structure-constant oracle.

mod generators;
mod structure;

pub use generators::{
    printed_cartan_generator, su3_case1_generators, su3_case2_generators, su6_generators,
    su_n_generators, AlgebraLabel, GeneratorSet,
};
pub use structure::{
    span_rank, closure_residuals, structure_constants, StructureConstants, CLOSURE_TOLERANCE,
};
