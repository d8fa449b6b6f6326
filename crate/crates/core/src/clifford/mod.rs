//! Sparse multivector arithmetic over `Cl(p,q) ⊗ C`.

mod blade;
mod exp;
mod inverse;
mod multivector;
mod signature;

pub use blade::{blade_product, reorder_sign, BasisBlade};
pub(crate) use exp::exp_series;
pub use exp::{EXP_MAX_TERMS, EXP_TAIL_TOLERANCE};
pub use inverse::INVERSE_RESIDUAL_TOLERANCE;
pub use multivector::{Multivector, PRUNE_THRESHOLD};
pub use signature::{Signature, MAX_DIMENSION};
