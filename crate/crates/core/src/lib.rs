//! Clifford algebras over the complex numbers, their isotopic liftings, and
//! the octonion, su(n) and quark-flavor constructions built on them.

pub mod clifford;
pub mod error;
pub mod flavor;
pub mod isotopy;
pub mod lie;
pub mod linalg;
pub mod octonion;
pub mod random;
pub mod rep;

pub use clifford::{BasisBlade, Multivector, Signature};
pub use error::{Error, Result};
pub use isotopy::{IsoComplex, IsoContext};
pub use linalg::ComplexMatrix;
pub use num_complex::Complex64;
pub use rep::DiracRep;
