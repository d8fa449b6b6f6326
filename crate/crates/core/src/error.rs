use thiserror::Error;

use crate::clifford::Signature;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid signature Cl({p},{q}): p + q must not exceed {max}")]
    InvalidSignature { p: usize, q: usize, max: usize },

    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },

    #[error("blade mask {mask:#b} is out of range for {signature}")]
    InvalidBlade { mask: u32, signature: Signature },

    #[error("basis vector index {index} is out of range for {signature}")]
    InvalidBasisIndex { index: usize, signature: Signature },

    #[error("grade {grade} is out of range for {signature}")]
    GradeOutOfRange { grade: usize, signature: Signature },

    #[error("non-finite coefficient on blade {mask:#b}")]
    NonFinite { mask: u32 },

    #[error("element is not invertible (residual {residual:.3e})")]
    NonInvertible { residual: f64 },

    #[error("series did not converge after {terms} terms (relative tail {tail:.3e})")]
    Convergence { terms: usize, tail: f64 },

    #[error("generator set does not close: commutator ({i}, {j}) has residual {residual:.3e}")]
    ClosureViolation { i: usize, j: usize, residual: f64 },

    #[error("matrix is not in the span of the representation (residual {residual:.3e})")]
    NotInSpan { residual: f64 },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: String, found: String },

    #[error("isotopic contexts differ")]
    ContextMismatch,

    #[error("value is not proportional to the isounit (residual {residual:.3e})")]
    NotIsoScalar { residual: f64 },

    #[error("expected a paravector (grades 0 and 1 only)")]
    NotParavector,

    #[error("generator count {n} is out of range (expected {min}..={max})")]
    OutOfRange { n: usize, min: usize, max: usize },

    #[error("non-positive mass for flavor {flavor}: {value}")]
    NonPositiveMass { flavor: String, value: f64 },

    #[error("invalid mass bounds for flavor {flavor}: {reason}")]
    InvalidBounds { flavor: String, reason: String },

    #[error("state is not iso-normalized (⟨ψ|ζ⁻¹|ψ⟩ = {value})")]
    NotIsoNormalized { value: f64 },
}
