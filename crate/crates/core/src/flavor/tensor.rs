use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::rep::DiracRep;

/// Image of the reversion of the multivector represented by `m`.
pub fn reversion_image(rep: &DiracRep, m: &ComplexMatrix) -> Result<ComplexMatrix> {
    rep.rep(&rep.rep_inverse(m)?.reversion())
}

/// `ζ⁻¹a ⊗ b (ζ⁻¹Γ₀)~*`, with `~` the image of reversion and `*` entrywise
/// complex conjugation. `zeta`, `a` and `b` are 4×4 images in the Dirac
/// representation.
pub fn iso_tensor(
    rep: &DiracRep,
    zeta: &ComplexMatrix,
    a: &ComplexMatrix,
    b: &ComplexMatrix,
) -> Result<ComplexMatrix> {
    let zeta_inv = zeta.try_inverse().ok_or(Error::NonInvertible {
        residual: f64::INFINITY,
    })?;
    let residual = (&zeta_inv * zeta).max_abs_diff(&ComplexMatrix::identity(4));
    if !zeta_inv.is_finite() || residual > 1e-8 {
        return Err(Error::NonInvertible { residual });
    }
    let dressing = reversion_image(rep, &zeta_inv.try_mul(rep.gamma(0))?)?.conj();
    Ok(zeta_inv.try_mul(a)?.kron(&b.try_mul(&dressing)?))
}
