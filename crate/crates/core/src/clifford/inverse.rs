use num_complex::Complex64;

use super::Multivector;
use crate::error::{Error, Result};
use crate::rep::regular_representation;

/// Largest accepted `|a·a⁻¹ − 1|` before an element is declared singular.
pub const INVERSE_RESIDUAL_TOLERANCE: f64 = 1e-8;

impl Multivector {
    /// Two-sided inverse.
    ///
    /// Scalars and versor-like elements (where `aã` or `aā` is a scalar) are
    /// inverted directly; everything else goes through a dense solve against
    /// the left-regular representation. Elements whose solve leaves a residual
    /// above [`INVERSE_RESIDUAL_TOLERANCE`] are rejected.
    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::NonInvertible {
                residual: f64::INFINITY,
            });
        }
        let sig = self.signature();
        let scale = self.l1_norm();

        if self.grades() == [0] {
            return Ok(Self::scalar(sig, self.scalar_part().inv()));
        }

        for candidate in [self.reversion(), self.conjugation(), self.grade_involution()] {
            let n = self.geometric_product(&candidate)?;
            if n.grades() == [0] && n.scalar_part().norm() > 1e-12 * scale * scale {
                let inv = candidate.scale(n.scalar_part().inv());
                if self.inverse_residual(&inv)? <= INVERSE_RESIDUAL_TOLERANCE {
                    return Ok(inv);
                }
            }
        }

        let reg = regular_representation(self);
        let mut rhs = vec![Complex64::new(0.0, 0.0); sig.blade_count()];
        rhs[0] = Complex64::new(1.0, 0.0);
        let x = reg.solve(&rhs).ok_or(Error::NonInvertible {
            residual: f64::INFINITY,
        })?;
        if x.iter().any(|c| !(c.re.is_finite() && c.im.is_finite())) {
            return Err(Error::NonInvertible {
                residual: f64::INFINITY,
            });
        }
        let inv = Self::from_dense(sig, &x)?;
        let residual = self.inverse_residual(&inv)?;
        if residual > INVERSE_RESIDUAL_TOLERANCE {
            return Err(Error::NonInvertible { residual });
        }
        Ok(inv)
    }

    fn inverse_residual(&self, inv: &Multivector) -> Result<f64> {
        let one = Self::one(self.signature());
        let left = self.geometric_product(inv)?.max_abs_diff(&one);
        let right = inv.geometric_product(self)?.max_abs_diff(&one);
        Ok(left.max(right))
    }
}
