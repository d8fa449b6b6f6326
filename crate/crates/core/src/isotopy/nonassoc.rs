use crate::clifford::Multivector;
use crate::error::{Error, Result};

/// Isotopes of an arbitrary, possibly non-associative, bilinear product `∘`.
///
/// With associative `∘` all three groupings coincide with `A ζ⁻¹ B`.
pub struct BaseIsotope<P> {
    product: P,
    zeta: Multivector,
    zeta_inv: Multivector,
}

impl<P> BaseIsotope<P>
where
    P: Fn(&Multivector, &Multivector) -> Result<Multivector>,
{
    /// Checks `ζ ∘ ζ⁻¹ = ζ⁻¹ ∘ ζ = 1` under the supplied product.
    pub fn new(product: P, zeta: Multivector, zeta_inv: Multivector) -> Result<Self> {
        let one = Multivector::one(zeta.signature());
        let residual = product(&zeta, &zeta_inv)?
            .max_abs_diff(&one)
            .max(product(&zeta_inv, &zeta)?.max_abs_diff(&one));
        if residual > 1e-10 {
            return Err(Error::NonInvertible { residual });
        }
        Ok(Self {
            product,
            zeta,
            zeta_inv,
        })
    }

    pub fn zeta(&self) -> &Multivector {
        &self.zeta
    }

    pub fn zeta_inv(&self) -> &Multivector {
        &self.zeta_inv
    }

    pub fn base_product(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        (self.product)(a, b)
    }

    /// `A ∘ (ζ⁻¹ ∘ B)`.
    pub fn right_product(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        (self.product)(a, &(self.product)(&self.zeta_inv, b)?)
    }

    /// `(A ∘ ζ⁻¹) ∘ B`.
    pub fn left_product(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        (self.product)(&(self.product)(a, &self.zeta_inv)?, b)
    }

    /// `(A ∘ ζ) ∘ (ζ⁻¹ ∘ B)`.
    pub fn x_product(&self, a: &Multivector, b: &Multivector) -> Result<Multivector> {
        let left = (self.product)(a, &self.zeta)?;
        let right = (self.product)(&self.zeta_inv, b)?;
        (self.product)(&left, &right)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::clifford::{BasisBlade, Signature};
    use crate::isotopy::IsoContext;
    use num_complex::Complex64;

    #[test]
    fn associative_base_collapses_groupings() {
        let sig = Signature::euclidean3();
        let zeta = Multivector::from_terms(
            sig,
            [
                (BasisBlade::SCALAR, Complex64::new(1.0, 0.0)),
                (BasisBlade(0b11), Complex64::new(0.5, 0.0)),
            ],
        )
        .unwrap();
        let ctx = IsoContext::new(zeta.clone()).unwrap();
        let iso = BaseIsotope::new(
            |a: &Multivector, b: &Multivector| a.geometric_product(b),
            zeta,
            ctx.zeta_inv().clone(),
        )
        .unwrap();
        let a = Multivector::vector(sig, &[1.0, -2.0, 0.5]).unwrap();
        let b = Multivector::blade(sig, BasisBlade(0b110), 3.0);
        let reference = ctx.iso_product(&a, &b).unwrap();
        assert!(iso.right_product(&a, &b).unwrap().approx_eq(&reference, 1e-12));
        assert!(iso.left_product(&a, &b).unwrap().approx_eq(&reference, 1e-12));
        let x = iso.x_product(&a, &b).unwrap();
        assert!(x.approx_eq(&(&a * &b), 1e-12));
    }

    #[test]
    fn rejects_bad_inverse() {
        let sig = Signature::euclidean3();
        let z = Multivector::scalar(sig, 2.0);
        let r = BaseIsotope::new(
            |a: &Multivector, b: &Multivector| a.geometric_product(b),
            z.clone(),
            z,
        );
        assert!(matches!(r, Err(Error::NonInvertible { .. })));
    }
}
