use num_complex::Complex64;

use super::IsoContext;
use crate::clifford::Multivector;
use crate::error::{Error, Result};

/// Proportionality tolerance for iso-scalars.
pub const ISO_SCALAR_TOLERANCE: f64 = 1e-10;

/// An isocomplex number `aζ`.
#[derive(Debug, Clone, PartialEq)]
pub struct IsoComplex {
    context: IsoContext,
    scalar: Complex64,
    value: Multivector,
}

impl IsoComplex {
    pub fn new(context: &IsoContext, scalar: impl Into<Complex64>) -> Self {
        let scalar = scalar.into();
        Self {
            value: context.zeta().scale(scalar),
            context: context.clone(),
            scalar,
        }
    }

    /// Accepts `value` if it is a complex multiple of ζ.
    pub fn from_value(context: &IsoContext, value: Multivector) -> Result<Self> {
        let zeta = context.zeta();
        zeta.check_same(&value)?;
        let dot: Complex64 = zeta
            .terms()
            .map(|(b, c)| c.conj() * value.coefficient(b))
            .sum();
        let scalar = dot / zeta.norm().powi(2);
        let residual = value.max_abs_diff(&zeta.scale(scalar));
        if residual > ISO_SCALAR_TOLERANCE {
            return Err(Error::NotIsoScalar { residual });
        }
        Ok(Self {
            context: context.clone(),
            scalar,
            value,
        })
    }

    pub fn scalar(&self) -> Complex64 {
        self.scalar
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn context(&self) -> &IsoContext {
        &self.context
    }

    fn check_context(&self, other: &IsoComplex) -> Result<()> {
        if self.context != other.context {
            return Err(Error::ContextMismatch);
        }
        Ok(())
    }

    /// `(a₁ + a₂) ζ`, formed from the two values.
    pub fn iso_add(&self, other: &IsoComplex) -> Result<IsoComplex> {
        self.check_context(other)?;
        Self::from_value(&self.context, self.value.try_add(&other.value)?)
    }

    /// `𝔞₁ ζ⁻¹ 𝔞₂ = (a₁a₂) ζ`, formed by the ⋄ product of the values.
    pub fn iso_mul(&self, other: &IsoComplex) -> Result<IsoComplex> {
        self.check_context(other)?;
        Self::from_value(&self.context, self.context.iso_product(&self.value, &other.value)?)
    }

    /// `𝔞 ⋄ A = aA`.
    pub fn act(&self, a: &Multivector) -> Result<Multivector> {
        self.context.iso_product(&self.value, a)
    }
}
